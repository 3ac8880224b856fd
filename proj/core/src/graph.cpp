#include "qps/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "qps/errors.hpp"
#include "union_find.hpp"

namespace qps {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), incident_(n) {
  if (n == 0) throw InvalidInput("graph needs at least one vertex");
  if (n > kMaxVertices) throw CapExceeded("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    auto& ed = edges_[e];
    if (ed.lo > ed.hi) std::swap(ed.lo, ed.hi);
    if (ed.lo == ed.hi) throw InvalidInput("loop at vertex " + std::to_string(ed.lo + 1));
    if (ed.hi >= n) throw InvalidInput("edge endpoint out of range");
    incident_[ed.lo].push_back(e);
    incident_[ed.hi].push_back(e);
  }
}

Graph Graph::from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({std::min(a, b), std::max(a, b)});
  return Graph(n, std::move(edges));
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  auto edges = path(n).edges();
  if (n >= 2) edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

int Graph::sign(Vertex i, EdgeIndex e) const {
  const Edge& ed = edges_.at(e);
  if (i == ed.lo) return 1;
  if (i == ed.hi) return -1;
  return 0;
}

std::vector<std::size_t> Graph::component_labels() const {
  detail::UnionFind uf(n_);
  for (const auto& e : edges_) uf.unite(e.lo, e.hi);
  std::vector<std::size_t> root_label(n_, n_), labels(n_);
  std::size_t next = 0;
  for (Vertex v = 0; v < n_; ++v) {
    auto r = uf.find(v);
    if (root_label[r] == n_) root_label[r] = next++;
    labels[v] = root_label[r];
  }
  return labels;
}

std::size_t Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

VertexSet Graph::all_vertices() const noexcept {
  return n_ >= 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

EdgeSet Graph::all_edges() const noexcept {
  return edges_.size() >= 64 ? ~EdgeSet{0} : (EdgeSet{1} << edges_.size()) - 1;
}

WeightAssignment WeightAssignment::uniform(std::size_t m, const Rational& value) {
  return WeightAssignment{std::vector<Rational>(m, value)};
}

WeightAssignment WeightAssignment::from_integers(const std::vector<long>& values) {
  WeightAssignment w;
  for (long v : values) w.q.emplace_back(v);
  return w;
}

bool WeightAssignment::all_nonzero() const {
  return std::all_of(q.begin(), q.end(), [](const Rational& r) { return r != 0; });
}

bool WeightAssignment::is_uniform() const {
  return std::all_of(q.begin(), q.end(), [&](const Rational& r) { return r == q.front(); });
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected a nonnegative integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  WeightAssignment weights;
  bool explicit_weights = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto tok = tokens(line);

    if (!have_header) {
      if (tok.size() != 1) throw ParseError(line_no, "expected the vertex count on its own line");
      n = parse_index(tok[0], line_no, "vertex count");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      if (n > kMaxVertices) throw ParseError(line_no, "vertex count exceeds " + std::to_string(kMaxVertices));
      have_header = true;
      continue;
    }

    if (tok.size() != 2 && tok.size() != 3) throw ParseError(line_no, "expected 'i j' or 'i j q'");
    auto i = parse_index(tok[0], line_no, "vertex");
    auto j = parse_index(tok[1], line_no, "vertex");
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
    }
    if (i == j) throw ParseError(line_no, "loop edge at vertex " + std::to_string(i));
    Rational q(1);
    if (tok.size() == 3) {
      try {
        q = parse_rational(tok[2]);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(line_no, ex.what());
      }
      explicit_weights = true;
    }
    edges.push_back({std::min(i, j) - 1, std::max(i, j) - 1});
    weights.q.push_back(q);
    if (edges.size() > kMaxEdgeBits) throw ParseError(line_no, "too many edges");
  }
  if (!have_header) throw ParseError(line_no, "missing vertex count");
  return ParsedGraph{Graph(n, std::move(edges)), std::move(weights), explicit_weights};
}

ParsedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const Graph& g, const WeightAssignment& q) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).lo + 1 << ' ' << g.edge(e).hi + 1 << ' ' << q[e].get_str() << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Cuts, scores, reachability

CutData cut_data(const Graph& g, VertexSet subset) {
  CutData c;
  c.subset = subset;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    bool lo_in = (subset >> ed.lo) & 1U;
    bool hi_in = (subset >> ed.hi) & 1U;
    if (lo_in == hi_in) continue;
    ++c.d;
    if (lo_in) {
      ++c.up;
      c.up_edges |= EdgeSet{1} << e;
    } else {
      ++c.down;
      c.down_edges |= EdgeSet{1} << e;
    }
  }
  return c;
}

std::vector<Rational> score_vector(const Graph& g, const WeightAssignment& q, Orientation o) {
  if (q.size() != g.edge_count()) throw InvalidInput("weight count does not match edge count");
  std::vector<Rational> d(g.vertex_count(), Rational(0));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) d[o.head(g, e)] += q[e];
  return d;
}

ReachabilityOracle::ReachabilityOracle(const Graph& g) : n_(g.vertex_count()), all_(g.all_vertices()) {
  for (const auto& e : g.edges()) {
    lo_.push_back(e.lo);
    hi_.push_back(e.hi);
  }
}

VertexSet ReachabilityOracle::reaching(Orientation o, Vertex root) const {
  // pred[v]: tails of edges with head v
  VertexSet pred[kMaxVertices] = {};
  for (std::size_t e = 0; e < lo_.size(); ++e) {
    if (o.points_down(e)) pred[lo_[e]] |= VertexSet{1} << hi_[e];
    else pred[hi_[e]] |= VertexSet{1} << lo_[e];
  }
  VertexSet seen = VertexSet{1} << root, frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= pred[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

VertexSet ReachabilityOracle::reachable(Orientation o, Vertex root) const {
  VertexSet succ[kMaxVertices] = {};
  for (std::size_t e = 0; e < lo_.size(); ++e) {
    if (o.points_down(e)) succ[hi_[e]] |= VertexSet{1} << lo_[e];
    else succ[lo_[e]] |= VertexSet{1} << hi_[e];
  }
  VertexSet seen = VertexSet{1} << root, frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= succ[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool ReachabilityOracle::strongly_connected(Orientation o) const {
  return reaching(o, 0) == all_ && reachable(o, 0) == all_;
}

namespace {
void require_connected(const Graph& g) {
  if (!g.is_connected()) throw InvalidInput("graph must be connected");
}
}  // namespace

bool is_root_connected(const Graph& g, Orientation o, Vertex root) {
  require_connected(g);
  if (root >= g.vertex_count()) throw InvalidInput("root out of range");
  return ReachabilityOracle(g).all_reach(o, root);
}

bool is_strongly_connected(const Graph& g, Orientation o) {
  require_connected(g);
  return ReachabilityOracle(g).strongly_connected(o);
}

// ---------------------------------------------------------------------------
// Forest / tree oracles

namespace {

void check_cap(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) {
    throw CapExceeded("forest enumeration is capped at " + std::to_string(max_edges) + " edges (graph has " +
                      std::to_string(g.edge_count()) + ")");
  }
}

bool acyclic(const Graph& g, EdgeSet subset) {
  detail::UnionFind uf(g.vertex_count());
  for (EdgeSet s = subset; s; s &= s - 1) {
    const auto& ed = g.edge(std::countr_zero(s));
    if (!uf.unite(ed.lo, ed.hi)) return false;
  }
  return true;
}

}  // namespace

void for_each_forest(const Graph& g, const std::function<void(EdgeSet)>& visit, std::size_t max_edges) {
  check_cap(g, max_edges);
  const EdgeSet limit = EdgeSet{1} << g.edge_count();
  for (EdgeSet s = 0; s < limit; ++s) {
    if (acyclic(g, s)) visit(s);
  }
}

std::uint64_t enumerate_forests(const Graph& g, std::size_t max_edges) {
  return count_forests_within(g, g.all_edges(), max_edges);
}

std::uint64_t count_forests_within(const Graph& g, EdgeSet allowed, std::size_t max_edges) {
  check_cap(g, max_edges);
  std::uint64_t count = 0;
  // enumerate submasks of allowed
  EdgeSet s = 0;
  do {
    if (acyclic(g, s)) ++count;
    s = (s - allowed) & allowed;
  } while (s != 0);
  return count;
}

std::uint64_t enumerate_spanning_trees(const Graph& g, std::size_t max_edges) {
  check_cap(g, max_edges);
  require_connected(g);
  const std::size_t k = g.vertex_count() - 1;
  const std::size_t m = g.edge_count();
  if (k == 0) return 1;
  if (k > m) return 0;
  std::uint64_t count = 0;
  // Gosper's hack over k-subsets
  EdgeSet s = (EdgeSet{1} << k) - 1;
  const EdgeSet limit = EdgeSet{1} << m;
  while (s < limit) {
    if (acyclic(g, s)) ++count;
    EdgeSet c = s & -s;
    EdgeSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return count;
}

Graph edge_subgraph(const Graph& g, EdgeSet edges) {
  std::vector<Edge> kept;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if ((edges >> e) & 1U) kept.push_back(g.edge(e));
  }
  return Graph(g.vertex_count(), std::move(kept));
}

}  // namespace qps
