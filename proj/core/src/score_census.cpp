#include "qps/score_census.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "qps/errors.hpp"

namespace qps {

EdgePartition EdgePartition::single_class(std::size_t m) {
  EdgePartition p;
  if (m == 0) return p;
  p.classes.emplace_back();
  for (EdgeIndex e = 0; e < m; ++e) p.classes.front().push_back(e);
  return p;
}

EdgePartition EdgePartition::singletons(std::size_t m) {
  EdgePartition p;
  for (EdgeIndex e = 0; e < m; ++e) p.classes.push_back({e});
  return p;
}

EdgePartition EdgePartition::one_off(std::size_t m, EdgeIndex distinguished) {
  if (distinguished >= m) throw InvalidInput("distinguished edge out of range");
  EdgePartition p;
  std::vector<EdgeIndex> rest;
  for (EdgeIndex e = 0; e < m; ++e)
    if (e != distinguished) rest.push_back(e);
  if (!rest.empty()) p.classes.push_back(std::move(rest));
  p.classes.push_back({distinguished});
  return p;
}

namespace {

std::size_t parse_edge(std::string_view tok, std::size_t m) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1 || v > m) {
    throw InvalidInput("bad edge index '" + std::string(tok) + "' in partition (edges are 1.." + std::to_string(m) + ")");
  }
  return v - 1;
}

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

EdgePartition EdgePartition::parse(std::string_view spec, std::size_t m) {
  if (spec == "all") return single_class(m);
  if (spec == "singletons") return singletons(m);
  if (spec == "one-off") {
    if (m == 0) throw InvalidInput("one-off partition needs an edge");
    return one_off(m, m - 1);
  }
  EdgePartition p;
  for (auto cls : split(spec, ";|")) {
    std::vector<EdgeIndex> edges;
    for (auto item : split(cls, ",")) {
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (item.empty()) continue;
      auto dash = item.find('-');
      if (dash == std::string_view::npos) {
        edges.push_back(parse_edge(item, m));
      } else {
        auto a = parse_edge(item.substr(0, dash), m), b = parse_edge(item.substr(dash + 1), m);
        if (a > b) throw InvalidInput("descending range in partition");
        for (auto e = a; e <= b; ++e) edges.push_back(e);
      }
    }
    p.classes.push_back(std::move(edges));
  }
  p.validate(m);
  return p;
}

void EdgePartition::validate(std::size_t m) const {
  std::vector<int> seen(m, 0);
  for (const auto& cls : classes) {
    if (cls.empty()) throw InvalidInput("empty class in edge partition");
    for (auto e : cls) {
      if (e >= m) throw InvalidInput("edge index out of range in partition");
      if (seen[e]++) throw InvalidInput("edge " + std::to_string(e + 1) + " appears twice in partition");
    }
  }
  for (std::size_t e = 0; e < m; ++e)
    if (!seen[e]) throw InvalidInput("edge " + std::to_string(e + 1) + " is not covered by the partition");
}

std::string EdgePartition::to_string() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) out << ';';
    for (std::size_t k = 0; k < classes[c].size(); ++k) out << (k ? "," : "") << classes[c][k] + 1;
  }
  return out.str();
}

CensusMode CensusMode::matching(QuotientMode mode) {
  switch (mode.kind) {
    case AlgebraKind::kExternal:
      return all();
    case AlgebraKind::kTrees:
      return root_connected(mode.root);
    case AlgebraKind::kInternal:
      return strongly_connected();
  }
  return all();
}

QuotientMode CensusMode::quotient() const {
  switch (kind) {
    case CensusKind::kAll:
      return QuotientMode::external();
    case CensusKind::kRootConnected:
      return QuotientMode::trees(root);
    case CensusKind::kStronglyConnected:
      return QuotientMode::internal();
  }
  return QuotientMode::external();
}

ScaledWeights scale_weights(const WeightAssignment& q) {
  ScaledWeights out;
  BigInt den = common_denominator(q.q);
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& r : q.q) {
    ints.push_back(r.get_num() * (den / r.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (content == 0) content = 1;
  BigInt total = 0;
  for (auto& x : ints) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    total += abs(x);
  }
  if (mpz_sizeinbase(total.get_mpz_t(), 2) > 60) {
    throw CapExceeded("weights are too large for 64-bit coordinate arithmetic after clearing denominators");
  }
  for (const auto& x : ints) out.w.push_back(x.get_si());
  out.unit = Rational(content, den);
  out.unit.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using KeySet = std::unordered_set<std::string>;

void census_range(const Graph& g, const std::vector<std::int64_t>& w, const ModeFilter& filter, EdgeSet begin,
                  EdgeSet end, KeySet& out) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::int64_t> score(n, 0);
  for (EdgeIndex e = 0; e < m; ++e) score[Orientation{begin}.head(g, e)] += w[e];
  std::string key(n * sizeof(std::int64_t), '\0');
  for (EdgeSet mask = begin;;) {
    if (filter.keeps(Orientation{mask})) {
      std::memcpy(key.data(), score.data(), key.size());
      out.insert(key);
    }
    if (++mask >= end) break;
    // bits below the lowest set bit of mask were cleared, that bit was set
    const int t = std::countr_zero(mask);
    for (int e = 0; e < t; ++e) {
      score[g.edge(e).lo] -= w[e];
      score[g.edge(e).hi] += w[e];
    }
    score[g.edge(t).hi] -= w[t];
    score[g.edge(t).lo] += w[t];
  }
}

}  // namespace

ScoreCensus score_census(const Graph& g, const WeightAssignment& q, CensusMode mode, const CensusOptions& options) {
  if (q.size() != g.edge_count()) throw InvalidInput("weight count does not match edge count");
  if (!q.all_nonzero()) throw InvalidInput("score censuses need nonzero weights");
  if (g.edge_count() > options.max_edges) {
    throw CapExceeded("census over 2^" + std::to_string(g.edge_count()) + " orientations exceeds the cap of 2^" +
                      std::to_string(options.max_edges));
  }
  ModeFilter filter(g, mode.quotient());
  const auto scaled = scale_weights(q);
  const EdgeSet total = EdgeSet{1} << g.edge_count();

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < (EdgeSet{1} << 14)) threads = 1;
  threads = static_cast<unsigned>(std::min<EdgeSet>(threads, total));

  std::vector<KeySet> parts(threads);
  if (threads == 1) {
    census_range(g, scaled.w, filter, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      EdgeSet b = total / threads * t, e = t + 1 == threads ? total : total / threads * (t + 1);
      pool.emplace_back([&, b, e, t] { census_range(g, scaled.w, filter, b, e, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }
  for (unsigned t = 1; t < threads; ++t) {
    parts[0].merge(parts[t]);
  }

  ScoreCensus result;
  result.mode = mode;
  result.count = parts[0].size();
  if (options.collect_vectors) {
    const std::size_t n = g.vertex_count();
    std::vector<std::int64_t> raw(n);
    std::set<std::vector<std::int64_t>> ordered;
    for (const auto& key : parts[0]) {
      std::memcpy(raw.data(), key.data(), key.size());
      ordered.insert(raw);
    }
    for (const auto& v : ordered) {
      std::vector<Rational> r;
      for (auto x : v) r.push_back(Rational(x) * scaled.unit);
      result.vectors.push_back(std::move(r));
    }
    std::sort(result.vectors.begin(), result.vectors.end());
  }
  return result;
}

ForestCheck indegree_forest_check(const Graph& g, std::size_t max_edges) {
  ForestCheck c;
  c.forests = enumerate_forests(g, max_edges);
  CensusOptions opts;
  opts.max_edges = max_edges;
  c.indegree_vectors = score_census(g, WeightAssignment::unit(g.edge_count()), CensusMode::all(), opts).count;
  return c;
}

std::uint64_t partition_product_oracle(const Graph& g, const EdgePartition& partition, std::size_t max_edges) {
  partition.validate(g.edge_count());
  std::uint64_t product = 1;
  for (const auto& cls : partition.classes) {
    EdgeSet mask = 0;
    for (auto e : cls) mask |= EdgeSet{1} << e;
    product *= count_forests_within(g, mask, max_edges);
  }
  return product;
}

}  // namespace qps
