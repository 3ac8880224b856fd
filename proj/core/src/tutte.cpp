#include "qps/tutte.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "qps/errors.hpp"
#include "union_find.hpp"

namespace qps {
namespace {

struct EdgeClass {
  std::uint32_t a, b, mult;  // a < b
  friend bool operator<(const EdgeClass& l, const EdgeClass& r) {
    return std::tie(l.a, l.b, l.mult) < std::tie(r.a, r.b, r.mult);
  }
};

// Multigraph without loops; vertex labels 0..n-1, every vertex incident to some class.
struct MultiGraph {
  std::uint32_t n = 0;
  std::vector<EdgeClass> classes;
};

BivariatePolynomial y_power(int k) { return BivariatePolynomial::monomial(0, k); }

// x + y + ... + y^(k-1)
BivariatePolynomial bridge_factor(std::uint32_t k) {
  auto p = BivariatePolynomial::monomial(1, 0);
  for (std::uint32_t j = 1; j < k; ++j) p.add_term(0, static_cast<int>(j), 1);
  return p;
}

// Drops isolated vertices and relabels compactly, preserving relative order.
MultiGraph compact(std::uint32_t n, std::vector<EdgeClass> classes) {
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  for (const auto& c : classes) label[c.a] = label[c.b] = 0;
  std::uint32_t next = 0;
  for (auto& l : label)
    if (l == 0) l = next++;
  for (auto& c : classes) {
    c.a = label[c.a];
    c.b = label[c.b];
    if (c.a > c.b) std::swap(c.a, c.b);
  }
  std::sort(classes.begin(), classes.end());
  return MultiGraph{next, std::move(classes)};
}

std::vector<MultiGraph> split_components(const MultiGraph& g) {
  detail::UnionFind uf(g.n);
  for (const auto& c : g.classes) uf.unite(c.a, c.b);
  std::map<std::size_t, std::vector<EdgeClass>> parts;
  for (const auto& c : g.classes) parts[uf.find(c.a)].push_back(c);
  std::vector<MultiGraph> out;
  for (auto& [root, cls] : parts) out.push_back(compact(g.n, std::move(cls)));
  return out;
}

// Colour refinement on weighted degrees, then relabel by (colour, old label).
std::pair<MultiGraph, std::vector<std::uint32_t>> canonicalize(const MultiGraph& g) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(g.n);
  for (const auto& c : g.classes) {
    adj[c.a].push_back({c.b, c.mult});
    adj[c.b].push_back({c.a, c.mult});
  }
  std::vector<std::uint64_t> colour(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) {
    std::uint64_t deg = 0;
    for (auto [w, k] : adj[v]) deg += k;
    colour[v] = deg * 64 + adj[v].size();
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<std::vector<std::uint64_t>> sig(g.n);
    for (std::uint32_t v = 0; v < g.n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::uint64_t> nb;
      for (auto [w, k] : adj[v]) nb.push_back(colour[w] * 131 + k);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::uint32_t v = 0; v < g.n; ++v) {
      colour[v] = static_cast<std::uint64_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
  }
  std::vector<std::uint32_t> order(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return colour[a] < colour[b]; });
  std::vector<std::uint32_t> relabel(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i) relabel[order[i]] = i;

  MultiGraph out{g.n, g.classes};
  for (auto& c : out.classes) {
    c.a = relabel[c.a];
    c.b = relabel[c.b];
    if (c.a > c.b) std::swap(c.a, c.b);
  }
  std::sort(out.classes.begin(), out.classes.end());
  std::vector<std::uint32_t> key{out.n};
  for (const auto& c : out.classes) key.insert(key.end(), {c.a, c.b, c.mult});
  return {std::move(out), std::move(key)};
}

bool separates(const MultiGraph& g, std::size_t skip) {
  detail::UnionFind uf(g.n);
  for (std::size_t i = 0; i < g.classes.size(); ++i)
    if (i != skip) uf.unite(g.classes[i].a, g.classes[i].b);
  return uf.find(g.classes[skip].a) != uf.find(g.classes[skip].b);
}

// Merge the endpoints of class `which`; the class itself disappears.
MultiGraph contract(const MultiGraph& g, std::size_t which) {
  const auto a = g.classes[which].a, b = g.classes[which].b;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> merged;
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    if (i == which) continue;
    auto c = g.classes[i];
    if (c.a == b) c.a = a;
    if (c.b == b) c.b = a;
    if (c.a > c.b) std::swap(c.a, c.b);
    merged[{c.a, c.b}] += c.mult;
  }
  std::vector<EdgeClass> cls;
  for (auto [ab, k] : merged) cls.push_back({ab.first, ab.second, k});
  return compact(g.n, std::move(cls));
}

class TutteSolver {
 public:
  BivariatePolynomial solve(const MultiGraph& g) {
    if (g.classes.empty()) return BivariatePolynomial::constant(1);
    auto parts = split_components(g);
    if (parts.size() > 1) {
      auto result = BivariatePolynomial::constant(1);
      for (const auto& p : parts) result = result * solve_connected(p);
      return result;
    }
    return solve_connected(parts.front());
  }

 private:
  BivariatePolynomial solve_connected(const MultiGraph& input) {
    auto [g, key] = canonicalize(input);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::size_t last = g.classes.size() - 1;
    const auto k = g.classes[last].mult;
    BivariatePolynomial result;
    if (separates(g, last)) {
      result = bridge_factor(k) * solve(contract(g, last));
    } else {
      MultiGraph deleted = g;
      if (k > 1) {
        deleted.classes[last].mult -= 1;
      } else {
        deleted.classes.pop_back();
        deleted = compact(deleted.n, std::move(deleted.classes));
      }
      result = solve(deleted) + y_power(static_cast<int>(k - 1)) * solve(contract(g, last));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::map<std::vector<std::uint32_t>, BivariatePolynomial> memo_;
};

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

BivariatePolynomial tutte_polynomial(const Graph& g) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mult;
  for (const auto& e : g.edges()) mult[{static_cast<std::uint32_t>(e.lo), static_cast<std::uint32_t>(e.hi)}] += 1;
  std::vector<EdgeClass> cls;
  for (auto [ab, k] : mult) cls.push_back({ab.first, ab.second, k});
  TutteSolver solver;
  return solver.solve(compact(static_cast<std::uint32_t>(g.vertex_count()), std::move(cls)));
}

BivariatePolynomial tutte_rank_nullity_oracle(const Graph& g, std::size_t max_edges) {
  const std::size_t m = g.edge_count();
  if (m > max_edges) {
    throw CapExceeded("rank-nullity oracle is capped at " + std::to_string(max_edges) + " edges");
  }
  const int n = static_cast<int>(g.vertex_count());
  const int full_rank = n - static_cast<int>(g.component_count());
  // counts[a][b]: subsets with corank a and nullity b
  std::map<std::pair<int, int>, std::int64_t> counts;
  for (EdgeSet s = 0; s < (EdgeSet{1} << m); ++s) {
    detail::UnionFind uf(g.vertex_count());
    int rank = 0;
    for (EdgeSet t = s; t; t &= t - 1) {
      const auto& e = g.edge(static_cast<EdgeIndex>(__builtin_ctzll(t)));
      if (uf.unite(e.lo, e.hi)) ++rank;
    }
    int size = __builtin_popcountll(s);
    counts[{full_rank - rank, size - rank}] += 1;
  }
  BivariatePolynomial out;
  for (const auto& [ab, c] : counts) {
    auto [a, b] = ab;
    for (int i = 0; i <= a; ++i) {
      std::int64_t xi = binomial(a, i) * (((a - i) % 2) ? -1 : 1);
      for (int j = 0; j <= b; ++j) {
        std::int64_t yj = binomial(b, j) * (((b - j) % 2) ? -1 : 1);
        out.add_term(i, j, c * xi * yj);
      }
    }
  }
  return out;
}

HilbertPolynomial hilbert_from_tutte(const Graph& g, HilbertVariant variant) {
  return hilbert_from_tutte(g, tutte_polynomial(g), variant);
}

HilbertPolynomial hilbert_from_tutte(const Graph& g, const BivariatePolynomial& tutte, HilbertVariant variant) {
  if (variant != HilbertVariant::kExternal && !g.is_connected()) {
    throw InvalidInput("trees and internal specializations need a connected graph");
  }
  const int shift = static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) +
                    static_cast<int>(g.component_count());
  std::map<int, std::int64_t> laurent;
  for (const auto& [e, c] : tutte.terms()) {
    auto [i, j] = e;
    switch (variant) {
      case HilbertVariant::kExternal:
        for (int l = 0; l <= i; ++l) laurent[l - j + shift] += c * binomial(i, l);
        break;
      case HilbertVariant::kTrees:
        laurent[-j + shift] += c;
        break;
      case HilbertVariant::kInternal:
        if (i == 0) laurent[-j + shift] += c;
        break;
    }
  }
  std::vector<std::int64_t> coeffs;
  for (const auto& [power, c] : laurent) {
    if (c == 0) continue;
    if (power < 0) {
      throw CrossCheckFailure("negative power t^" + std::to_string(power) + " survived the Tutte substitution");
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(power + 1, 0);
    coeffs[power] = c;
  }
  return HilbertPolynomial(std::move(coeffs));
}

}  // namespace qps
