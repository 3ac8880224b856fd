#include "corpus.hpp"

#include <algorithm>
#include <functional>

namespace corpus {

using qps::Graph;
using qps::Rational;
using qps::WeightAssignment;

namespace {

Graph g(std::size_t n, std::vector<std::pair<qps::Vertex, qps::Vertex>> one_based) {
  for (auto& [a, b] : one_based) {
    --a;
    --b;
  }
  return Graph::from_pairs(n, one_based);
}

}  // namespace

const std::vector<Entry>& graphs() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v{
        {"single-vertex", Graph(1)},
        {"edge", Graph::path(2)},
        {"double-edge", g(2, {{1, 2}, {1, 2}})},
        {"triple-edge", g(2, {{1, 2}, {1, 2}, {1, 2}})},
        {"path-3", Graph::path(3)},
        {"path-4", Graph::path(4)},
        {"path-5", Graph::path(5)},
        {"star-4", g(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})},
        {"triangle", Graph::complete(3)},
        {"cycle-4", Graph::cycle(4)},
        {"cycle-5", Graph::cycle(5)},
        {"cycle-6", Graph::cycle(6)},
        {"K4", Graph::complete(4)},
        {"K4-minus-edge", g(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})},
        {"triangle-doubled-edge", g(3, {{1, 2}, {1, 2}, {2, 3}, {1, 3}})},
        {"theta", g(4, {{1, 2}, {2, 4}, {1, 3}, {3, 4}, {1, 4}})},
        {"bowtie", g(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}})},
        {"K23", g(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})},
        {"two-edges-disjoint", g(4, {{1, 2}, {3, 4}})},
        {"triangle-plus-edge", g(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}})},
        {"isolated-vertex", g(3, {{1, 2}, {1, 2}})},
        {"pendant-triangle", g(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})},
        {"multi-path", g(3, {{2, 1}, {2, 1}, {3, 2}, {3, 2}})},
        {"wheel-4", g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}})},
        {"K4-plus-pendant", g(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}})},
        {"prism-minus", g(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}})},
    };
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 4; ++i) {
      std::size_t n = 3 + i % 3;
      std::size_t m = 5 + i;
      v.push_back({"random-" + std::to_string(i), random_graph(rng, n, m)});
    }
    return v;
  }();
  return list;
}

std::vector<Entry> connected_graphs() {
  std::vector<Entry> out;
  for (const auto& e : graphs()) {
    if (e.graph.is_connected()) out.push_back(e);
  }
  return out;
}

std::vector<WeightSample> weight_samples(const Graph& graph, std::uint64_t seed) {
  const std::size_t m = graph.edge_count();
  std::mt19937_64 rng(seed);
  std::vector<WeightSample> out;
  out.push_back({"unit", WeightAssignment::unit(m)});
  WeightAssignment pos = WeightAssignment::unit(m), mixed = pos, frac = pos;
  for (std::size_t e = 0; e < m; ++e) {
    pos.q[e] = Rational(static_cast<long>(1 + rng() % 9));
    mixed.q[e] = Rational(static_cast<long>(1 + rng() % 5) * (e % 2 ? -1 : 1));
    frac.q[e] = Rational(static_cast<long>(1 + rng() % 4), static_cast<unsigned long>(1 + rng() % 3));
  }
  if (m == 1) mixed.q[0] = -mixed.q[0];
  for (auto& x : frac.q) x.canonicalize();
  out.push_back({"positive", pos});
  out.push_back({"mixed-signs", mixed});
  out.push_back({"fractions", frac});
  return out;
}

std::vector<Graph> exhaustive(std::size_t max_n, std::size_t max_m) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<qps::Vertex, qps::Vertex>> pairs;
    for (qps::Vertex a = 0; a < n; ++a) {
      for (qps::Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    std::vector<std::pair<qps::Vertex, qps::Vertex>> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      out.push_back(Graph::from_pairs(n, chosen));
      if (chosen.size() == max_m) return;
      for (std::size_t p = from; p < pairs.size(); ++p) {
        chosen.push_back(pairs[p]);
        extend(p);
        chosen.pop_back();
      }
    };
    extend(0);
  }
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::pair<qps::Vertex, qps::Vertex>> pairs;
  // random spanning tree first, so most samples are connected
  for (std::size_t v = 1; v < n && pairs.size() < m; ++v) pairs.emplace_back(rng() % v, v);
  while (pairs.size() < m) {
    qps::Vertex a = rng() % n, b = rng() % n;
    if (a != b) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return Graph::from_pairs(n, pairs);
}

WeightAssignment random_weights(std::mt19937_64& rng, std::size_t m) {
  WeightAssignment q = WeightAssignment::unit(m);
  for (auto& x : q.q) {
    long num = static_cast<long>(1 + rng() % 7) * (rng() % 3 == 0 ? -1 : 1);
    x = Rational(num, static_cast<unsigned long>(1 + rng() % 3));
    x.canonicalize();
  }
  return q;
}

}  // namespace corpus
