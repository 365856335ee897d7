#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "graphgen/graph.hpp"

namespace graphgen::testing {

struct RandomGraphSpec {
  int max_n = 5;
  int max_edges = 5;
  int max_legs = 2;
  bool connected = true;
  bool loops = true;
  bool multi_edges = true;
};

// Spanning tree on a random vertex order, then extra edges drawn from the
// allowed slots. Legs x1..xs land on random vertices.
inline Graph random_graph(std::mt19937& rng, const RandomGraphSpec& spec) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(1, spec.max_n);
  Graph g(n);
  int edges = 0;
  if (spec.connected) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int p = 1; p < n && edges < spec.max_edges; ++p) {
      g.add_edge(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(pick(0, p - 1))]);
      ++edges;
    }
    if (edges < n - 1) return random_graph(rng, spec);
  }
  const int target = pick(edges, spec.max_edges);
  int attempts = 0;
  while (edges < target && attempts++ < 50) {
    const Vertex u = pick(0, n - 1);
    const Vertex v = pick(0, n - 1);
    if (u == v) {
      if (!spec.loops) continue;
      g.add_loop(u);
    } else {
      if (!spec.multi_edges && g.multiplicity(u, v) > 0) continue;
      g.add_edge(u, v);
    }
    ++edges;
  }
  const int s = pick(0, spec.max_legs);
  for (int z = 1; z <= s; ++z) g.add_leg(pick(0, n - 1), LegLabel::standard(z));
  return g;
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace graphgen::testing
