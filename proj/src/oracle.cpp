#include "graphgen/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "graphgen/errors.hpp"

namespace graphgen::oracle {

namespace {

// Breadth-first reachability over internal edges, optionally ignoring one
// edge instance between skip_u and skip_v.
bool reaches_all(const Graph& g, Vertex skip_u = -1, Vertex skip_v = -1) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || seen[static_cast<std::size_t>(v)]) continue;
      int mu = g.multiplicity(u, v);
      if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) --mu;
      if (mu > 0) {
        seen[static_cast<std::size_t>(v)] = true;
        queue.push_back(v);
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

bool oracle_biconnected(const Graph& g) {
  if (!reaches_all(g)) return false;
  for (const auto& [u, v] : g.edge_list()) {
    if (u != v && !reaches_all(g, u, v)) return false;
  }
  return true;
}

bool oracle_simple(const Graph& g) {
  const auto edges = g.edge_list();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == edges[e].second) return false;
    if (e > 0 && edges[e] == edges[e - 1]) return false;
  }
  return true;
}

void place_legs(const Graph& g, int s, std::map<CanonicalKey, Graph>& out) {
  const int n = g.vertex_count();
  std::vector<int> where(static_cast<std::size_t>(s), 0);
  while (true) {
    Graph legged = g;
    for (int z = 0; z < s; ++z) legged.add_leg(where[static_cast<std::size_t>(z)], LegLabel::standard(z + 1));
    Canonical c = canonical_form(legged);
    out.emplace(std::move(c.key), std::move(c.graph));
    int z = 0;
    while (z < s && ++where[static_cast<std::size_t>(z)] == n) where[static_cast<std::size_t>(z++)] = 0;
    if (z == s) break;
  }
}

}  // namespace

Predicate predicate_for(Family f) {
  switch (f) {
    case Family::connected:
      return Predicate::connected;
    case Family::biconnected:
      return Predicate::biconnected;
    case Family::simple:
      return Predicate::simple;
    case Family::loopless:
    case Family::loopless_alt:
      return Predicate::loopless;
  }
  return Predicate::connected;
}

bool satisfies(Predicate p, const Graph& g) {
  if (!reaches_all(g)) return false;
  switch (p) {
    case Predicate::connected:
      return true;
    case Predicate::biconnected:
      return oracle_biconnected(g);
    case Predicate::simple:
      return oracle_simple(g);
    case Predicate::loopless: {
      for (const auto& [u, v] : g.edge_list()) {
        if (u == v) return false;
      }
      return true;
    }
  }
  return false;
}

std::map<CanonicalKey, Graph> enumerate_classes(const EnumSpec& spec, const OracleLimits& limits) {
  if (spec.n < 1 || spec.k < 0 || spec.s < 0) throw StructuralError("enumerate_classes: bad (n, k, s)");
  const int m = spec.k + spec.n - 1;
  if (m > limits.max_edges) {
    throw CeilingError("enumerate_classes: m=" + std::to_string(m) + " exceeds ceiling " +
                       std::to_string(limits.max_edges));
  }
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u; v < spec.n; ++v) slots.emplace_back(u, v);
  }
  if (spec.reverse_slot_order) std::reverse(slots.begin(), slots.end());

  std::map<CanonicalKey, Graph> out;
  // Stars and bars: nondecreasing slot index sequences of length m.
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  auto visit = [&]() {
    Graph g(spec.n);
    for (std::size_t idx : pick) {
      const auto [u, v] = slots[idx];
      if (u == v) {
        g.add_loop(u);
      } else {
        g.add_edge(u, v);
      }
    }
    if (!satisfies(spec.predicate, g)) return;
    place_legs(g, spec.s, out);
  };
  if (m == 0) {
    visit();
    return out;
  }
  // Odometer over nondecreasing sequences.
  while (true) {
    visit();
    int pos = m - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == slots.size()) --pos;
    if (pos < 0) break;
    const std::size_t next = pick[static_cast<std::size_t>(pos)] + 1;
    for (int p = pos; p < m; ++p) pick[static_cast<std::size_t>(p)] = next;
  }
  return out;
}

namespace {

struct EndTable {
  std::vector<Vertex> vertex;  // internal ends
  std::vector<int> partner;
  std::vector<std::pair<Vertex, LegLabel>> legs;
};

EndTable materialize_ends(const Graph& g) {
  EndTable t;
  for (const auto& [u, v] : g.edge_list()) {
    const int a = static_cast<int>(t.vertex.size());
    t.vertex.push_back(u);
    t.vertex.push_back(v);
    t.partner.push_back(a + 1);
    t.partner.push_back(a);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const auto& label : g.legs(v)) t.legs.emplace_back(v, label);
  }
  return t;
}

std::uint64_t count_end_bijections(const EndTable& t, const std::vector<Vertex>& sigma, std::size_t e,
                                   std::vector<int>& image, std::vector<bool>& used) {
  if (e == t.vertex.size()) return 1;
  std::uint64_t total = 0;
  const Vertex target = sigma[static_cast<std::size_t>(t.vertex[e])];
  const int partner = t.partner[e];
  for (std::size_t f = 0; f < t.vertex.size(); ++f) {
    if (used[f] || t.vertex[f] != target) continue;
    if (static_cast<std::size_t>(partner) < e && image[static_cast<std::size_t>(partner)] != t.partner[f]) continue;
    used[f] = true;
    image[e] = static_cast<int>(f);
    total += count_end_bijections(t, sigma, e + 1, image, used);
    used[f] = false;
    image[e] = -1;
  }
  return total;
}

}  // namespace

std::uint64_t halfedge_automorphism_count(const Graph& g, const OracleLimits& limits) {
  if (g.edge_count() > limits.max_halfedge_edges) {
    throw CeilingError("halfedge_automorphism_count: m=" + std::to_string(g.edge_count()) + " exceeds ceiling " +
                       std::to_string(limits.max_halfedge_edges));
  }
  const EndTable t = materialize_ends(g);
  std::vector<Vertex> sigma(static_cast<std::size_t>(g.vertex_count()));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t total = 0;
  do {
    // A leg's end must go to the end of the leg with the same label.
    bool legs_fixed = true;
    for (const auto& [v, label] : t.legs) {
      const auto& there = g.legs(sigma[static_cast<std::size_t>(v)]);
      if (std::find(there.begin(), there.end(), label) == there.end()) {
        legs_fixed = false;
        break;
      }
    }
    if (!legs_fixed) continue;
    std::vector<int> image(t.vertex.size(), -1);
    std::vector<bool> used(t.vertex.size(), false);
    total += count_end_bijections(t, sigma, 0, image, used);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::uint64_t labeled_count(int n, int m, LabeledFamily family, const OracleLimits& limits) {
  if (n < 1 || m < 0) throw StructuralError("labeled_count: bad (n, m)");
  if (n > limits.max_labeled_n) {
    throw CeilingError("labeled_count: n=" + std::to_string(n) + " exceeds ceiling " +
                       std::to_string(limits.max_labeled_n));
  }
  if (family == LabeledFamily::trees && m != n - 1) return 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint32_t subsets = 1u << pairs.size();
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) != m) continue;
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask & (1u << e)) g.add_edge(pairs[e].first, pairs[e].second);
    }
    if (reaches_all(g)) ++count;
  }
  return count;
}

std::vector<ClassReport> verify(Engine& engine, Family family, int n, int k, int s, const OracleLimits& limits) {
  const GraphSum generated = engine.generate(GenRequest{family, n, k, s, std::nullopt});
  const auto expected = enumerate_classes(EnumSpec{n, k, s, predicate_for(family), false}, limits);

  std::set<CanonicalKey> keys;
  for (const auto& [key, term] : generated.terms()) keys.insert(key);
  for (const auto& [key, graph] : expected) keys.insert(key);

  std::vector<ClassReport> reports;
  for (const CanonicalKey& key : keys) {
    ClassReport r;
    r.key = key;
    const auto gen = generated.terms().find(key);
    const auto exp = expected.find(key);
    r.representative = gen != generated.terms().end() ? gen->second.graph : exp->second;
    r.coefficient = gen != generated.terms().end() ? gen->second.coefficient : Rational(0);
    r.symmetry_factor = symmetry_factor(r.representative);
    r.enumerated = exp != expected.end();
    r.ok = r.enumerated && r.coefficient == inverse(Integer(r.symmetry_factor));
    reports.push_back(std::move(r));
  }
  return reports;
}

bool all_ok(const std::vector<ClassReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const ClassReport& r) { return r.ok; });
}

}  // namespace graphgen::oracle
