#include "graphgen/transforms.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <string>

#include "graphgen/errors.hpp"

namespace graphgen {

namespace {

void check_index(const GraphSum& sum, Vertex v) {
  if (v < 0 || v >= sum.n()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(sum.n()));
  }
}

void check_pair(const GraphSum& sum, Vertex i, Vertex j) {
  check_index(sum, i);
  check_index(sum, j);
  if (i == j) throw StructuralError("edge endpoints must differ (loops go through add_loop)");
}

std::optional<int> shifted(std::optional<int> k, int delta) {
  if (!k) return std::nullopt;
  return *k + delta;
}

// Collects output terms under labelled keys, then builds the result sum. The
// declared cyclomatic number is the one every term shares (the expected one
// for an empty result), and unspecified for mixed terms.
class Accumulator {
 public:
  Accumulator(int n, int s, std::optional<int> expected_k) : n_(n), s_(s), expected_k_(expected_k) {}

  void add(const Graph& g, const Rational& c) {
    if (c == 0) return;
    const CanonicalKey key = labeled_key(g);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, GraphSum::Term{g, c});
      return;
    }
    it->second.coefficient += c;
    if (it->second.coefficient == 0) terms_.erase(it);
  }

  GraphSum finish(KeyMode mode) const {
    std::optional<int> k = expected_k_ && *expected_k_ >= 0 ? expected_k_ : std::nullopt;
    if (!terms_.empty()) {
      k = cyclomatic_number(terms_.begin()->second.graph);
      for (const auto& [key, term] : terms_) {
        if (cyclomatic_number(term.graph) != *k) {
          k.reset();
          break;
        }
      }
    }
    GraphSum out(n_, k, s_, mode);
    for (const auto& [key, term] : terms_) {
      if (mode == KeyMode::labeled) {
        out.add_keyed(key, term.graph, term.coefficient);
      } else {
        out.add(term.graph, term.coefficient);
      }
    }
    return out;
  }

 private:
  int n_;
  int s_;
  std::optional<int> expected_k_;
  GraphSum::Terms terms_;
};

enum class Connectivity { any, connected, disconnected };

struct SplitRule {
  Connectivity connectivity = Connectivity::any;
  int min_side = 0;  // minimum end slots per side
  int rho = 0;       // parallel edges {i, n} added afterwards (0: plain split)
};

Rational q_prefactor(int rho) {
  Integer f = 1;
  for (int r = 2; r <= rho - 1; ++r) f *= r;
  return Rational(Integer(1), 2 * f);
}

// g with every loop, edge and leg at v removed; v itself stays.
Graph strip_vertex(const Graph& g, Vertex v) {
  Graph out = g;
  while (out.loops(v) > 0) out.remove_loop(v);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    while (out.multiplicity(v, u) > 0) out.remove_edge(v, u);
  }
  for (const auto& label : g.legs(v)) out.remove_leg(v, label);
  return out;
}

void split_term(const Graph& g, Vertex i, const Rational& c, const SplitRule& rule, Accumulator& acc) {
  const std::vector<EndSlot> slots = end_slots(g, i);
  const int d = static_cast<int>(slots.size());
  if (d > 30) throw CeilingError("vertex degree too large to split");
  const Graph base = strip_vertex(g, i);
  const Rational coefficient = rule.rho > 0 ? c * q_prefactor(rule.rho) : c;
  const std::uint32_t count = 1u << d;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const int moved = std::popcount(mask);
    if (moved < rule.min_side || d - moved < rule.min_side) continue;
    Graph out = base;
    const Vertex fresh = out.add_vertex();
    auto side_vertex = [&](int slot) { return (mask >> slot) & 1u ? fresh : i; };
    for (int slot = 0; slot < d; ++slot) {
      const EndSlot& e = slots[static_cast<std::size_t>(slot)];
      switch (e.kind) {
        case EndSlot::Kind::loop_end:
          if (e.side == 0) {
            const Vertex a = side_vertex(slot);
            const Vertex b = side_vertex(slot + 1);  // the loop's other end follows
            if (a == b) {
              out.add_loop(a);
            } else {
              out.add_edge(a, b);
            }
          }
          break;
        case EndSlot::Kind::edge_end:
          out.add_edge(side_vertex(slot), e.neighbor);
          break;
        case EndSlot::Kind::leg_end:
          out.add_leg(side_vertex(slot), e.leg);
          break;
      }
    }
    if (rule.connectivity != Connectivity::any) {
      const bool connected = is_connected(out);
      if (connected != (rule.connectivity == Connectivity::connected)) continue;
    }
    for (int r = 0; r < rule.rho; ++r) out.add_edge(i, fresh);
    acc.add(out, coefficient);
  }
}

GraphSum split_impl(const GraphSum& sum, Vertex i, const SplitRule& rule, std::optional<int> expected_k) {
  check_index(sum, i);
  Accumulator acc(sum.n() + 1, sum.s(), expected_k);
  for (const auto& [key, term] : sum.terms()) split_term(term.graph, i, term.coefficient, rule, acc);
  return acc.finish(sum.mode());
}

template <class Fn>
GraphSum map_terms(const GraphSum& sum, int n_out, int s_out, std::optional<int> expected_k, Fn fn) {
  Accumulator acc(n_out, s_out, expected_k);
  for (const auto& [key, term] : sum.terms()) fn(term.graph, term.coefficient, acc);
  return acc.finish(sum.mode());
}

void check_q_args(int rho) {
  if (rho < 1) throw StructuralError("q-map needs rho >= 1");
}

}  // namespace

std::vector<EndSlot> end_slots(const Graph& g, Vertex v) {
  std::vector<EndSlot> out;
  for (int r = 0; r < g.loops(v); ++r) {
    out.push_back(EndSlot{EndSlot::Kind::loop_end, r, -1, {}, 0});
    out.push_back(EndSlot{EndSlot::Kind::loop_end, r, -1, {}, 1});
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    for (int r = 0; r < g.multiplicity(v, u); ++r) out.push_back(EndSlot{EndSlot::Kind::edge_end, r, u, {}, 0});
  }
  for (const auto& label : g.legs(v)) out.push_back(EndSlot{EndSlot::Kind::leg_end, 0, -1, label, 0});
  return out;
}

GraphSum add_loop(const GraphSum& sum, Vertex i) {
  check_index(sum, i);
  return map_terms(sum, sum.n(), sum.s(), shifted(sum.k(), 1), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    Graph out = g;
    out.add_loop(i);
    acc.add(out, c);
  });
}

GraphSum erase_loop(const GraphSum& sum, Vertex i) {
  check_index(sum, i);
  return map_terms(sum, sum.n(), sum.s(), shifted(sum.k(), -1), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    Graph out = g;
    out.remove_loop(i);
    acc.add(out, c);
  });
}

GraphSum add_edge(const GraphSum& sum, Vertex i, Vertex j) {
  check_pair(sum, i, j);
  return map_terms(sum, sum.n(), sum.s(), shifted(sum.k(), 1), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    Graph out = g;
    out.add_edge(i, j);
    acc.add(out, c);
  });
}

GraphSum add_edge_adjacent(const GraphSum& sum, Vertex i, Vertex j) {
  check_pair(sum, i, j);
  return map_terms(sum, sum.n(), sum.s(), shifted(sum.k(), 1), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    if (!g.adjacent(i, j)) return;
    Graph out = g;
    out.add_edge(i, j);
    acc.add(out, c);
  });
}

GraphSum add_edge_nonadjacent(const GraphSum& sum, Vertex i, Vertex j) {
  check_pair(sum, i, j);
  return map_terms(sum, sum.n(), sum.s(), shifted(sum.k(), 1), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    if (g.adjacent(i, j)) return;
    Graph out = g;
    out.add_edge(i, j);
    acc.add(out, c);
  });
}

GraphSum erase_edge(const GraphSum& sum, Vertex i, Vertex j) {
  check_pair(sum, i, j);
  return map_terms(sum, sum.n(), sum.s(), shifted(sum.k(), -1), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    Graph out = g;
    out.remove_edge(i, j);
    acc.add(out, c);
  });
}

GraphSum split_vertex(const GraphSum& sum, Vertex i) { return split_impl(sum, i, SplitRule{}, std::nullopt); }

GraphSum split_connected(const GraphSum& sum, Vertex i) {
  return split_impl(sum, i, SplitRule{Connectivity::connected, 0, 0}, shifted(sum.k(), -1));
}

GraphSum split_disconnected(const GraphSum& sum, Vertex i) {
  return split_impl(sum, i, SplitRule{Connectivity::disconnected, 0, 0}, sum.k());
}

GraphSum split_min_degree(const GraphSum& sum, Vertex i, int rho, int nu) {
  if (rho < 1 || nu < rho) throw StructuralError("split_min_degree needs rho >= 1 and nu >= rho");
  return split_impl(sum, i, SplitRule{Connectivity::any, nu - rho, 0}, std::nullopt);
}

GraphSum q_map(const GraphSum& sum, Vertex i, int rho) {
  check_q_args(rho);
  return split_impl(sum, i, SplitRule{Connectivity::any, 0, rho}, shifted(sum.k(), rho - 1));
}

GraphSum q_map_connected(const GraphSum& sum, Vertex i, int rho) {
  check_q_args(rho);
  return split_impl(sum, i, SplitRule{Connectivity::connected, 0, rho}, shifted(sum.k(), rho - 1));
}

GraphSum q_map_disconnected(const GraphSum& sum, Vertex i, int rho) {
  check_q_args(rho);
  return split_impl(sum, i, SplitRule{Connectivity::disconnected, 0, rho}, shifted(sum.k(), rho - 1));
}

GraphSum q_map_min_degree(const GraphSum& sum, Vertex i, int rho, int nu) {
  check_q_args(rho);
  const int min_side = std::max(nu - rho, 0);
  return split_impl(sum, i, SplitRule{Connectivity::any, min_side, rho}, shifted(sum.k(), rho - 1));
}

GraphSum contract_edge(const GraphSum& sum, Vertex i, Vertex j) {
  check_pair(sum, i, j);
  if (i > j) throw StructuralError("contract_edge needs i < j");
  if (sum.n() < 2) throw StructuralError("contract_edge needs n >= 2");
  return map_terms(sum, sum.n() - 1, sum.s(), sum.k(), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    Graph out = g;
    out.remove_edge(i, j);
    while (out.multiplicity(i, j) > 0) {
      out.remove_edge(i, j);
      out.add_loop(i);
    }
    while (out.loops(j) > 0) {
      out.remove_loop(j);
      out.add_loop(i);
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (u == i || u == j) continue;
      while (out.multiplicity(j, u) > 0) {
        out.remove_edge(j, u);
        out.add_edge(i, u);
      }
    }
    for (const auto& label : g.legs(j)) {
      out.remove_leg(j, label);
      out.add_leg(i, label);
    }
    out.remove_isolated_vertex(j);
    acc.add(out, c);
  });
}

namespace {

void check_new_labels(const GraphSum& sum, std::span<const LegLabel> labels) {
  std::set<LegLabel> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) throw PreconditionError("duplicate new leg label " + label.name());
  }
  for (const auto& [key, term] : sum.terms()) {
    for (const auto& existing : term.graph.all_legs()) {
      if (seen.count(existing)) throw PreconditionError("leg label " + existing.name() + " already in use");
    }
  }
}

void check_targets(const GraphSum& sum, std::span<const Vertex> targets) {
  std::set<Vertex> seen;
  for (Vertex v : targets) {
    check_index(sum, v);
    if (!seen.insert(v).second) throw StructuralError("duplicate target vertex");
  }
}

}  // namespace

GraphSum distribute_legs(const GraphSum& sum, std::span<const LegLabel> new_labels, std::span<const Vertex> targets) {
  check_new_labels(sum, new_labels);
  check_targets(sum, targets);
  const int s_out = sum.s() + static_cast<int>(new_labels.size());
  if (!new_labels.empty() && targets.empty()) throw StructuralError("no target vertices for new legs");
  return map_terms(sum, sum.n(), s_out, sum.k(), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    // Odometer over functions labels -> targets.
    std::vector<std::size_t> choice(new_labels.size(), 0);
    while (true) {
      Graph out = g;
      for (std::size_t z = 0; z < new_labels.size(); ++z) out.add_leg(targets[choice[z]], new_labels[z]);
      acc.add(out, c);
      std::size_t z = 0;
      while (z < choice.size() && ++choice[z] == targets.size()) choice[z++] = 0;
      if (z == choice.size()) break;
    }
  });
}

GraphSum attach_legs(const GraphSum& sum, std::span<const LegLabel> new_labels, std::span<const Vertex> bare_targets) {
  if (new_labels.size() != bare_targets.size()) throw StructuralError("attach_legs needs one target per label");
  check_new_labels(sum, new_labels);
  check_targets(sum, bare_targets);
  const int s_out = sum.s() + static_cast<int>(new_labels.size());
  return map_terms(sum, sum.n(), s_out, sum.k(), [&](const Graph& g, const Rational& c, Accumulator& acc) {
    Graph out = g;
    for (std::size_t z = 0; z < new_labels.size(); ++z) {
      if (!g.legs(bare_targets[z]).empty()) {
        throw PreconditionError("target vertex " + std::to_string(bare_targets[z]) + " already has a leg");
      }
      out.add_leg(bare_targets[z], new_labels[z]);
    }
    acc.add(out, c);
  });
}

}  // namespace graphgen
