#include "graphgen/graph_sum.hpp"

#include <string>

#include "graphgen/errors.hpp"

namespace graphgen {

GraphSum::GraphSum(int n, std::optional<int> k, int s, KeyMode mode) : n_(n), k_(k), s_(s), mode_(mode) {
  if (n < 1) throw StructuralError("graph sum needs n >= 1");
  if (s < 0) throw StructuralError("graph sum needs s >= 0");
  if (k && *k < 0) throw StructuralError("graph sum needs k >= 0");
}

GraphSum GraphSum::of(const Graph& g, const Rational& coefficient, KeyMode mode) {
  GraphSum out(g.vertex_count(), cyclomatic_number(g), g.leg_count(), mode);
  out.add(g, coefficient);
  return out;
}

void GraphSum::check_shape(const Graph& g) const {
  if (g.vertex_count() != n_ || g.leg_count() != s_) {
    throw StructuralError("term shape (n=" + std::to_string(g.vertex_count()) + ", s=" +
                          std::to_string(g.leg_count()) + ") does not match sum (n=" + std::to_string(n_) +
                          ", s=" + std::to_string(s_) + ")");
  }
  if (k_ && cyclomatic_number(g) != *k_) {
    throw StructuralError("term cyclomatic number " + std::to_string(cyclomatic_number(g)) +
                          " does not match sum k=" + std::to_string(*k_));
  }
}

CanonicalKey GraphSum::key_for(const Graph& g, Graph* representative) const {
  if (mode_ == KeyMode::labeled) {
    *representative = g;
    return labeled_key(g);
  }
  auto [rep, key] = canonicalize(g);
  *representative = std::move(rep);
  return key;
}

void GraphSum::add(const Graph& g, const Rational& c) {
  if (c == 0) return;
  check_shape(g);
  Graph rep(1);
  CanonicalKey key = key_for(g, &rep);
  add_keyed(key, rep, c);
}

void GraphSum::add_keyed(const CanonicalKey& key, const Graph& g, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{g, c});
    return;
  }
  it->second.coefficient += c;
  if (it->second.coefficient == 0) terms_.erase(it);
}

Rational GraphSum::coefficient_of(const Graph& g) const {
  Graph rep(1);
  const auto it = terms_.find(key_for(g, &rep));
  return it == terms_.end() ? Rational(0) : it->second.coefficient;
}

Rational GraphSum::mass() const {
  Rational total = 0;
  for (const auto& [key, term] : terms_) total += term.coefficient;
  return total;
}

GraphSum GraphSum::collapsed() const {
  if (mode_ == KeyMode::canonical) return *this;
  GraphSum out(n_, k_, s_, KeyMode::canonical);
  for (const auto& [key, term] : terms_) out.add(term.graph, term.coefficient);
  return out;
}

GraphSum GraphSum::with_k(std::optional<int> k) const {
  GraphSum out(n_, k, s_, mode_);
  for (const auto& [key, term] : terms_) {
    out.check_shape(term.graph);
    out.add_keyed(key, term.graph, term.coefficient);
  }
  return out;
}

bool operator==(const GraphSum& a, const GraphSum& b) {
  if (a.n_ != b.n_ || a.s_ != b.s_ || a.k_ != b.k_ || a.mode_ != b.mode_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [key, term] : a.terms_) {
    if (key != it->first || term.coefficient != it->second.coefficient) return false;
    ++it;
  }
  return true;
}

GraphSum sum_add(const GraphSum& a, const GraphSum& b) {
  if (a.n() != b.n() || a.s() != b.s() || a.mode() != b.mode()) {
    throw StructuralError("sum_add: operands differ in (n, s) or key mode");
  }
  std::optional<int> k = a.k();
  if (a.k() != b.k()) {
    if (a.empty() && !a.k()) {
      k = b.k();
    } else if (b.empty() && !b.k()) {
      k = a.k();
    } else {
      throw StructuralError("sum_add: operands differ in cyclomatic number");
    }
  }
  GraphSum out(a.n(), k, a.s(), a.mode());
  for (const auto& [key, term] : a.terms()) out.add_keyed(key, term.graph, term.coefficient);
  for (const auto& [key, term] : b.terms()) out.add_keyed(key, term.graph, term.coefficient);
  return out;
}

GraphSum sum_scale(const GraphSum& a, const Rational& c) {
  GraphSum out(a.n(), a.k(), a.s(), a.mode());
  if (c == 0) return out;
  for (const auto& [key, term] : a.terms()) out.add_keyed(key, term.graph, term.coefficient * c);
  return out;
}

}  // namespace graphgen
