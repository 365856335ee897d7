#pragma once

#include <map>
#include <optional>

#include "graphgen/canonical.hpp"
#include "graphgen/graph.hpp"
#include "graphgen/rational.hpp"

namespace graphgen {

/// How terms of a GraphSum are identified.
enum class KeyMode {
  canonical,  // isomorphic graphs merge (collapsed sums)
  labeled,    // graphs merge only when identical as numbered graphs
};

/// Formal Q-linear combination of graphs on n vertices with s legs.
///
/// k is the cyclomatic number shared by every term, or nullopt for the mixed
/// intermediates produced by vertex splitting. Zero coefficients are never
/// stored. In canonical mode each term's graph is the canonical
/// representative of its class.
class GraphSum {
 public:
  struct Term {
    Graph graph;
    Rational coefficient;
  };
  using Terms = std::map<CanonicalKey, Term>;

  GraphSum(int n, std::optional<int> k, int s, KeyMode mode = KeyMode::canonical);

  /// Single term with the given coefficient; k is taken from the graph.
  static GraphSum of(const Graph& g, const Rational& coefficient = 1, KeyMode mode = KeyMode::canonical);

  int n() const noexcept { return n_; }
  std::optional<int> k() const noexcept { return k_; }
  int s() const noexcept { return s_; }
  KeyMode mode() const noexcept { return mode_; }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * g. Throws StructuralError when g does not have n vertices, s
  /// legs, or (if k is fixed) cyclomatic number k.
  void add(const Graph& g, const Rational& c);
  /// Adds a term whose key is already known to match g under this sum's mode.
  void add_keyed(const CanonicalKey& key, const Graph& g, const Rational& c);

  /// Coefficient of the class (or labelled graph) of g; zero if absent.
  Rational coefficient_of(const Graph& g) const;
  /// Sum of all coefficients.
  Rational mass() const;

  /// Same sum with isomorphic terms merged.
  GraphSum collapsed() const;

  /// Same terms, declared cyclomatic number changed (validated).
  GraphSum with_k(std::optional<int> k) const;

  friend bool operator==(const GraphSum& a, const GraphSum& b);

 private:
  CanonicalKey key_for(const Graph& g, Graph* representative) const;
  void check_shape(const Graph& g) const;

  int n_;
  std::optional<int> k_;
  int s_;
  KeyMode mode_;
  Terms terms_;
};

/// Termwise a + b. Throws StructuralError on mismatched (n, k, s) or mode; an
/// empty sum with unspecified k adapts to the other operand.
GraphSum sum_add(const GraphSum& a, const GraphSum& b);
GraphSum sum_scale(const GraphSum& a, const Rational& c);

/// Terms whose graph satisfies pred.
template <class Pred>
GraphSum sum_filter(const GraphSum& a, Pred pred) {
  GraphSum out(a.n(), a.k(), a.s(), a.mode());
  for (const auto& [key, term] : a.terms()) {
    if (pred(term.graph)) out.add_keyed(key, term.graph, term.coefficient);
  }
  return out;
}

}  // namespace graphgen
