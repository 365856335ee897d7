#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphgen/canonical.hpp"
#include "graphgen/rational.hpp"
#include "graphgen/recursion.hpp"

// Brute-force reference machinery. Nothing here calls the transforms or the
// recursion engine; only Graph and canonical_form are shared.

namespace graphgen::oracle {

enum class Predicate { connected, biconnected, simple, loopless };

Predicate predicate_for(Family f);
bool satisfies(Predicate p, const Graph& g);

struct OracleLimits {
  int max_edges = 6;           // enumerate_classes
  int max_halfedge_edges = 4;  // halfedge_automorphism_count
  int max_labeled_n = 6;       // labeled_count
};

struct EnumSpec {
  int n = 1;
  int k = 0;
  int s = 0;
  Predicate predicate = Predicate::connected;
  // Iterate vertex-pair slots last-to-first; the class set must not change.
  bool reverse_slot_order = false;
};

/// canonical key -> representative of every class with n vertices,
/// m = k + n - 1 edges, legs x1..xs and the predicate. Throws CeilingError
/// when m exceeds the ceiling.
std::map<CanonicalKey, Graph> enumerate_classes(const EnumSpec& spec, const OracleLimits& limits = {});

/// Literal count of pairs (vertex permutation, end permutation) that preserve
/// incidence, the pairing of ends into edges, and leg labels.
std::uint64_t halfedge_automorphism_count(const Graph& g, const OracleLimits& limits = {});

enum class LabeledFamily { simple_connected, trees };

/// Number of labelled graphs on n vertices with m edges, by exhaustive edge
/// subset enumeration.
std::uint64_t labeled_count(int n, int m, LabeledFamily family, const OracleLimits& limits = {});

struct ClassReport {
  CanonicalKey key;
  Graph representative{1};
  Rational coefficient;          // zero when the recursion missed the class
  std::uint64_t symmetry_factor = 1;
  bool enumerated = true;        // false when the recursion produced a class the oracle does not list
  bool ok = false;               // enumerated && coefficient == 1 / symmetry_factor
};

/// Generated sum against exhaustive enumeration, one report per class in
/// either set, ordered by key.
std::vector<ClassReport> verify(Engine& engine, Family family, int n, int k, int s,
                                const OracleLimits& limits = {});

bool all_ok(const std::vector<ClassReport>& reports);

}  // namespace graphgen::oracle
