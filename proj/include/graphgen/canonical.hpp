#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "graphgen/graph.hpp"

namespace graphgen {

/// Byte encoding of a graph. Canonical keys are equal iff the graphs are
/// isomorphic (leg labels respected); labelled keys identify a graph exactly,
/// vertex numbering included. The two kinds never compare equal.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

struct Canonical {
  Graph graph;       // representative with the minimal encoding
  CanonicalKey key;
  std::uint64_t vertex_automorphisms = 1;
};

/// Lexicographically minimal encoding over all vertex relabelings.
///
/// Each vertex contributes a row (degree, loop count, leg count, leg labels,
/// multiplicities to every earlier vertex); the key is the concatenation of
/// rows, minimised by a breadth-first search that keeps every relabeling tied
/// for the minimum. The survivors form a coset of the vertex automorphism
/// group, so their number is that group's order.
Canonical canonical_form(const Graph& g);

/// (representative, key); idempotent on the representative.
std::pair<Graph, CanonicalKey> canonicalize(const Graph& g);

/// Key of g under its own vertex numbering.
CanonicalKey labeled_key(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Vertex permutations preserving loop counts, multiplicities and leg sets.
std::uint64_t vertex_automorphism_count(const Graph& g);

/// Order of the incidence-preserving automorphism group on vertices and
/// half-edges: |Aut_V| * prod_v 2^loops(v) loops(v)! * prod_{u<v} mult(u,v)!.
std::uint64_t symmetry_factor(const Graph& g);

/// Vertex-fixing part of symmetry_factor (loop flips and permutations,
/// parallel-edge permutations).
std::uint64_t edge_symmetry_factor(const Graph& g);

}  // namespace graphgen
