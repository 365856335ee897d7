#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphgen {

/// Label carried by the free end of an external edge ("x1", "x2", ...).
///
/// Labels order by their non-numeric prefix first and then by the value of the
/// trailing digits, so x2 < x10.
class LegLabel {
 public:
  LegLabel() = default;
  explicit LegLabel(std::string name);

  /// The standard label x<index>, index >= 1.
  static LegLabel standard(int index);

  const std::string& name() const noexcept { return name_; }

  friend std::strong_ordering operator<=>(const LegLabel& a, const LegLabel& b);
  friend bool operator==(const LegLabel& a, const LegLabel& b) = default;

 private:
  std::string name_;
};

/// x1..x<count>.
std::vector<LegLabel> standard_labels(int count);
/// x<first>..x<first + count - 1>.
std::vector<LegLabel> standard_labels(int first, int count);

using Vertex = int;  // 0-based

/// Vertex-labelled multigraph with loops, parallel edges and labelled legs.
///
/// Vertices are 0..n-1. Internal edges are stored as a loop count per vertex
/// and a symmetric multiplicity matrix; edge instances are anonymous. Each
/// vertex holds its legs as a sorted list of labels, and a label occurs on at
/// most one vertex. Half-edges are implicit: a loop contributes two end slots
/// at its vertex, an edge one at each end, a leg one.
class Graph {
 public:
  /// n isolated vertices; throws StructuralError for n < 1.
  explicit Graph(int n);

  /// Edges are 0-based vertex pairs; (v, v) is a loop.
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::span<const std::pair<Vertex, LegLabel>> legs = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return edges_; }
  int leg_count() const noexcept { return legs_total_; }

  int loops(Vertex v) const;
  int multiplicity(Vertex u, Vertex v) const;
  const std::vector<LegLabel>& legs(Vertex v) const;
  /// Number of end slots at v: 2 per loop, 1 per incident edge, 1 per leg.
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return u != v && multiplicity(u, v) > 0; }

  /// Sorted (u <= v) pairs, one per edge instance.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;
  /// All leg labels in ascending order.
  std::vector<LegLabel> all_legs() const;

  void add_loop(Vertex v);
  void add_edge(Vertex u, Vertex v);  // u != v
  void remove_loop(Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void add_leg(Vertex v, LegLabel label);
  void remove_leg(Vertex v, const LegLabel& label);

  /// Appends an isolated vertex and returns its index.
  Vertex add_vertex();
  /// Deletes an isolated, leg-free vertex and shifts higher indices down.
  void remove_isolated_vertex(Vertex v);

  /// Graph whose vertex p is this graph's vertex order[p].
  Graph relabeled(std::span<const Vertex> order) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check_vertex(Vertex v) const;
  int& mult_ref(Vertex u, Vertex v) { return mult_[static_cast<std::size_t>(u * n_ + v)]; }

  int n_ = 1;
  int edges_ = 0;
  int legs_total_ = 0;
  std::vector<int> loops_;
  std::vector<int> mult_;  // n*n, symmetric, zero diagonal
  std::vector<std::vector<LegLabel>> legs_;
};

/// Connected components of the internal-edge structure (legs ignored).
int component_count(const Graph& g);
/// m - n + c.
int cyclomatic_number(const Graph& g);

bool is_connected(const Graph& g);
/// Connected and still connected after erasing any one internal edge. A single
/// vertex counts as biconnected; loops never disconnect.
bool is_biconnected(const Graph& g);
bool is_simple(const Graph& g);
bool is_loopless(const Graph& g);
int min_degree(const Graph& g);

}  // namespace graphgen
