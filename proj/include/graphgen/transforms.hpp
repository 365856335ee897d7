#pragma once

#include <span>
#include <vector>

#include "graphgen/graph.hpp"
#include "graphgen/graph_sum.hpp"

// Elementary linear maps on formal graph sums. Every map acts termwise and
// returns a sum in the input's key mode, so canonical-mode outputs come back
// collapsed. Vertex indices are 0-based; a split appends the new vertex at
// index n.

namespace graphgen {

/// One end of an edge or leg sitting at a vertex.
struct EndSlot {
  enum class Kind { loop_end, edge_end, leg_end };
  Kind kind;
  int instance = 0;     // ordinal among loops at the vertex, or among parallel edges to neighbor
  Vertex neighbor = -1; // edge_end only
  LegLabel leg;         // leg_end only
  int side = 0;         // loop_end only: which end of the loop
};

/// The deg(v) end slots of v: two per loop, one per incident edge instance,
/// one per leg.
std::vector<EndSlot> end_slots(const Graph& g, Vertex v);

/// t_i: one more loop at i.
GraphSum add_loop(const GraphSum& sum, Vertex i);
/// Inverse of add_loop; PreconditionError when a term has no loop at i.
GraphSum erase_loop(const GraphSum& sum, Vertex i);

/// l_{i,j}: one more edge {i, j}; StructuralError for i == j.
GraphSum add_edge(const GraphSum& sum, Vertex i, Vertex j);
/// l^a_{i,j}: add_edge restricted to terms where i and j are already adjacent.
GraphSum add_edge_adjacent(const GraphSum& sum, Vertex i, Vertex j);
/// l^b_{i,j}: add_edge restricted to terms where i and j are not adjacent.
GraphSum add_edge_nonadjacent(const GraphSum& sum, Vertex i, Vertex j);
/// Inverse of add_edge; PreconditionError when a term lacks the edge.
GraphSum erase_edge(const GraphSum& sum, Vertex i, Vertex j);

/// s_{E_i}: every ordered assignment of i's end slots to (i, n). A loop whose
/// ends land on different sides becomes an edge {i, n}.
GraphSum split_vertex(const GraphSum& sum, Vertex i);
/// Split results that are connected (s^c) / disconnected (s^d).
GraphSum split_connected(const GraphSum& sum, Vertex i);
GraphSum split_disconnected(const GraphSum& sum, Vertex i);
/// s^(rho): only assignments giving each side at least nu - rho end slots.
GraphSum split_min_degree(const GraphSum& sum, Vertex i, int rho, int nu);

/// q_i^(rho) = 1/(2 (rho-1)!) * l_{i,n}^rho o s_{E_i}.
GraphSum q_map(const GraphSum& sum, Vertex i, int rho);
GraphSum q_map_connected(const GraphSum& sum, Vertex i, int rho);
GraphSum q_map_disconnected(const GraphSum& sum, Vertex i, int rho);
/// q_map with the split restricted as in split_min_degree.
GraphSum q_map_min_degree(const GraphSum& sum, Vertex i, int rho, int nu);

/// c_{i,j}, i < j: drop one edge {i, j} and fuse j into i. Remaining parallel
/// {i, j} edges and loops at j become loops at i; vertices above j shift down.
GraphSum contract_edge(const GraphSum& sum, Vertex i, Vertex j);

/// xi: every function from new_labels to targets, one output term each.
GraphSum distribute_legs(const GraphSum& sum, std::span<const LegLabel> new_labels,
                         std::span<const Vertex> targets);

/// epsilon: new_labels[z] goes to bare_targets[z]. Each target must have no
/// legs before the call.
GraphSum attach_legs(const GraphSum& sum, std::span<const LegLabel> new_labels,
                     std::span<const Vertex> bare_targets);

}  // namespace graphgen
