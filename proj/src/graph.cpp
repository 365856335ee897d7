#include "graphgen/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string_view>

#include "graphgen/errors.hpp"

namespace graphgen {

LegLabel::LegLabel(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw StructuralError("empty leg label");
}

LegLabel LegLabel::standard(int index) {
  if (index < 1) throw StructuralError("leg label index must be >= 1");
  return LegLabel("x" + std::to_string(index));
}

std::vector<LegLabel> standard_labels(int count) { return standard_labels(1, count); }

std::vector<LegLabel> standard_labels(int first, int count) {
  std::vector<LegLabel> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int z = 0; z < count; ++z) out.push_back(LegLabel::standard(first + z));
  return out;
}

namespace {

struct SplitLabel {
  std::string_view prefix;
  std::string_view digits;  // leading zeros stripped
};

SplitLabel split_label(std::string_view s) {
  std::size_t cut = s.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
  std::string_view digits = s.substr(cut);
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return {s.substr(0, cut), digits};
}

}  // namespace

std::strong_ordering operator<=>(const LegLabel& a, const LegLabel& b) {
  const SplitLabel x = split_label(a.name_);
  const SplitLabel y = split_label(b.name_);
  if (auto c = x.prefix <=> y.prefix; c != 0) return c;
  if (auto c = x.digits.size() <=> y.digits.size(); c != 0) return c;
  if (auto c = x.digits <=> y.digits; c != 0) return c;
  return a.name_ <=> b.name_;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw StructuralError("graph needs at least one vertex");
  loops_.assign(static_cast<std::size_t>(n), 0);
  mult_.assign(static_cast<std::size_t>(n * n), 0);
  legs_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::span<const std::pair<Vertex, LegLabel>> legs) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) {
      g.add_loop(u);
    } else {
      g.add_edge(u, v);
    }
  }
  for (const auto& [v, label] : legs) g.add_leg(v, label);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

int Graph::loops(Vertex v) const {
  check_vertex(v);
  return loops_[static_cast<std::size_t>(v)];
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return mult_[static_cast<std::size_t>(u * n_ + v)];
}

const std::vector<LegLabel>& Graph::legs(Vertex v) const {
  check_vertex(v);
  return legs_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 2 * loops_[static_cast<std::size_t>(v)] + static_cast<int>(legs_[static_cast<std::size_t>(v)].size());
  for (Vertex u = 0; u < n_; ++u) d += mult_[static_cast<std::size_t>(v * n_ + u)];
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < n_; ++u) {
    for (int r = 0; r < loops_[static_cast<std::size_t>(u)]; ++r) out.emplace_back(u, u);
    for (Vertex v = u + 1; v < n_; ++v) {
      for (int r = 0; r < multiplicity(u, v); ++r) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<LegLabel> Graph::all_legs() const {
  std::vector<LegLabel> out;
  for (const auto& ls : legs_) out.insert(out.end(), ls.begin(), ls.end());
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::add_loop(Vertex v) {
  check_vertex(v);
  ++loops_[static_cast<std::size_t>(v)];
  ++edges_;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw StructuralError("add_edge needs distinct endpoints; use add_loop");
  ++mult_ref(u, v);
  ++mult_ref(v, u);
  ++edges_;
}

void Graph::remove_loop(Vertex v) {
  check_vertex(v);
  if (loops_[static_cast<std::size_t>(v)] == 0) {
    throw PreconditionError("no loop at vertex " + std::to_string(v));
  }
  --loops_[static_cast<std::size_t>(v)];
  --edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw StructuralError("remove_edge needs distinct endpoints; use remove_loop");
  if (mult_ref(u, v) == 0) {
    throw PreconditionError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  --mult_ref(u, v);
  --mult_ref(v, u);
  --edges_;
}

void Graph::add_leg(Vertex v, LegLabel label) {
  check_vertex(v);
  for (const auto& ls : legs_) {
    if (std::find(ls.begin(), ls.end(), label) != ls.end()) {
      throw PreconditionError("leg label " + label.name() + " already present");
    }
  }
  auto& ls = legs_[static_cast<std::size_t>(v)];
  ls.insert(std::upper_bound(ls.begin(), ls.end(), label), std::move(label));
  ++legs_total_;
}

void Graph::remove_leg(Vertex v, const LegLabel& label) {
  check_vertex(v);
  auto& ls = legs_[static_cast<std::size_t>(v)];
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw PreconditionError("no leg " + label.name() + " at vertex " + std::to_string(v));
  ls.erase(it);
  --legs_total_;
}

Vertex Graph::add_vertex() {
  const int m = n_ + 1;
  std::vector<int> grown(static_cast<std::size_t>(m * m), 0);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) grown[static_cast<std::size_t>(u * m + v)] = mult_[static_cast<std::size_t>(u * n_ + v)];
  }
  mult_ = std::move(grown);
  loops_.push_back(0);
  legs_.emplace_back();
  n_ = m;
  return n_ - 1;
}

void Graph::remove_isolated_vertex(Vertex v) {
  check_vertex(v);
  if (n_ == 1) throw StructuralError("cannot remove the only vertex");
  if (degree(v) != 0) throw PreconditionError("vertex " + std::to_string(v) + " is not isolated");
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v) keep.push_back(u);
  }
  const int m = n_ - 1;
  std::vector<int> shrunk(static_cast<std::size_t>(m * m), 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) shrunk[static_cast<std::size_t>(a * m + b)] = multiplicity(keep[a], keep[b]);
  }
  mult_ = std::move(shrunk);
  loops_.erase(loops_.begin() + v);
  legs_.erase(legs_.begin() + v);
  n_ = m;
}

Graph Graph::relabeled(std::span<const Vertex> order) const {
  if (static_cast<int>(order.size()) != n_) throw StructuralError("relabeling has wrong length");
  Graph out(n_);
  out.edges_ = edges_;
  out.legs_total_ = legs_total_;
  for (int p = 0; p < n_; ++p) {
    const Vertex old = order[static_cast<std::size_t>(p)];
    out.loops_[static_cast<std::size_t>(p)] = loops(old);
    out.legs_[static_cast<std::size_t>(p)] = legs(old);
    for (int q = 0; q < n_; ++q) {
      out.mult_[static_cast<std::size_t>(p * n_ + q)] = multiplicity(old, order[static_cast<std::size_t>(q)]);
    }
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Components when the pair {skip_u, skip_v} loses one edge instance.
int components_without(const Graph& g, Vertex skip_u, Vertex skip_v) {
  const int n = g.vertex_count();
  DisjointSets sets(n);
  int count = n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      int mu = g.multiplicity(u, v);
      if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) --mu;
      if (mu > 0 && sets.unite(u, v)) --count;
    }
  }
  return count;
}

}  // namespace

int component_count(const Graph& g) { return components_without(g, -1, -1); }

int cyclomatic_number(const Graph& g) { return g.edge_count() - g.vertex_count() + component_count(g); }

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_biconnected(const Graph& g) {
  if (!is_connected(g)) return false;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.multiplicity(u, v) == 1 && components_without(g, u, v) != 1) return false;
    }
  }
  return true;
}

bool is_simple(const Graph& g) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (g.loops(u) > 0) return false;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.multiplicity(u, v) > 1) return false;
    }
  }
  return true;
}

bool is_loopless(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.loops(v) > 0) return false;
  }
  return true;
}

int min_degree(const Graph& g) {
  int d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

}  // namespace graphgen
