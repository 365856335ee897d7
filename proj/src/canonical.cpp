#include "graphgen/canonical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace graphgen {

namespace {

constexpr char kCanonicalTag = 'C';
constexpr char kLabeledTag = 'L';

void put_u16(std::string& out, int value) {
  if (value < 0 || value > 0xffff) throw std::overflow_error("graph too large to encode");
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

// Dense view of a graph with legs replaced by their rank in the sorted label
// table, so rows compare as plain integer sequences.
struct Prepared {
  int n = 0;
  std::vector<LegLabel> labels;
  std::vector<int> degree;
  std::vector<int> loops;
  std::vector<int> mult;
  std::vector<std::vector<int>> leg_ranks;

  explicit Prepared(const Graph& g) : n(g.vertex_count()), labels(g.all_legs()) {
    degree.resize(static_cast<std::size_t>(n));
    loops.resize(static_cast<std::size_t>(n));
    mult.resize(static_cast<std::size_t>(n * n));
    leg_ranks.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      degree[static_cast<std::size_t>(v)] = g.degree(v);
      loops[static_cast<std::size_t>(v)] = g.loops(v);
      for (Vertex u = 0; u < n; ++u) mult[static_cast<std::size_t>(v * n + u)] = g.multiplicity(v, u);
      for (const auto& label : g.legs(v)) {
        const auto it = std::lower_bound(labels.begin(), labels.end(), label);
        leg_ranks[static_cast<std::size_t>(v)].push_back(static_cast<int>(it - labels.begin()));
      }
    }
  }

  void row(Vertex v, const std::vector<Vertex>& prefix, std::vector<int>& out) const {
    out.clear();
    out.push_back(degree[static_cast<std::size_t>(v)]);
    out.push_back(loops[static_cast<std::size_t>(v)]);
    const auto& legs = leg_ranks[static_cast<std::size_t>(v)];
    out.push_back(static_cast<int>(legs.size()));
    out.insert(out.end(), legs.begin(), legs.end());
    for (Vertex u : prefix) out.push_back(mult[static_cast<std::size_t>(v * n + u)]);
  }

  std::string encode(char tag, const std::vector<Vertex>& order) const {
    std::string out;
    out.push_back(tag);
    put_u16(out, n);
    put_u16(out, static_cast<int>(labels.size()));
    for (const auto& label : labels) {
      put_u16(out, static_cast<int>(label.name().size()));
      out += label.name();
    }
    std::vector<Vertex> prefix;
    std::vector<int> r;
    for (Vertex v : order) {
      row(v, prefix, r);
      for (int x : r) put_u16(out, x);
      prefix.push_back(v);
    }
    return out;
  }
};

struct Partial {
  std::vector<Vertex> order;
  std::uint32_t used = 0;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit in key");
  };
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex key");
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return CanonicalKey(std::move(bytes));
}

Canonical canonical_form(const Graph& g) {
  const Prepared prep(g);
  const int n = prep.n;
  if (n > 32) throw std::length_error("canonical_form supports at most 32 vertices");

  std::vector<Partial> frontier{Partial{}};
  std::vector<Partial> next;
  std::vector<int> best;
  std::vector<int> row;
  for (int depth = 0; depth < n; ++depth) {
    next.clear();
    best.clear();
    bool have_best = false;
    for (const Partial& p : frontier) {
      for (Vertex v = 0; v < n; ++v) {
        if (p.used & (1u << v)) continue;
        prep.row(v, p.order, row);
        if (have_best) {
          const auto cmp = std::lexicographical_compare_three_way(row.begin(), row.end(), best.begin(), best.end());
          if (cmp > 0) continue;
          if (cmp < 0) {
            next.clear();
            best = row;
          }
        } else {
          best = row;
          have_best = true;
        }
        Partial extended = p;
        extended.order.push_back(v);
        extended.used |= (1u << v);
        next.push_back(std::move(extended));
      }
    }
    frontier.swap(next);
  }

  const std::vector<Vertex>& order = frontier.front().order;
  return Canonical{g.relabeled(order), CanonicalKey(prep.encode(kCanonicalTag, order)),
                   static_cast<std::uint64_t>(frontier.size())};
}

std::pair<Graph, CanonicalKey> canonicalize(const Graph& g) {
  Canonical c = canonical_form(g);
  return {std::move(c.graph), std::move(c.key)};
}

CanonicalKey labeled_key(const Graph& g) {
  const Prepared prep(g);
  std::vector<Vertex> identity(static_cast<std::size_t>(prep.n));
  for (int v = 0; v < prep.n; ++v) identity[static_cast<std::size_t>(v)] = v;
  return CanonicalKey(prep.encode(kLabeledTag, identity));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
      g.leg_count() != h.leg_count()) {
    return false;
  }
  return canonical_form(g).key == canonical_form(h).key;
}

std::uint64_t vertex_automorphism_count(const Graph& g) { return canonical_form(g).vertex_automorphisms; }

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("symmetry factor exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

}  // namespace

std::uint64_t edge_symmetry_factor(const Graph& g) {
  std::uint64_t s = 1;
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    const int l = g.loops(v);
    s = checked_mul(s, factorial(l));
    for (int r = 0; r < l; ++r) s = checked_mul(s, 2);
    for (Vertex u = v + 1; u < n; ++u) s = checked_mul(s, factorial(g.multiplicity(v, u)));
  }
  return s;
}

std::uint64_t symmetry_factor(const Graph& g) {
  return checked_mul(vertex_automorphism_count(g), edge_symmetry_factor(g));
}

}  // namespace graphgen
