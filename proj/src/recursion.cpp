#include "graphgen/recursion.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <vector>

#include "graphgen/errors.hpp"
#include "graphgen/transforms.hpp"

namespace graphgen {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::connected:
      return "connected";
    case Family::biconnected:
      return "biconnected";
    case Family::simple:
      return "simple";
    case Family::loopless:
      return "loopless";
    case Family::loopless_alt:
      return "loopless-alt";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::connected, Family::biconnected, Family::simple, Family::loopless, Family::loopless_alt}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

bool is_loopless_family(Family f) { return f == Family::loopless || f == Family::loopless_alt; }

bool in_family(Family f, const Graph& g) {
  if (!is_connected(g)) return false;
  switch (f) {
    case Family::connected:
      return true;
    case Family::biconnected:
      return is_biconnected(g);
    case Family::simple:
      return is_simple(g);
    case Family::loopless:
    case Family::loopless_alt:
      return is_loopless(g);
  }
  return false;
}

void validate(const GenRequest& req, const Limits& limits) {
  if (req.n < 1) throw StructuralError("n must be >= 1");
  if (req.k < 0) throw StructuralError("k must be >= 0");
  if (req.s < 0) throw StructuralError("number of legs must be >= 0");
  if (req.min_degree) {
    if (!is_loopless_family(req.family)) {
      throw StructuralError("min_degree is only available for the loopless families");
    }
    if (*req.min_degree < 1) throw StructuralError("min_degree must be >= 1");
  }
  if (req.n > limits.max_n) {
    throw CeilingError("n=" + std::to_string(req.n) + " exceeds ceiling " + std::to_string(limits.max_n));
  }
  if (req.edge_count() > limits.max_edges) {
    throw CeilingError("m=" + std::to_string(req.edge_count()) + " exceeds ceiling " +
                       std::to_string(limits.max_edges));
  }
  if (req.s > limits.max_legs) {
    throw CeilingError("s=" + std::to_string(req.s) + " exceeds ceiling " + std::to_string(limits.max_legs));
  }
}

Engine::Engine(EngineOptions options) : options_(options) {
  if (options_.threads < 1) options_.threads = 1;
}

std::size_t Engine::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

// Applies fn to disjoint chunks of the input's terms and adds the partial
// results in chunk order. Every map is linear, so the result does not depend
// on the chunking.
template <class Fn>
GraphSum Engine::chunked(const GraphSum& input, int n_out, std::optional<int> k_out, Fn fn) const {
  const int threads = std::min<int>(options_.threads, static_cast<int>(input.size()));
  if (threads <= 1) return fn(input);
  std::vector<GraphSum> chunks(static_cast<std::size_t>(threads), GraphSum(input.n(), input.k(), input.s(), input.mode()));
  std::size_t index = 0;
  for (const auto& [key, term] : input.terms()) {
    chunks[index++ % chunks.size()].add_keyed(key, term.graph, term.coefficient);
  }
  std::vector<std::future<GraphSum>> pending;
  pending.reserve(chunks.size());
  for (const auto& chunk : chunks) {
    pending.push_back(std::async(std::launch::async, [&fn, &chunk] { return fn(chunk); }));
  }
  GraphSum total(n_out, k_out, input.s(), input.mode());
  for (auto& p : pending) total = sum_add(total, p.get().with_k(k_out));
  return total;
}

GraphSum Engine::base(int n, int k, int s, int nu, int slack) const {
  const KeyMode mode = options_.collapse_intermediate ? KeyMode::canonical : KeyMode::labeled;
  GraphSum out(n, k, s, mode);
  if (n == 1 && k == 0 && (nu == 0 || s + slack >= nu)) {
    Graph g(1);
    for (const auto& label : standard_labels(s)) g.add_leg(0, label);
    out.add(g, 1);
  }
  return out;
}

Engine::Parts Engine::parts(Family f, int n, int k, int s, int nu, int slack) {
  const KeyMode mode = options_.collapse_intermediate ? KeyMode::canonical : KeyMode::labeled;
  Parts out{GraphSum(n, k, s, mode), GraphSum(n, k, s, mode)};
  // Slack after this step is `slack`; a predecessor one edge short has slack + 1.
  const int bound = nu - slack;

  auto add_split = [&](const GraphSum& prev, int rho) {
    if (prev.empty()) return;
    GraphSum part = chunked(prev, n, k, [&](const GraphSum& chunk) {
      GraphSum acc(n, k, s, mode);
      for (Vertex i = 0; i < n - 1; ++i) {
        GraphSum mapped(n, k, s, mode);
        if (nu > 0) {
          mapped = q_map_min_degree(chunk, i, rho, bound);
        } else if (f == Family::biconnected) {
          mapped = q_map_connected(chunk, i, rho);
        } else if (f == Family::simple) {
          mapped = q_map_disconnected(chunk, i, rho);
        } else {
          mapped = q_map(chunk, i, rho);
        }
        acc = sum_add(acc, mapped.with_k(k));
      }
      return acc;
    });
    out.split_part = sum_add(out.split_part, part);
  };

  if (n >= 2) {
    if (f == Family::loopless_alt) {
      for (int rho = 1; rho <= k + 1; ++rho) add_split(compute(f, n - 1, k + 1 - rho, s, nu, nu ? slack + rho : 0), rho);
    } else {
      add_split(compute(f, n - 1, k, s, nu, nu ? slack + 1 : 0), 1);
    }
  }

  if (k > 0 && f != Family::loopless_alt) {
    const GraphSum prev = compute(f, n, k - 1, s, nu, nu ? slack + 1 : 0);
    if (!prev.empty()) {
      out.edge_part = chunked(prev, n, k, [&](const GraphSum& chunk) {
        GraphSum acc(n, k, s, mode);
        if (f == Family::connected || f == Family::biconnected) {
          for (Vertex i = 0; i < n; ++i) acc = sum_add(acc, add_loop(chunk, i).with_k(k));
          return sum_scale(acc, Rational(1, 2));
        }
        for (Vertex i = 0; i < n; ++i) {
          for (Vertex j = 0; j < i; ++j) {
            GraphSum mapped = f == Family::simple ? add_edge_nonadjacent(chunk, i, j) : add_edge_adjacent(chunk, i, j);
            acc = sum_add(acc, mapped.with_k(k));
          }
        }
        return acc;
      });
    }
  }
  return out;
}

GraphSum Engine::compute(Family f, int n, int k, int s, int nu, int slack) {
  const MemoKey key{f, n, k, s, nu, slack};
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  GraphSum result = base(n, k, s, nu, slack);
  const bool recursive = n >= 2 || (k > 0 && (f == Family::connected || f == Family::biconnected));
  const bool bridged_biconnected = f == Family::biconnected && n >= 2 && k == 0;
  if (recursive && !bridged_biconnected) {
    Parts p = parts(f, n, k, s, nu, slack);
    result = sum_scale(sum_add(p.split_part, p.edge_part), Rational(1, k + n - 1));
  }
  if (nu > 0) {
    result = sum_filter(result, [&](const Graph& g) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) + slack < nu) return false;
      }
      return true;
    });
  }

  std::lock_guard lock(mutex_);
  return memo_.emplace(key, std::move(result)).first->second;
}

GraphSum Engine::generate(const GenRequest& req) {
  if (req.min_degree) return generate_min_degree(req);
  validate(req, options_.limits);
  return compute(req.family, req.n, req.k, req.s, 0, 0).collapsed();
}

GraphSum Engine::generate_min_degree(const GenRequest& req) {
  validate(req, options_.limits);
  if (!req.min_degree) throw StructuralError("generate_min_degree needs min_degree");
  return compute(req.family, req.n, req.k, req.s, *req.min_degree, 0).collapsed();
}

Engine::Parts Engine::recursion_parts(const GenRequest& req) {
  validate(req, options_.limits);
  if (req.min_degree) throw StructuralError("recursion_parts takes unfiltered requests");
  return parts(req.family, req.n, req.k, req.s, 0, 0);
}

GraphSum leg_extension(const GraphSum& base, std::span<const LegLabel> new_labels) {
  std::vector<Vertex> all(static_cast<std::size_t>(base.n()));
  for (Vertex v = 0; v < base.n(); ++v) all[static_cast<std::size_t>(v)] = v;
  return distribute_legs(base, new_labels, all);
}

}  // namespace graphgen
