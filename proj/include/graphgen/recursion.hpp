#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <tuple>

#include "graphgen/graph_sum.hpp"

namespace graphgen {

/// Which recursion builds the sum.
enum class Family {
  connected,     // q^(1) + loops
  biconnected,   // q^c(1) + loops
  simple,        // q^d(1) + edges between non-adjacent vertices
  loopless,      // q^(1) + edges between adjacent vertices
  loopless_alt,  // sum over rho of q^(rho)
};

std::string_view family_name(Family f);
/// Accepts the names printed by family_name ("loopless-alt" for the last).
std::optional<Family> parse_family(std::string_view name);
bool is_loopless_family(Family f);
/// Membership test for the graphs a family generates.
bool in_family(Family f, const Graph& g);

struct GenRequest {
  Family family = Family::connected;
  int n = 1;
  int k = 0;
  int s = 0;
  std::optional<int> min_degree;  // loopless families only

  int edge_count() const { return k + n - 1; }
  friend bool operator==(const GenRequest&, const GenRequest&) = default;
};

struct Limits {
  int max_n = 10;
  int max_edges = 12;
  int max_legs = 12;
};

/// StructuralError for a malformed request, CeilingError beyond the limits.
void validate(const GenRequest& req, const Limits& limits = {});

struct EngineOptions {
  // When false, intermediate sums keep every labelled graph and only the
  // final result is collapsed.
  bool collapse_intermediate = true;
  int threads = 1;
  Limits limits;
};

/// Memoised evaluation of the five recursions.
///
/// Each (n, k) level is built from the (n-1, .) and (n, k-1) levels, so the
/// memo table fills in order of increasing edge count m = k + n - 1. Results
/// are exact and independent of the thread count.
class Engine {
 public:
  explicit Engine(EngineOptions options = {});

  /// The collapsed formal sum for the request. With min_degree set this is
  /// generate_min_degree.
  GraphSum generate(const GenRequest& req);

  /// Only graphs whose every vertex has degree >= min_degree; equal to the
  /// unfiltered sum with the other terms removed.
  ///
  /// Runs the family recursion with q_map_min_degree in place of the q-maps.
  /// With R edges still to be added after a step, the bound used for that
  /// step is min_degree - R (a vertex's descendants gain at most R end
  /// slots), and terms with a vertex of degree + R < min_degree are dropped.
  /// At the last step this is exactly the bound min_degree.
  GraphSum generate_min_degree(const GenRequest& req);

  /// The two summands of the recursion for an unfiltered request with
  /// n >= 2 or k >= 1, before division by k + n - 1: the split part
  /// (q-maps) and the edge part (loops or added edges).
  struct Parts {
    GraphSum split_part;
    GraphSum edge_part;
  };
  Parts recursion_parts(const GenRequest& req);

  const EngineOptions& options() const noexcept { return options_; }
  std::size_t memo_size() const;

 private:
  using MemoKey = std::tuple<Family, int, int, int, int, int>;  // family, n, k, s, nu, slack

  GraphSum compute(Family f, int n, int k, int s, int nu, int slack);
  Parts parts(Family f, int n, int k, int s, int nu, int slack);
  GraphSum base(int n, int k, int s, int nu, int slack) const;

  template <class Fn>
  GraphSum chunked(const GraphSum& input, int n_out, std::optional<int> k_out, Fn fn) const;

  EngineOptions options_;
  mutable std::mutex mutex_;
  std::map<MemoKey, GraphSum> memo_;
};

/// xi over all vertices: generate(connected, n, k, s + s') from
/// generate(connected, n, k, s), new labels x_{s+1}..x_{s+s'}.
GraphSum leg_extension(const GraphSum& base, std::span<const LegLabel> new_labels);

}  // namespace graphgen
