#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphgen/graph_sum.hpp"
#include "graphgen/recursion.hpp"

namespace graphgen {

/// One isomorphism class as written to disk. Vertices are 1-based.
struct ClassRecord {
  std::vector<std::pair<int, int>> edges;            // sorted (u <= v), one entry per edge instance
  std::map<int, std::vector<std::string>> legs;      // only vertices that carry legs
  std::string coefficient;                           // "p/q"
  std::uint64_t symmetry_factor = 1;
  std::string canonical_key;                         // hex

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// Result of one generation request; classes sorted by canonical key.
struct OutputRecord {
  int n = 1;
  int k = 0;
  int s = 0;
  std::string family;
  std::optional<int> min_degree;
  std::vector<ClassRecord> classes;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const GenRequest& req, const GraphSum& sum);

/// Rebuilds the collapsed sum. Throws std::runtime_error when a stored key,
/// symmetry factor or shape disagrees with the graph it describes.
GraphSum record_to_sum(const OutputRecord& record);

Graph class_graph(const ClassRecord& c, int n);

nlohmann::json to_json(const OutputRecord& record);
/// Throws nlohmann::json::exception or std::runtime_error on malformed input.
OutputRecord record_from_json(const nlohmann::json& j);

enum class OutputFormat { json, dot, text };
std::optional<OutputFormat> parse_format(std::string_view name);

std::string render(const OutputRecord& record, OutputFormat format);
/// Several records, one block per (n, k), in one document.
std::string render_table(const std::vector<OutputRecord>& blocks, OutputFormat format);

/// One text line per class: coefficient, symmetry factor, edges, legs, key.
std::string class_line(const ClassRecord& c);

}  // namespace graphgen
