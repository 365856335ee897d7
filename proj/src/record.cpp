#include "graphgen/record.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graphgen {

OutputRecord make_record(const GenRequest& req, const GraphSum& sum) {
  OutputRecord r;
  r.n = req.n;
  r.k = req.k;
  r.s = req.s;
  r.family = std::string(family_name(req.family));
  r.min_degree = req.min_degree;
  const GraphSum collapsed = sum.collapsed();
  for (const auto& [key, term] : collapsed.terms()) {
    ClassRecord c;
    for (const auto& [u, v] : term.graph.edge_list()) c.edges.emplace_back(u + 1, v + 1);
    std::sort(c.edges.begin(), c.edges.end());
    for (Vertex v = 0; v < term.graph.vertex_count(); ++v) {
      for (const auto& label : term.graph.legs(v)) c.legs[v + 1].push_back(label.name());
    }
    c.coefficient = format_rational(term.coefficient);
    c.symmetry_factor = symmetry_factor(term.graph);
    c.canonical_key = key.hex();
    r.classes.push_back(std::move(c));
  }
  return r;
}

Graph class_graph(const ClassRecord& c, int n) {
  Graph g(n);
  for (const auto& [u, v] : c.edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw std::runtime_error("edge endpoint out of range");
    if (u == v) {
      g.add_loop(u - 1);
    } else {
      g.add_edge(u - 1, v - 1);
    }
  }
  for (const auto& [v, labels] : c.legs) {
    if (v < 1 || v > n) throw std::runtime_error("leg vertex out of range");
    for (const auto& label : labels) g.add_leg(v - 1, LegLabel(label));
  }
  return g;
}

GraphSum record_to_sum(const OutputRecord& record) {
  GraphSum out(record.n, record.k, record.s);
  for (const ClassRecord& c : record.classes) {
    const Graph g = class_graph(c, record.n);
    Canonical canon = canonical_form(g);
    if (canon.key.hex() != c.canonical_key) throw std::runtime_error("stored canonical key does not match graph");
    if (symmetry_factor(g) != c.symmetry_factor) throw std::runtime_error("stored symmetry factor does not match graph");
    const Rational coefficient = parse_rational(c.coefficient);
    if (coefficient == 0) throw std::runtime_error("zero coefficient in record");
    out.add(g, coefficient);
  }
  if (out.size() != record.classes.size()) throw std::runtime_error("duplicate classes in record");
  return out;
}

nlohmann::json to_json(const OutputRecord& record) {
  nlohmann::json classes = nlohmann::json::array();
  for (const ClassRecord& c : record.classes) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : c.edges) edges.push_back({u, v});
    nlohmann::json legs = nlohmann::json::object();
    for (const auto& [v, labels] : c.legs) legs[std::to_string(v)] = labels;
    classes.push_back({{"edges", edges},
                       {"legs", legs},
                       {"coefficient", c.coefficient},
                       {"symmetry_factor", c.symmetry_factor},
                       {"canonical_key", c.canonical_key}});
  }
  nlohmann::json j = {{"n", record.n}, {"k", record.k}, {"s", record.s}, {"family", record.family}};
  j["min_degree"] = record.min_degree ? nlohmann::json(*record.min_degree) : nlohmann::json(nullptr);
  j["classes"] = classes;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.s = j.at("s").get<int>();
  r.family = j.at("family").get<std::string>();
  if (j.contains("min_degree") && !j.at("min_degree").is_null()) r.min_degree = j.at("min_degree").get<int>();
  for (const auto& jc : j.at("classes")) {
    ClassRecord c;
    for (const auto& e : jc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::runtime_error("edge must be a pair");
      c.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    for (const auto& [vertex, labels] : jc.at("legs").items()) {
      c.legs[std::stoi(vertex)] = labels.get<std::vector<std::string>>();
    }
    c.coefficient = jc.at("coefficient").get<std::string>();
    c.symmetry_factor = jc.at("symmetry_factor").get<std::uint64_t>();
    c.canonical_key = jc.at("canonical_key").get<std::string>();
    r.classes.push_back(std::move(c));
  }
  return r;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "dot") return OutputFormat::dot;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

std::string class_line(const ClassRecord& c) {
  std::ostringstream os;
  os << "coefficient=" << c.coefficient << " S=" << c.symmetry_factor << " edges=[";
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    os << (e ? " " : "") << c.edges[e].first << "-" << c.edges[e].second;
  }
  os << "] legs=[";
  bool first = true;
  for (const auto& [v, labels] : c.legs) {
    for (const auto& label : labels) {
      os << (first ? "" : " ") << label << "@" << v;
      first = false;
    }
  }
  os << "] key=" << c.canonical_key;
  return os.str();
}

namespace {

std::string header_text(const OutputRecord& r) {
  std::ostringstream os;
  os << r.family << " n=" << r.n << " k=" << r.k << " s=" << r.s;
  if (r.min_degree) os << " min_degree=" << *r.min_degree;
  return os.str();
}

void render_dot_graph(const OutputRecord& r, std::ostream& os) {
  os << "graph graphgen {\n";
  os << "  label=\"" << header_text(r) << "\";\n";
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    const ClassRecord& cls = r.classes[c];
    const std::string prefix = "c" + std::to_string(c) + "_";
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=\"" << cls.coefficient << " (S=" << cls.symmetry_factor << ")\";\n";
    for (int v = 1; v <= r.n; ++v) os << "    " << prefix << "v" << v << " [label=\"" << v << "\"];\n";
    for (const auto& [u, v] : cls.edges) os << "    " << prefix << "v" << u << " -- " << prefix << "v" << v << ";\n";
    for (const auto& [v, labels] : cls.legs) {
      for (const auto& label : labels) {
        os << "    " << prefix << label << " [label=\"" << label << "\", shape=none];\n";
        os << "    " << prefix << "v" << v << " -- " << prefix << label << " [style=dashed];\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
}

}  // namespace

std::string render(const OutputRecord& record, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json:
      os << to_json(record).dump(2) << "\n";
      break;
    case OutputFormat::text:
      for (const ClassRecord& c : record.classes) os << class_line(c) << "\n";
      break;
    case OutputFormat::dot:
      render_dot_graph(record, os);
      break;
  }
  return os.str();
}

std::string render_table(const std::vector<OutputRecord>& blocks, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& b : blocks) j.push_back(to_json(b));
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::text:
      for (const auto& b : blocks) {
        os << "## " << header_text(b) << " m=" << (b.k + b.n - 1) << " classes=" << b.classes.size() << "\n";
        for (const ClassRecord& c : b.classes) os << class_line(c) << "\n";
      }
      break;
    case OutputFormat::dot:
      for (const auto& b : blocks) render_dot_graph(b, os);
      break;
  }
  return os.str();
}

}  // namespace graphgen
