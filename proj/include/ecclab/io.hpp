#pragma once

// GraphDocument JSON, Graphviz DOT export and matrix JSON.
//
// Graph documents look like
//   {"num_vertices": 3, "edges": [[0,1],[1,2]], "name": "P_3", "labels": ["a","b","c"]}
// with 0-based vertices; "name", "labels" and "metadata" are optional.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ecclab/errors.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/int_matrix.hpp"

namespace ecclab {

using json = nlohmann::json;

struct GraphDocument {
  std::size_t num_vertices = 1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> labels;
  json metadata;  // null when absent

  Graph to_graph() const { return Graph(num_vertices, edges); }

  static GraphDocument from_graph(const Graph& g, std::optional<std::string> name = {}) {
    GraphDocument doc;
    doc.num_vertices = g.num_vertices();
    for (const auto& e : g.edges()) doc.edges.emplace_back(e.u, e.v);
    doc.name = std::move(name);
    return doc;
  }
};

inline json to_json(const GraphDocument& doc) {
  json j;
  j["num_vertices"] = doc.num_vertices;
  json edges = json::array();
  for (const auto& [u, v] : doc.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (doc.name) j["name"] = *doc.name;
  if (doc.labels) j["labels"] = *doc.labels;
  if (!doc.metadata.is_null()) j["metadata"] = doc.metadata;
  return j;
}

inline GraphDocument graph_document_from_json(const json& j) {
  if (!j.is_object()) throw input_error("graph document must be a JSON object");
  GraphDocument doc;
  try {
    doc.num_vertices = j.at("num_vertices").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw input_error("each edge must be a pair [u, v]");
      doc.edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    if (j.contains("labels")) doc.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("metadata")) doc.metadata = j["metadata"];
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed graph document: ") + e.what());
  }
  if (doc.labels && doc.labels->size() != doc.num_vertices) {
    throw input_error("labels must have one entry per vertex");
  }
  doc.to_graph();  // validates endpoints and self-loops
  return doc;
}

inline GraphDocument parse_graph_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  return graph_document_from_json(j);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << text;
}

inline GraphDocument load_graph_document(const std::string& path) {
  return parse_graph_document(read_text_file(path));
}

inline std::string dump_graph_document(const GraphDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// Undirected DOT. Every vertex gets a node line so isolated vertices survive.
inline std::string to_dot(const GraphDocument& doc) {
  std::ostringstream out;
  out << "graph " << detail::dot_quote(doc.name.value_or("G")) << " {\n";
  for (std::size_t v = 0; v < doc.num_vertices; ++v) {
    out << "  " << v;
    if (doc.labels) out << " [label=" << detail::dot_quote((*doc.labels)[v]) << "]";
    out << ";\n";
  }
  for (const auto& [u, v] : doc.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw input_error("matrix must be a JSON array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw input_error("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m(i, c) = BigInt(j[i][c].get<std::string>());
      } catch (const std::exception& e) {
        throw input_error(std::string("matrix entries must be decimal strings: ") + e.what());
      }
    }
  }
  return m;
}

}  // namespace ecclab
