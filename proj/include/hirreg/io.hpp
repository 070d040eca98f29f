#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hirreg/covering.hpp"
#include "hirreg/labeling.hpp"

namespace hirreg {

using json = nlohmann::json;

// Labeling file:
//   {"kind": "total", "k": 2, "m": 2, "n": 3,
//    "labels": [{"element": {"v": [1, 1]}, "label": 1},
//               {"element": {"e": [[1, 1], [1, 2]]}, "label": 1}, ...]}
// Entries follow canonical element order; edges are written endpoint-sorted.
//
// Family file:
//   {"host": {"m": 2, "n": 3}                              (full grid)
//         | {"vertices": [[i, j], ...], "edges": [[[i, j], [i, j]], ...]},
//    "members": [{"vertices": [...], "edges": [...], "window": 1}, ...]}
// "window" is optional and informational. Non-grid hosts put every vertex
// in row 1: u_1^1, u_1^2, ...

struct LabelingFile {
  Labeling labeling;
  std::optional<GridSpec> grid;
};

namespace detail {

inline json vertex_json(VertexId v) { return json::array({v.i, v.j}); }

inline json edge_json(const EdgeId& e) {
  return json::array({vertex_json(e.a()), vertex_json(e.b())});
}

inline VertexId vertex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(ErrorCode::Parse, "vertex must be [i, j], got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

inline EdgeId edge_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::Parse, "edge must be [[i, j], [i, j]], got " + j.dump());
  }
  return EdgeId::between(vertex_from(j[0]), vertex_from(j[1]));
}

inline const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw Error(ErrorCode::Parse, std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace detail

inline json element_json(const Element& element) {
  if (const auto* v = std::get_if<VertexId>(&element)) return {{"v", detail::vertex_json(*v)}};
  return {{"e", detail::edge_json(std::get<EdgeId>(element))}};
}

inline Element element_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw Error(ErrorCode::Parse, "element must be {\"v\": ...} or {\"e\": ...}, got " + j.dump());
  }
  if (j.contains("v")) return detail::vertex_from(j.at("v"));
  if (j.contains("e")) return detail::edge_from(j.at("e"));
  throw Error(ErrorCode::Parse, "unknown element tag in " + j.dump());
}

inline json labeling_to_json(const Labeling& labeling, GridSpec grid) {
  json entries = json::array();
  for (const auto& [element, label] : labeling.labels()) {
    entries.push_back({{"element", element_json(element)}, {"label", label}});
  }
  return {{"kind", to_string(labeling.kind())},
          {"k", labeling.k()},
          {"m", grid.m},
          {"n", grid.n},
          {"labels", std::move(entries)}};
}

/// Labeling file text: the same document as labeling_to_json with one
/// label entry per line.
inline std::string labeling_to_text(const Labeling& labeling, GridSpec grid) {
  std::ostringstream out;
  out << "{\n  \"kind\": \"" << to_string(labeling.kind()) << "\",\n  \"k\": " << labeling.k()
      << ",\n  \"m\": " << grid.m << ",\n  \"n\": " << grid.n << ",\n  \"labels\": [";
  bool first = true;
  for (const auto& [element, label] : labeling.labels()) {
    out << (first ? "\n    " : ",\n    ");
    out << json{{"element", element_json(element)}, {"label", label}}.dump();
    first = false;
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

inline LabelingFile labeling_from_json(const json& j) {
  try {
    const auto kind = parse_kind(detail::field(j, "kind").get<std::string>());
    const auto& k = detail::field(j, "k");
    if (!k.is_number_integer()) throw Error(ErrorCode::Parse, "'k' must be an integer");
    LabelingFile file{Labeling(kind, k.get<Label>()), std::nullopt};
    if (j.contains("m") && j.contains("n")) {
      file.grid = GridSpec{j.at("m").get<int>(), j.at("n").get<int>()};
    }
    const auto& entries = detail::field(j, "labels");
    if (!entries.is_array()) throw Error(ErrorCode::Parse, "'labels' must be an array");
    for (const auto& entry : entries) {
      auto element = element_from_json(detail::field(entry, "element"));
      const auto& label = detail::field(entry, "label");
      if (!label.is_number_integer()) {
        throw Error(ErrorCode::Parse, "label of " + to_string(element) + " is not an integer");
      }
      if (file.labeling.get(element)) {
        throw Error(ErrorCode::Parse, "duplicate entry for " + to_string(element));
      }
      file.labeling.set(element, label.get<Label>());
    }
    return file;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline json graph_to_json(const Graph& g) {
  json vertices = json::array();
  json edges = json::array();
  for (auto v : g.vertices()) vertices.push_back(detail::vertex_json(v));
  for (const auto& e : g.edges()) edges.push_back(detail::edge_json(e));
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
  if (j.is_object() && j.contains("m") && j.contains("n") && !j.contains("vertices")) {
    return make_grid({j.at("m").get<int>(), j.at("n").get<int>()});
  }
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  for (const auto& v : detail::field(j, "vertices")) vertices.push_back(detail::vertex_from(v));
  for (const auto& e : detail::field(j, "edges")) edges.push_back(detail::edge_from(e));
  return Graph(std::move(vertices), std::move(edges));
}

inline json family_to_json(const CoverFamily& family) {
  json host;
  if (is_full_grid(family.host())) {
    auto spec = bounding_spec(family.host());
    host = {{"m", spec.m}, {"n", spec.n}};
  } else {
    host = graph_to_json(family.host());
  }
  json members = json::array();
  for (const auto& member : family.members()) {
    json entry = graph_to_json(Graph(std::vector<VertexId>(member.vertices().begin(),
                                                           member.vertices().end()),
                                     std::vector<EdgeId>(member.edges().begin(),
                                                         member.edges().end())));
    if (member.window()) entry["window"] = *member.window();
    members.push_back(std::move(entry));
  }
  return {{"host", std::move(host)}, {"members", std::move(members)}};
}

inline CoverFamily family_from_json(const json& j) {
  try {
    Graph host = graph_from_json(detail::field(j, "host"));
    std::vector<Subgraph> members;
    const auto& entries = detail::field(j, "members");
    if (!entries.is_array()) throw Error(ErrorCode::Parse, "'members' must be an array");
    for (const auto& entry : entries) {
      std::vector<VertexId> vertices;
      std::vector<EdgeId> edges;
      for (const auto& v : detail::field(entry, "vertices")) vertices.push_back(detail::vertex_from(v));
      for (const auto& e : detail::field(entry, "edges")) edges.push_back(detail::edge_from(e));
      std::optional<int> window;
      if (entry.contains("window")) window = entry.at("window").get<int>();
      members.emplace_back(std::move(vertices), std::move(edges), window);
    }
    return CoverFamily(std::move(host), std::move(members));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

namespace detail {

inline std::string dot_node(VertexId v) {
  return "u" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

}  // namespace detail

/// Graphviz export. Element labels become `label` attributes; window
/// membership, when a family is given, is written as comments.
inline std::string to_dot(const Graph& g, const Labeling* labeling = nullptr,
                          const CoverFamily* family = nullptr) {
  auto spec = bounding_spec(g);
  std::ostringstream out;
  out << "graph grid_" << spec.m << "x" << spec.n << " {\n";
  if (labeling) {
    out << "  // " << to_string(labeling->kind()) << " labeling, k = " << labeling->k() << "\n";
  }
  if (family) {
    for (int l = 1; l <= family->t(); ++l) {
      const auto& member = family->member(l);
      out << "  // member " << l << ":";
      for (auto v : member.vertices()) out << " " << detail::dot_node(v);
      out << "\n";
    }
  }
  for (auto v : g.vertices()) {
    std::optional<Label> label = labeling ? labeling->get(v) : std::nullopt;
    out << "  " << detail::dot_node(v) << " [label=\""
        << (label ? std::to_string(*label) : to_string(v)) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << detail::dot_node(e.a()) << " -- " << detail::dot_node(e.b());
    if (auto label = labeling ? labeling->get(e) : std::nullopt) {
      out << " [label=\"" << *label << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return detail::parse_text(buffer.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::InvalidParameter, "write to '" + path + "' failed");
}

}  // namespace hirreg
