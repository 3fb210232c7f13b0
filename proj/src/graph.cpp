#include "raag/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace raag {

namespace {

void check_name(const std::string& n) {
  if (n.empty()) throw GraphError("empty vertex name");
  for (char c : n) {
    if (c == '^' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
      throw GraphError("vertex name '" + n + "' contains a reserved character");
  }
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)), adj_(names_.size(), 0) {
  if (names_.size() > kMaxVertices) throw GraphError("at most 64 vertices are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    check_name(names_[i]);
    if (!index_.emplace(names_[i], static_cast<Vertex>(i)).second)
      throw GraphError("duplicate vertex '" + names_[i] + "'");
  }
  for (const auto& [a, b] : edges) {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end()) throw GraphError("edge endpoint '" + a + "' is not a vertex");
    if (ib == index_.end()) throw GraphError("edge endpoint '" + b + "' is not a vertex");
    if (ia->second == ib->second) throw GraphError("loop at vertex '" + a + "'");
    if (adjacent(ia->second, ib->second)) throw GraphError("duplicate edge {" + a + "," + b + "}");
    adj_[ia->second] |= std::uint64_t{1} << ib->second;
    adj_[ib->second] |= std::uint64_t{1} << ia->second;
  }
}

Graph Graph::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw GraphError("graph JSON needs a \"vertices\" array");
  std::vector<std::string> names;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw GraphError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw GraphError("each edge must be a pair of vertex names");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return Graph(std::move(names), edges);
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string Graph::to_json() const {
  nlohmann::json j;
  j["vertices"] = names_;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : edges()) j["edges"].push_back({names_[u], names_[v]});
  return j.dump();
}

Graph Graph::complete(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) e.emplace_back(names[i], names[j]);
  return Graph(names, e);
}

Graph Graph::discrete(const std::vector<std::string>& names) { return Graph(names, {}); }

Vertex Graph::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw GraphError("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

bool Graph::has_vertex(std::string_view name) const { return index_.count(std::string(name)) != 0; }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::center_vertices() const {
  VertexSet z = all();
  for (Vertex v = 0; v < size(); ++v) z = z & star(v);
  return z;
}

Graph Graph::full_subgraph(VertexSet w) const {
  if (!w.subset_of(all())) throw GraphError("vertex set is not contained in the graph");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> e;
  for (Vertex v : w.members()) names.push_back(names_[v]);
  for (auto [u, v] : edges())
    if (w.contains(u) && w.contains(v)) e.emplace_back(names_[u], names_[v]);
  return Graph(std::move(names), e);
}

VertexSet Graph::parse_set(std::string_view text) const {
  VertexSet s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty()) s = s.with(index(tok));
    pos = next + 1;
  }
  return s;
}

std::string Graph::format_set(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ",";
    out += names_[v];
    first = false;
  }
  return out + "}";
}

}  // namespace raag
