#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raag {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

// Subset of the vertices of one graph, one bit per vertex index.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  // Largest vertex index in the set; set must be nonempty.
  constexpr Vertex last() const { return 63u - static_cast<Vertex>(std::countl_zero(bits_)); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<Vertex>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;
  // Edges are given as name pairs; loops, duplicates and unknown endpoints throw GraphError.
  Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges);

  static Graph from_json(std::string_view text);
  static Graph load(const std::string& path);
  std::string to_json() const;

  static Graph complete(const std::vector<std::string>& names);
  static Graph discrete(const std::vector<std::string>& names);

  std::size_t size() const { return names_.size(); }
  VertexSet all() const { return VertexSet::first(names_.size()); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  Vertex index(std::string_view name) const;
  bool has_vertex(std::string_view name) const;

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1u; }
  VertexSet link(Vertex v) const { return VertexSet(adj_.at(v)); }
  VertexSet star(Vertex v) const { return link(v).with(v); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  VertexSet center_vertices() const;
  // Induced subgraph on w; vertex order inherited.
  Graph full_subgraph(VertexSet w) const;

  VertexSet parse_set(std::string_view comma_separated) const;
  std::string format_set(VertexSet s) const;

  bool operator==(const Graph& o) const { return names_ == o.names_ && adj_ == o.adj_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> adj_;
  std::unordered_map<std::string, Vertex> index_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr make_graph(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

}  // namespace raag
