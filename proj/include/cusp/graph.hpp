#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cusp {

using Vertex = std::int32_t;
constexpr std::int32_t kUnreached = -1;

// Undirected unit-weight graph in CSR form with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges);

  Vertex size() const { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t edge_count() const { return adj_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

 private:
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> adj_;
};

// Full BFS; dist must have size g.size() and is overwritten. Vertices with blocked[v] != 0 are skipped.
void bfs(const Graph& g, Vertex src, std::vector<std::int32_t>& dist, const std::vector<std::uint8_t>* blocked = nullptr);
std::vector<std::int32_t> bfs(const Graph& g, Vertex src);
void multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources, std::vector<std::int32_t>& dist);

// Point-to-point distance by bidirectional BFS; reusable scratch, one per thread.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const Graph& g);
  std::int32_t distance(Vertex s, Vertex t);

 private:
  const Graph* g_;
  std::vector<std::uint32_t> stamp_[2];
  std::vector<std::int32_t> dist_[2];
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> frontier_[2];
  std::vector<Vertex> next_;
};

// Lexicographically least vertex sequence among geodesics from `from` to the BFS source of dist_to.
std::vector<Vertex> canonical_path(const Graph& g, const std::vector<std::int32_t>& dist_to, Vertex from);

// Subgraph induced on `keep`; vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

// Connected component labels; blocked vertices get label -1.
std::vector<std::int32_t> components(const Graph& g, const std::vector<std::uint8_t>* blocked = nullptr);

}  // namespace cusp
