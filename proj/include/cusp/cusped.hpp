#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "cusp/cayley.hpp"
#include "cusp/graph.hpp"
#include "cusp/group_model.hpp"
#include "cusp/horoball.hpp"

namespace cusp {

inline constexpr const char* kBuildVersion = "cuspkit-cache-1";

struct CosetHoroball {
  CosetDescriptor desc;
  Vertex first = 0;  // id of (member 0, level 1); level l member i at first + (l-1)*m + i
  int m() const { return static_cast<int>(desc.members.size()); }
};

struct GeodesicPath {
  std::vector<Vertex> vertices;
  std::int32_t length = 0;
  bool contaminated = false;
};

struct DistanceResult {
  std::int32_t distance = 0;
  bool contaminated = false;
};

class CuspedGraph {
 public:
  static CuspedGraph build(const GroupModel& model, int radius, int depth,
                           std::size_t budget = GroupModel::kDefaultBudget);

  const GroupModel& model() const { return *model_; }
  const CayleyBall& ball() const { return ball_; }
  const Graph& graph() const { return graph_; }
  int radius() const { return radius_; }
  int max_depth() const { return depth_; }
  Vertex size() const { return graph_.size(); }
  Vertex basepoint() const { return 0; }
  Vertex cayley_size() const { return cayley_n_; }
  bool is_cayley(Vertex v) const { return v < cayley_n_; }

  const std::vector<CosetHoroball>& cosets() const { return cosets_; }
  // coset index for horoball vertices, -1 on the Cayley part
  int coset_of(Vertex v) const { return is_cayley(v) ? -1 : owner_[v - cayley_n_]; }
  // cosets containing a Cayley vertex
  const std::vector<int>& cosets_at(Vertex v) const { return memberships_[v]; }
  int depth(Vertex v) const { return is_cayley(v) ? 0 : level_[v - cayley_n_]; }
  // Cayley vertex directly below v
  Vertex anchor(Vertex v) const;
  int member_index(Vertex v) const;
  Vertex horoball_vertex(int coset, int member, int level) const;
  // every vertex of the coset's horoball including its level-0 members
  std::vector<Vertex> horoball_vertices(int coset) const;
  int find_coset(int peripheral, const std::string& key) const;
  // Cayley vertex anchored on the sphere of radius R (possible truncation artefacts nearby)
  bool on_sphere(Vertex v) const;
  int anchor_length(Vertex v) const;
  // Image of v under left multiplication by g; -1 when it leaves the ball.
  Vertex translate(const Word& g, Vertex v) const;

  std::string label(Vertex v) const;
  // "<word>" for a Cayley vertex, "<word>@<level>" or "<word>@<level>/<peripheral>" for horoball vertices,
  // "v<id>" on user graphs. Throws UnknownVertex.
  Vertex parse_vertex(const std::string& text) const;

  std::vector<std::int32_t> bfs_from(Vertex v) const { return bfs(graph_, v); }
  DistanceResult distance(Vertex x, Vertex y) const;
  GeodesicPath geodesic(Vertex x, Vertex y) const;
  GeodesicPath geodesic(Vertex x, const std::vector<std::int32_t>& dist_to_y) const;
  bool touches_sphere(const std::vector<Vertex>& path) const;

  void write_cache(std::ostream& out) const;
  std::uint64_t graph_hash() const;

 private:
  std::shared_ptr<const GroupModel> model_;
  CayleyBall ball_;
  std::vector<CosetHoroball> cosets_;
  std::vector<std::vector<int>> memberships_;
  std::vector<int> owner_;
  std::vector<int> level_;
  std::vector<int> member_;
  Graph graph_;
  Vertex cayley_n_ = 0;
  int radius_ = 0;
  int depth_ = 0;
};

struct CacheHeader {
  std::string version;
  std::uint64_t model_hash = 0;
  int radius = 0;
  int depth = 0;
  std::uint64_t graph_hash = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

CacheHeader read_cache_header(std::istream& in);
// Rebuilds the space described by a cache and checks it against the model; throws StaleCache.
CuspedGraph load_cached(std::istream& cache, const GroupModel& model);

}  // namespace cusp
