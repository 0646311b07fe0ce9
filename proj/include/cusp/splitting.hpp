#pragma once

#include <string>
#include <vector>

#include "cusp/boundary.hpp"
#include "cusp/cusped.hpp"

namespace cusp {

// Node of the Bass-Serre tree: a vertex coset gA / gB or an edge coset gC.
struct TreeNode {
  bool is_edge = false;
  std::string key;
  int coset = -1;  // cusped-space coset of an edge node, -1 when it misses the ball
  friend bool operator==(const TreeNode& a, const TreeNode& b) { return a.is_edge == b.is_edge && a.key == b.key; }
};

struct TreePath {
  std::vector<TreeNode> nodes;  // root first, location of the ray's end last
  std::vector<TreeNode> edges;  // edge nodes of nodes, in order
};

struct CutPoint {
  int coset = -1;
  std::string key;
  Vertex q = -1;        // closest member to the basepoint, smallest id on ties
  std::int32_t dist = 0;
  int tree_index = 0;   // position on the tree geodesic between the two locations
};

enum class SequenceKind { Empty, Finite, HalfInfinite, BiInfinite };
std::string_view to_string(SequenceKind k);

struct CutPointSequence {
  std::vector<CutPoint> cuts;  // ordered from x to y
  SequenceKind kind = SequenceKind::Empty;
  bool complete = true;        // every separating edge coset meets the ball
  // index of the first cut on the y side of the basepoint's projection (cuts[split - 1] is on the x side)
  int split = 0;
};

// Splitting read off the presentation: amalgam (root vertex A) or HNN extension (root vertex A).
// The first peripheral must be the edge group.
class Splitting {
 public:
  explicit Splitting(const CuspedGraph& space);

  const CuspedGraph& space() const { return *space_; }
  const std::vector<std::int32_t>& dist0() const { return dist0_; }

  // Tree geodesic from the root to the location of v.
  std::vector<TreeNode> path_to(Vertex v) const;
  TreePath tree_path(const RayApprox& r) const;
  CutPointSequence cut_point_sequence(const RayApprox& x, const RayApprox& y) const;
  // Edge-group cosets met by the vertices of the rays.
  std::vector<int> cosets_on(const RayApprox& x, const RayApprox& y) const;
  CutPoint closest_point(int coset) const;

 private:
  std::vector<TreeNode> path_to_element(const Word& g) const;
  TreeNode edge_node(const Word& g) const;

  const CuspedGraph* space_;
  std::vector<std::int32_t> dist0_;
  bool hnn_ = false;
};

// Removes the coset's members and horoball (coset -1 removes nothing) and reports whether x and y
// end up in different components. Throws EndpointRemoved.
bool separation_check(const CuspedGraph& space, int coset, Vertex x, Vertex y);

// Edge-group cosets that a walk of adjacent vertices crosses an odd number of times, read from the generator
// labels of its steps alone. Ends must be Cayley vertices; an end lying on a wall sits at that wall's vertex
// nearer the root.
std::vector<int> crossed_walls(const CuspedGraph& space, const std::vector<Vertex>& walk);
// Walk from x's end through the basepoint to y's end.
std::vector<Vertex> ray_walk(const RayApprox& x, const RayApprox& y);

struct EmbeddingReport {
  std::size_t pairs = 0;
  double max_diff = 0;   // max |intrinsic product - ambient product|
  double mean_diff = 0;
};
// Net pairs of a vertex group's own cusped space (Cayley endpoints) compared with the same words in the
// ambient space, generators matched by name.
EmbeddingReport compare_embedding_products(const CuspedGraph& vertex_space, const CuspedGraph& ambient, int resolution,
                                           std::size_t points, double delta);

}  // namespace cusp
