#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cusp/cusped.hpp"
#include "cusp/hyperbolicity.hpp"

namespace cusp {

// Geodesic segment from the basepoint standing in for a boundary point.
struct RayApprox {
  std::vector<Vertex> path;
  bool canonical = true;
  bool contaminated = false;

  int resolution() const { return static_cast<int>(path.size()) - 1; }
  Vertex end() const { return path.back(); }
  Vertex at(int t) const { return path[static_cast<std::size_t>(t)]; }
};

// Lexicographically least geodesics from the basepoint to every vertex, from one BFS.
class CanonicalRays {
 public:
  explicit CanonicalRays(const CuspedGraph& space);
  RayApprox to(Vertex v) const;
  // Canonical ray to q followed by the vertical climb to the top of the coset's horoball.
  RayApprox vertical(Vertex q, int coset) const;
  const std::vector<std::int32_t>& dist0() const { return dist0_; }

 private:
  const CuspedGraph* space_;
  std::vector<std::int32_t> dist0_;
  std::vector<Vertex> parent_;
};

// Lexicographically least geodesic from the basepoint to endpoint.
RayApprox make_ray(const CuspedGraph& space, Vertex endpoint);
RayApprox make_ray(const CuspedGraph& space, Vertex endpoint, const std::vector<std::int32_t>& dist_to_end);
RayApprox word_ray(const CuspedGraph& space, const std::string& label);
// Canonical geodesic to q followed by the vertical climb to the top of the coset's horoball.
RayApprox vertical_ray(const CuspedGraph& space, Vertex q, int coset);
// Appends the smallest-id neighbour one step further from the basepoint; returns false at the ball's edge.
bool extend_ray(const CuspedGraph& space, const std::vector<std::int32_t>& dist_from_base, RayApprox& r);

// d(r(t), s(t)) <= delta for every t up to the common resolution. Throws ResolutionMismatch.
bool ray_equivalent(const CuspedGraph& space, const RayApprox& r, const RayApprox& s, double delta);

struct ProductReport {
  HalfInt value;                  // at the largest uncontaminated common resolution
  int resolution = 0;
  std::vector<HalfInt> sequence;  // products at T' = 0..resolution
  double fluctuation = 0;         // max - min over the top quartile of T'
};

// Throws RaysEquivalent when the rays are equivalent at delta.
ProductReport boundary_product(const CuspedGraph& space, const RayApprox& r, const RayApprox& s, double delta);

// Product of ray endpoints, (r_end . s_end)_*, from distance rows of the endpoints.
HalfInt endpoint_product(std::int32_t d_base_r, std::int32_t d_base_s, std::int32_t d_rs);

double visual_quasimetric(double product, double epsilon);

struct ChainMetric {
  std::size_t n = 0;
  std::vector<double> quasi;  // a^{-(x.y)}, zero on the diagonal
  std::vector<double> d;      // chain minimisation
  double k1 = 0;              // min d / quasi over distinct pairs
  double k2 = 1;
  double at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
};

// products: n x n row-major Gromov products (value()) of distinct points. Throws TooFewPoints.
ChainMetric chain_metric(const std::vector<double>& products, std::size_t n, double epsilon);

struct BoundaryNet {
  int resolution = 0;
  std::vector<RayApprox> rays;       // farthest-point order, so prefixes are nested nets
  std::size_t candidates = 0;        // uncontaminated sphere vertices
  std::size_t classes = 0;           // after deduplication by ray equivalence
};

struct NetOptions {
  int resolution = 0;
  std::size_t points = 20;
  double delta = 0;
  bool cayley_only = false;
};

// Canonical rays to the uncontaminated sphere of the given resolution, deduplicated by equivalence
// and ordered by farthest-point sampling under the Gromov product. Throws EmptyNet.
BoundaryNet build_net(const CuspedGraph& space, const NetOptions& opt);
// One-step extension of every ray (the same classes at resolution + 1).
BoundaryNet extend_net(const CuspedGraph& space, const BoundaryNet& net);

struct IdealTriangle {
  HalfInt m;                   // product of the two rays
  std::vector<Vertex> line;    // discrete line between the deepest ray points
  int z_index = 0;             // position of z on line
  std::int32_t d_rz = 0, d_sz = 0;
  std::int32_t max_tracking_gap = 0;
  int window = 0;              // number of j checked on each side
};

// Throws RaysEquivalent when the ray endpoints are within delta.
IdealTriangle ideal_internal_points(const CuspedGraph& space, const RayApprox& r, const RayApprox& s, double delta);

}  // namespace cusp
