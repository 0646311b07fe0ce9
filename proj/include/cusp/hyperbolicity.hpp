#pragma once

#include <cstdint>
#include <vector>

#include "cusp/cusped.hpp"
#include "cusp/graph.hpp"

namespace cusp {

// Exact half-integer, stored doubled.
struct HalfInt {
  std::int64_t twice = 0;
  double value() const { return static_cast<double>(twice) / 2.0; }
  bool integral() const { return twice % 2 == 0; }
  std::int64_t floor() const { return twice >= 0 ? twice / 2 : -((-twice + 1) / 2); }
  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend auto operator<=>(HalfInt a, HalfInt b) { return a.twice <=> b.twice; }
};

inline HalfInt gromov_from_distances(std::int64_t dpx, std::int64_t dpy, std::int64_t dxy) {
  return {dpx + dpy - dxy};
}
HalfInt gromov_product(const Graph& g, Vertex p, Vertex x, Vertex y);

// Four-point constant over every ordered quadruple (all-pairs BFS); up to 2000 vertices.
double four_point_delta_exhaustive(const Graph& g);
// Brute force over all ordered quadruples with the product formulation; test oracle for tiny graphs.
double four_point_delta_bruteforce(const Graph& g);

struct TriangleData {
  Vertex x = 0, y = 0, z = 0;
  std::vector<Vertex> side_xy, side_yz, side_zx;  // canonical geodesics
  Vertex cz = 0;  // on [x,y] at (y.z)_x from x
  Vertex cx = 0;  // on [y,z] at (z.x)_y from y
  Vertex cy = 0;  // on [z,x] at (x.y)_z from z
  HalfInt px, py, pz;  // (y.z)_x, (z.x)_y, (x.y)_z
  double insize = 0;   // includes the 1/2 slack when offsets were floored
  double thinness = 0;  // max distance between matched tripod fibre points
  bool floored = false;
};

// Offsets are floored when the products are half-integers.
TriangleData internal_points(const Graph& g, Vertex x, Vertex y, Vertex z);
// Exhaustive thin-triangle constant (max thinness) over all ordered triples; up to 400 vertices.
double thin_delta_exhaustive(const Graph& g);

// Largest insize over all unordered triples; up to 400 vertices.
double insize_exhaustive(const Graph& g);

struct EquivarianceReport {
  std::size_t samples = 0;
  std::size_t contaminated_discarded = 0;
  std::size_t mismatches = 0;
  double max_abs_diff = 0;
};
// Sampled (g, x, y) with x, y, gx, gy and g* all in the ball and every geodesic between them
// uncontaminated: compares (x.y)_* with (gx.gy)_{g*}. Throws SampleExhausted.
EquivarianceReport equivariance_check(const CuspedGraph& space, std::size_t samples, std::uint64_t seed,
                                      int max_g_length = 2);

struct DeltaOptions {
  std::size_t sample_size = 4000;
  std::uint64_t seed = 1;
  int core_radius = -1;  // default max(0, R - 2)
  std::size_t thin_triangles = 60;
  std::size_t local_samples = 4000;  // local triples; each is tested against every vertex of its ball
  int local_radius = 3;
  bool exhaustive = false;
};

struct DeltaEstimate {
  double delta_fourpoint = 0;
  double delta_thin = 0;
  std::size_t samples = 0;
  std::size_t local_samples = 0;
  double delta_local = 0;  // part of delta_fourpoint found by the local quadruples
  std::size_t contaminated_discarded = 0;
  bool exhaustive = false;
  std::vector<Vertex> pool;
};

// Sampled mode: every triple from a seeded pool (half deep horoball vertices) against every core vertex,
// plus quadruples inside small balls around random core vertices.
DeltaEstimate estimate_delta(const CuspedGraph& space, const DeltaOptions& opt = {});

struct OffsetReport {
  int k1 = 0, k2 = 0, k3 = 0;
  std::int32_t max_gap = 0;
  int overlap = 0;
};

// Offsets aligning alpha and beta; throws NoOverlap.
OffsetReport fellow_traveling_offsets(const Graph& g, const std::vector<Vertex>& alpha,
                                      const std::vector<Vertex>& beta, int K);

}  // namespace cusp
