#pragma once

#include <cstdint>
#include <vector>

#include "cusp/cusped.hpp"

namespace cusp {

// Geodesics from the basepoint that meet a coset only at their endpoint end near its closest point.
struct CloseReport {
  std::size_t cosets = 0;
  std::size_t entries = 0;
  std::size_t contaminated_discarded = 0;
  std::size_t violations = 0;
  std::int32_t max_distance = 0;  // max d(entry, closest point)
  double bound = 0;               // 6 delta + 4
};
// Throws SampleExhausted when fewer than `samples` cosets have an uncontaminated entry point.
CloseReport close_check(const CuspedGraph& space, int peripheral, double delta, std::size_t samples, std::uint64_t seed);

struct QcReport {
  std::size_t pairs = 0;
  std::size_t contaminated_discarded = 0;
  std::size_t violations = 0;
  double max_excess = 0;  // max over path vertices of d(v, H) - N, N = max endpoint distance to H
  double bound = 0;       // 2 delta
};
// One pair against one coset's horoball (including its members).
QcReport check_quasiconvexity(const CuspedGraph& space, int coset, Vertex x, Vertex y, double delta);
// Sampled pairs within max_n of sampled horoballs. Throws SampleExhausted.
QcReport qc_check(const CuspedGraph& space, int peripheral, double delta, int max_n, std::size_t samples,
                  std::uint64_t seed);

struct DeepReport {
  int n = 0;
  double delta = 0;
  int lo = 0, hi = 0;       // index window [N + 3 delta, k - (N + 3 delta)]
  int min_depth = 0;        // over the window, 0 when a window vertex leaves the horoball
  bool inside = false;      // every window vertex in the coset's horoball at depth >= delta
  bool start_on_coset = false;
  int vertical_prefix = 0;  // (k - (N + 3 delta)) / 2
  bool rerouted = false;    // a geodesic with that vertical initial segment exists
};
// Throws TooShort when the path has fewer than 2(N + 3 delta) edges.
DeepReport check_deep_penetration(const CuspedGraph& space, int coset, const std::vector<Vertex>& path, int n,
                                  double delta);

struct TightReport {
  std::size_t horoballs = 0;
  int level = 0;
  std::int32_t max_spread = 0;  // diameter of the closest points of H(level) to the basepoint
  double bound = 0;             // 2 delta + 1
};
TightReport tight_check(const CuspedGraph& space, int peripheral, double delta, std::size_t samples,
                        std::uint64_t seed);

}  // namespace cusp
