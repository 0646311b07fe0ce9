#pragma once

#include <cstdint>
#include <vector>

#include "cusp/boundary.hpp"
#include "cusp/splitting.hpp"

namespace cusp {

struct MetricInterval {
  double lower = 0;
  double upper = 0;
  double tail_bound = 0;
  int terms_used = 0;      // cut points retained in the partial sum
  bool unresolved = false;  // tail bound exceeds the partial sum
};

// Net rays plus one vertical ray per cut point met by a pair of net rays, with all pairwise
// endpoint products and the chain metric d_V over the whole point set.
class BoundaryContext {
 public:
  BoundaryContext(const Splitting& splitting, std::vector<RayApprox> net, double delta, double epsilon = 1.0);

  const Splitting& splitting() const { return *split_; }
  std::size_t size() const { return n_net_; }
  std::size_t points() const { return rays_.size(); }
  const RayApprox& ray(std::size_t p) const { return rays_[p]; }
  double delta() const { return delta_; }
  double epsilon() const { return epsilon_; }
  double k1() const { return dv_.k1; }
  double k2() const { return dv_.k2; }
  double d_hat() const { return d_hat_; }
  // (k2 / k1) e^{26 delta + 12} D / (1 - e^{-1}); the tail at q is this times e^{-d(*, q)}
  double tail_constant() const;

  // x -> y order; i, j index the net
  CutPointSequence sequence(std::size_t i, std::size_t j) const;
  // point index of the vertical ray over a cut coset
  std::size_t cut_point(int coset) const;
  double dv(std::size_t a, std::size_t b) const { return dv_.at(a, b); }
  HalfInt product(std::size_t a, std::size_t b) const { return products_[a * rays_.size() + b]; }

  // terms < 0 keeps every cut point; otherwise the contiguous run covering the `terms` cut points
  // closest to the basepoint.
  MetricInterval dl(std::size_t i, std::size_t j, int terms = -1) const;

 private:
  const Splitting* split_;
  std::vector<RayApprox> rays_;
  std::size_t n_net_ = 0;
  double delta_ = 0;
  double epsilon_ = 1;
  std::vector<CutPointSequence> seq_;  // i < j, row-major upper triangle
  std::vector<std::pair<int, std::size_t>> cut_index_;
  std::vector<HalfInt> products_;
  ChainMetric dv_;
  double d_hat_ = 0;
};

struct DlMatrices {
  std::size_t n = 0;
  std::vector<double> dv, lower, upper, tail;
  std::vector<std::uint8_t> empty;  // pair has no cut points
};
DlMatrices dl_matrices(const BoundaryContext& ctx, int terms = -1);

struct AxiomReport {
  std::size_t pairs = 0, triples = 0;
  std::size_t asymmetric = 0;
  std::size_t triangle_violations = 0;
  std::size_t nonpositive = 0;
  std::size_t width_mismatches = 0;  // width 0 exactly when the pair has no cut points
  std::size_t unresolved = 0;
  bool pass() const { return asymmetric == 0 && triangle_violations == 0 && nonpositive == 0 && width_mismatches == 0; }
};
// Evaluates both orders of every pair; the triangle check is lower(x,z) <= upper(x,y) + upper(y,z).
AxiomReport metric_axiom_check(const BoundaryContext& ctx);

struct RefinementReport {
  std::size_t pairs = 0;
  std::size_t inside = 0;
  double worst_slack = 0;  // min over pairs of min(new - old.lower, old.upper - new)
};
// Pairs with at least two cut points, evaluated at `terms` and `terms + extra`.
RefinementReport tail_refinement_check(const BoundaryContext& ctx, std::size_t max_pairs, int terms, int extra);

struct HolderReport {
  double n_hat = 0;
  std::size_t pairs = 0;
  std::size_t dv_above_upper = 0;
  std::size_t dv_above_lower = 0;
};
HolderReport holder_modulus_check(const DlMatrices& m);

struct LinConnReport {
  double k_hat = 0;
  double eps_chain = 0;
  double mesh = 0;
  std::vector<double> ratios;  // row-major upper triangle
};
// Symmetric n x n metric. Throws Disconnected.
LinConnReport linear_connectedness_check(const std::vector<double>& d, std::size_t n, double eps_chain = -1);
// Ratio of the best chain diameter to d(x, y) for one pair.
double chain_ratio(const std::vector<double>& d, std::size_t n, std::size_t x, std::size_t y, double eps_chain);
double net_mesh(const std::vector<double>& d, std::size_t n);

struct E1Row {
  int k = 0;
  double peak_gap = 0, peak_gap_formula = 0;      // 2(x_k - x_{k+1}) and 16/(pi(4k+1)(4k+5))
  double trough_depth = 0, trough_formula = 0;    // 2 x_{k+1} and 4/((4k+5) pi)
  double ratio = 0, ratio_bound = 0;              // chain ratio and (4k+1)/4
};
struct E1Report {
  std::vector<E1Row> rows;
  double growth = 0;  // ratio(k_max) / ratio(1)
  double max_rel_error = 0;
};
// Arc of x sin(1/x) between consecutive peaks, sampled at `density` points per unit of 1/x.
E1Report e1_fixture(int k_max, double density = 16);

std::vector<double> circle_metric(std::size_t n);

// Greedy covers of B(x, r) by net balls of radius r/2.
std::size_t doubling_estimate(const std::vector<double>& d, std::size_t n, const std::vector<double>& radii);
std::vector<double> default_radii(const std::vector<double>& d, std::size_t n, int count);

struct ApproxReport {
  std::size_t samples = 0;
  std::size_t contaminated_discarded = 0;
  std::size_t violations = 0;
  double max_excess = 0;  // max |(a1.a2)_* - d(*,q) - (a1.a2)_q| minus the bound
  double bound = 0;       // 26 delta + 12
};
// Sampled edge cosets with closest point q and pairs a1, a2 located in the vertex coset beyond the edge.
ApproxReport approx_inequality_check(const Splitting& sp, double delta, std::size_t samples, std::uint64_t seed);

struct SeparateReport {
  std::size_t triangles = 0;
  std::size_t points = 0;
  std::size_t violations = 0;          // min distance < K - 2 delta
  std::size_t working_violations = 0;  // min distance < K - 10 delta
  double min_margin = 0;               // min over points of (distance - (K - 2 delta))
};
SeparateReport separate_check(const BoundaryContext& ctx, std::size_t max_pairs);

struct D01Report {
  std::size_t configurations = 0;
  std::size_t applicable = 0;  // both entry times at least m
  std::size_t violations = 0;
  double min_margin = 0;       // min of (c0.c-1)_* - (m - 9 delta - 4)
};
D01Report d01_check(const BoundaryContext& ctx);

}  // namespace cusp
