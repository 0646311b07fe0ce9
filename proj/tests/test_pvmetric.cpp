#include "doctest.h"

#include <cmath>
#include <numbers>

#include "cusp/error.hpp"
#include "cusp/pvmetric.hpp"

using namespace cusp;

namespace {

GroupModel surface_p() {
  auto m = GroupModel::surface(2);
  m.add_peripheral("P", "a b a^-1 b^-1");
  return m;
}

}  // namespace

TEST_CASE("the round circle is linearly connected and doubling") {
  const std::size_t n = 128;
  auto d = circle_metric(n);
  CHECK(d[0 * n + n / 2] == doctest::Approx(2));
  auto rep = linear_connectedness_check(d, n);
  CHECK(rep.mesh == doctest::Approx(2 * std::sin(std::numbers::pi / n)));
  CHECK(rep.k_hat >= 1);
  CHECK(rep.k_hat <= 1 + 2 * (2 * std::numbers::pi / n));
  CHECK(rep.ratios.size() == n * (n - 1) / 2);
  CHECK(doubling_estimate(d, n, default_radii(d, n, 8)) <= 5);
  CHECK_THROWS_AS(chain_ratio(d, n, 0, n / 2, 1e-3), Error);
}

TEST_CASE("doubling estimate of a discrete metric") {
  std::vector<double> d{0, 1, 1, 0};
  CHECK(doubling_estimate(d, 2, {1}) == 2);
  CHECK(doubling_estimate(d, 2, {2}) == 1);
  CHECK(default_radii(d, 2, 1) == std::vector<double>{1});
}

TEST_CASE("the oscillating curve is not linearly connected") {
  auto rep = e1_fixture(20, 16);
  REQUIRE(rep.rows.size() == 20);
  CHECK(rep.max_rel_error < 1e-12);
  for (const auto& r : rep.rows) {
    CHECK(r.ratio >= r.ratio_bound);
    CHECK(r.peak_gap == doctest::Approx(16 / (std::numbers::pi * (4 * r.k + 1) * (4 * r.k + 5))));
  }
  CHECK(rep.growth >= 2);
}

TEST_CASE("Hoelder modulus on explicit matrices") {
  DlMatrices m;
  m.n = 2;
  m.dv = {0, 0.0625, 0.0625, 0};
  m.lower = {0, 0.25, 0.25, 0};
  m.upper = {0, 0.5, 0.5, 0};
  m.empty = {0, 0, 0, 0};
  auto rep = holder_modulus_check(m);
  CHECK(rep.pairs == 2);
  CHECK(rep.n_hat == doctest::Approx(1));
  CHECK(rep.dv_above_upper == 0);
  m.upper = {0, 0.05, 0.05, 0};
  CHECK(holder_modulus_check(m).dv_above_upper == 2);
}

TEST_CASE("piecewise metric on a small surface net") {
  auto s = CuspedGraph::build(surface_p(), 4, 2);
  Splitting sp(s);
  std::vector<RayApprox> net{word_ray(s, "a b"), word_ray(s, "b a"), word_ray(s, "a c"), word_ray(s, "c a")};
  BoundaryContext ctx(sp, net, 1);
  CHECK(ctx.size() == 4);
  CHECK(ctx.points() > 4);
  auto same = ctx.dl(0, 1);
  CHECK(ctx.sequence(0, 1).cuts.empty());
  CHECK(same.lower == ctx.dv(0, 1));
  CHECK(same.upper == same.lower);
  CHECK(same.terms_used == 0);
  auto split = ctx.dl(2, 3);
  CHECK(ctx.sequence(2, 3).cuts.size() == 3);
  CHECK(split.terms_used == 3);
  CHECK(split.tail_bound > 0);
  CHECK(split.upper == split.lower + split.tail_bound);
  auto back = ctx.dl(3, 2);
  CHECK(back.lower == split.lower);
  CHECK(back.upper == split.upper);
  const auto cuts = ctx.sequence(2, 3).cuts;
  std::size_t c0 = ctx.cut_point(cuts[0].coset), c1 = ctx.cut_point(cuts[1].coset), c2 = ctx.cut_point(cuts[2].coset);
  CHECK(split.lower == doctest::Approx(ctx.dv(2, c0) + ctx.dv(c0, c1) + ctx.dv(c1, c2) + ctx.dv(c2, 3)));
  auto first = ctx.dl(2, 3, 1);
  CHECK(first.terms_used == 1);
  CHECK(first.lower == doctest::Approx(ctx.dv(2, c1) + ctx.dv(c1, 3)));
  CHECK(first.tail_bound > split.tail_bound);
  auto ax = metric_axiom_check(ctx);
  CHECK(ax.asymmetric == 0);
  CHECK(ax.width_mismatches == 0);
  CHECK_THROWS_AS(BoundaryContext(sp, {word_ray(s, "a b")}, 1), Error);
  CHECK(ctx.dl(1, 1).upper == 0);
  CHECK_THROWS_AS(ctx.sequence(1, 1), Error);
}

TEST_CASE("approx inequality and embedding comparison on the surface") {
  auto s = CuspedGraph::build(surface_p(), 5, 3);
  Splitting sp(s);
  auto rep = approx_inequality_check(sp, 1, 20, 7);
  CHECK(rep.samples == 20);
  CHECK(rep.violations == 0);
  CHECK(rep.bound == doctest::Approx(38));
  auto same = compare_embedding_products(s, s, 4, 8, 1);
  CHECK(same.pairs == 28);
  CHECK(same.max_diff == 0);
}
