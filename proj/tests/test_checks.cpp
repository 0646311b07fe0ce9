#include "doctest.h"

#include "cusp/checks.hpp"
#include "cusp/error.hpp"
#include "cusp/hyperbolicity.hpp"

using namespace cusp;

namespace {

GroupModel free_rel_a() {
  auto m = GroupModel::free_group(2);
  m.add_peripheral("P", "a");
  return m;
}

}  // namespace

TEST_CASE("geodesics from the basepoint enter a tree coset at its projection") {
  auto s = CuspedGraph::build(free_rel_a(), 5, 3);
  auto rep = close_check(s, 0, 0.5, 20, 3);
  CHECK(rep.cosets == 20);
  CHECK(rep.max_distance == 0);
  CHECK(rep.violations == 0);
  CHECK(rep.bound == doctest::Approx(7));
  CHECK_THROWS_AS(close_check(s, 0, 0.5, 100000, 3), Error);
}

TEST_CASE("quasi-convexity of a horoball in the free group") {
  auto s = CuspedGraph::build(free_rel_a(), 5, 3);
  int h = s.cosets_at(0).at(0);
  auto one = check_quasiconvexity(s, h, s.parse_vertex("b"), s.parse_vertex("a a a b"), 1);
  CHECK(one.max_excess == 0);
  CHECK(one.violations == 0);
  auto far = check_quasiconvexity(s, h, s.parse_vertex("b b"), s.parse_vertex("b^-1 b^-1"), 1);
  CHECK(far.max_excess == 0);
  auto rep = qc_check(s, 0, 1, 3, 50, 5);
  CHECK(rep.pairs == 50);
  CHECK(rep.violations == 0);
  CHECK(rep.max_excess <= 0);
}

TEST_CASE("long geodesics along a coset penetrate its horoball") {
  auto m = GroupModel::free_group(1);
  m.add_peripheral("P", "a");
  auto s = CuspedGraph::build(m, 32, 6);
  Vertex x = 0, y = s.parse_vertex("a^32");
  auto path = s.geodesic(x, y).vertices;
  REQUIRE(path.size() == 11);
  auto rep = check_deep_penetration(s, 0, path, 0, 1);
  CHECK(rep.lo == 3);
  CHECK(rep.hi == 7);
  CHECK(rep.inside);
  CHECK(rep.min_depth >= 3);
  CHECK(rep.start_on_coset);
  CHECK(rep.vertical_prefix == 3);
  CHECK(rep.rerouted);
  auto shallow = s.geodesic(x, s.parse_vertex("a^2")).vertices;
  CHECK_THROWS_AS(check_deep_penetration(s, 0, shallow, 0, 1), Error);
}

TEST_CASE("closest points of deep horoball levels are unique in a tree") {
  auto s = CuspedGraph::build(free_rel_a(), 5, 4);
  auto rep = tight_check(s, 0, 1, 10, 2);
  CHECK(rep.level == 1);
  CHECK(rep.horoballs == 10);
  CHECK(rep.max_spread == 0);
  CHECK(rep.bound == doctest::Approx(3));
}
