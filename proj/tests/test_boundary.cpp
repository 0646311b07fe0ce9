#include "doctest.h"

#include <random>

#include "cusp/boundary.hpp"
#include "cusp/error.hpp"

using namespace cusp;

namespace {

GroupModel free_a() {
  auto m = GroupModel::free_group(2);
  m.add_peripheral("P", "a");
  return m;
}

std::vector<std::string> labels(const CuspedGraph& s, const std::vector<Vertex>& p) {
  std::vector<std::string> out;
  for (Vertex v : p) out.push_back(s.label(v));
  return out;
}

}  // namespace

TEST_CASE("tree rays: products equal the shared prefix") {
  auto s = CuspedGraph::build(GroupModel::free_group(2), 6, 1);
  auto r = word_ray(s, "a b a b a b"), t = word_ray(s, "a b b a b a");
  CHECK(r.resolution() == 6);
  CHECK(labels(s, r.path).at(2) == "a b");
  auto p = boundary_product(s, r, t, 0);
  CHECK(p.value.value() == 2.0);
  CHECK(p.fluctuation == 0.0);
  CHECK(p.resolution < 6);
  for (int i = 2; i <= p.resolution; ++i) CHECK(p.sequence[i].value() == 2.0);
  CHECK(p.sequence[1].value() == 1.0);
  CHECK_THROWS_AS(boundary_product(s, r, r, 0), Error);
}

TEST_CASE("ray equivalence") {
  auto s = CuspedGraph::build(GroupModel::free_group(2), 5, 1);
  auto r = word_ray(s, "a a a a"), t = word_ray(s, "a b b b");
  CHECK(ray_equivalent(s, r, r, 0));
  CHECK_FALSE(ray_equivalent(s, r, t, 1));
  CHECK(ray_equivalent(s, r, t, 6));
  try {
    ray_equivalent(s, r, word_ray(s, "a a a"), 1);
    FAIL("expected ResolutionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResolutionMismatch);
  }
}

TEST_CASE("vertical rays climb the horoball") {
  auto s = CuspedGraph::build(free_a(), 4, 3);
  int c = s.cosets_at(0).at(0);
  auto r = vertical_ray(s, 0, c);
  CHECK(r.resolution() == 3);
  CHECK(s.depth(r.end()) == 3);
  CHECK_FALSE(r.canonical);
  auto dist0 = s.bfs_from(0);
  for (int t = 0; t <= r.resolution(); ++t) CHECK(dist0[r.at(t)] == t);
  CHECK_THROWS_AS(vertical_ray(s, s.parse_vertex("b"), c), Error);
  CanonicalRays canon(s);
  for (const char* w : {"b", "b b", "b^-1 a"}) {
    Vertex q = s.parse_vertex(w);
    int h = s.cosets_at(q).at(0);
    CHECK(canon.vertical(q, h).path == vertical_ray(s, q, h).path);
  }
  CHECK(canon.vertical(0, c).path == r.path);
}

TEST_CASE("chain metric") {
  auto two = chain_metric({0, 2, 2, 0}, 2, 1.0);
  CHECK(two.at(0, 1) == doctest::Approx(std::exp(-2.0)));
  CHECK(two.k1 == doctest::Approx(1.0));
  CHECK_THROWS_AS(chain_metric({0}, 1, 1.0), Error);

  std::mt19937_64 rng(4);
  const std::size_t n = 9;
  std::vector<double> prod(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) prod[i * n + j] = prod[j * n + i] = static_cast<double>(rng() % 7) / 2;
  auto c = chain_metric(prod, n, 1.0);
  CHECK(c.k1 > 0);
  CHECK(c.k1 <= 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(c.at(i, j) <= c.quasi[i * n + j] + 1e-15);
      CHECK(c.at(i, j) == c.at(j, i));
      for (std::size_t k = 0; k < n; ++k) CHECK(c.at(i, j) <= c.at(i, k) + c.at(k, j) + 1e-15);
    }
}

TEST_CASE("nets use canonical rays and extend by one step") {
  auto s = CuspedGraph::build(free_a(), 6, 3);
  NetOptions opt;
  opt.resolution = 4;
  opt.points = 12;
  opt.delta = 1;
  auto net = build_net(s, opt);
  CHECK(net.rays.size() == 12);
  CHECK(net.classes <= net.candidates);
  for (const auto& r : net.rays) {
    CHECK(r.resolution() == 4);
    CHECK_FALSE(r.contaminated);
    CHECK(r.path == make_ray(s, r.end()).path);
  }
  for (std::size_t i = 0; i < net.rays.size(); ++i)
    for (std::size_t j = i + 1; j < net.rays.size(); ++j) CHECK_FALSE(ray_equivalent(s, net.rays[i], net.rays[j], 1));
  auto ext = extend_net(s, net);
  CHECK(ext.resolution == 5);
  for (std::size_t i = 0; i < net.rays.size(); ++i) {
    REQUIRE(ext.rays[i].resolution() == 5);
    CHECK(std::equal(net.rays[i].path.begin(), net.rays[i].path.end(), ext.rays[i].path.begin()));
    CHECK(s.graph().adjacent(ext.rays[i].at(4), ext.rays[i].at(5)));
  }
  opt.resolution = 40;
  CHECK_THROWS_AS(build_net(s, opt), Error);
}

TEST_CASE("ideal internal points in a tree") {
  auto s = CuspedGraph::build(GroupModel::free_group(2), 5, 1);
  auto apart = ideal_internal_points(s, word_ray(s, "a a a a"), word_ray(s, "b b b b"), 0);
  CHECK(apart.m.value() == 0.0);
  CHECK(s.label(apart.line[apart.z_index]) == "e");
  CHECK(apart.max_tracking_gap == 0);
  auto shared = ideal_internal_points(s, word_ray(s, "a b a a"), word_ray(s, "a b b b"), 0);
  CHECK(shared.m.value() == 2.0);
  CHECK(s.label(shared.line[shared.z_index]) == "a b");
  CHECK(shared.d_rz == 0);
  CHECK(shared.d_sz == 0);
  CHECK(shared.max_tracking_gap == 0);
  CHECK(shared.window == 2);
  CHECK_THROWS_AS(ideal_internal_points(s, word_ray(s, "a b a a"), word_ray(s, "a b a a"), 0), Error);
}
