#include "doctest.h"

#include <algorithm>
#include <random>

#include "cusp/cusped.hpp"
#include "cusp/error.hpp"
#include "cusp/horoball.hpp"
#include "cusp/hyperbolicity.hpp"

using namespace cusp;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, static_cast<Vertex>(rng() % i));
  return Graph::from_edges(n, e);
}

Graph random_graph(std::mt19937_64& rng, int n, int extra) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, static_cast<Vertex>(rng() % i));
  for (int i = 0; i < extra; ++i) e.emplace_back(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
  return Graph::from_edges(n, e);
}

GroupModel free_a() {
  auto m = GroupModel::free_group(2);
  m.add_peripheral("P", "a");
  return m;
}

}  // namespace

TEST_CASE("Gromov product examples") {
  auto s = CuspedGraph::build(GroupModel::free_group(2), 3, 1);
  Vertex ab = s.parse_vertex("a b"), abi = s.parse_vertex("a b^-1");
  CHECK(gromov_product(s.graph(), 0, ab, abi).value() == 1.0);
  CHECK(gromov_product(s.graph(), 0, ab, ab).twice == 2 * 2);
  CHECK(gromov_product(s.graph(), ab, ab, abi).twice == 0);
  HalfInt h{5};
  CHECK(h.floor() == 2);
  CHECK_FALSE(h.integral());
  CHECK(HalfInt{-3}.floor() == -2);
}

TEST_CASE("four-point constant of trees and cycles") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) CHECK(four_point_delta_exhaustive(random_tree(rng, 30)) == 0.0);
  for (int n = 3; n <= 9; ++n)
    CHECK(four_point_delta_exhaustive(cycle(n)) == four_point_delta_bruteforce(cycle(n)));
  CHECK(four_point_delta_exhaustive(cycle(6)) == 1.0);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_graph(rng, 13, 6);
    CHECK(four_point_delta_exhaustive(g) == four_point_delta_bruteforce(g));
  }
  auto tree = CuspedGraph::build(GroupModel::free_group(2), 3, 1);
  auto est = estimate_delta(tree);
  CHECK(est.exhaustive);
  CHECK(est.delta_fourpoint == 0.0);
  CHECK(est.delta_thin == 0.0);
}

TEST_CASE("four-point and thin-triangle estimates on a horoball") {
  auto h = build_horoball(BaseGraph::path(16), 4);
  double fp = four_point_delta_exhaustive(h.graph());
  double thin = thin_delta_exhaustive(h.graph());
  CHECK(fp > 0);
  CHECK(thin <= 4 * fp + 2);
  CHECK(std::max(fp, thin) <= 8 * std::min(fp, thin));
}

TEST_CASE("internal points satisfy the product identities") {
  auto h = build_horoball(BaseGraph::path(16), 4);
  const Graph& g = h.graph();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    Vertex x = static_cast<Vertex>(rng() % g.size()), y = static_cast<Vertex>(rng() % g.size()),
           z = static_cast<Vertex>(rng() % g.size());
    auto tri = internal_points(g, x, y, z);
    auto dx = bfs(g, x), dy = bfs(g, y), dz = bfs(g, z);
    CHECK(dx[tri.cz] == tri.px.floor());
    CHECK(dx[tri.cy] == dx[z] - tri.pz.floor());
    CHECK(dy[tri.cx] == tri.py.floor());
    CHECK(tri.px.twice + tri.py.twice == 2 * dx[y]);
    CHECK(tri.floored == !tri.py.integral());
  }
  Vertex x = h.id(0, 0), y = h.id(8, 0), z = h.id(4, 3);
  auto tri = internal_points(g, x, y, z);
  CHECK(tri.insize <= four_point_delta_exhaustive(g));

  auto side = internal_points(g, x, y, x);
  CHECK(side.insize == 0);
  Vertex mid = side.side_xy[3];
  CHECK(internal_points(g, x, y, mid).insize == 0);

  auto tree = CuspedGraph::build(GroupModel::free_group(2), 2, 1);
  auto tt = internal_points(tree.graph(), 0, tree.parse_vertex("a"), tree.parse_vertex("b"));
  CHECK(tt.cx == 0);
  CHECK(tt.cy == 0);
  CHECK(tt.cz == 0);
  CHECK(tt.insize == 0);
}

TEST_CASE("Gromov products are equivariant") {
  auto s = CuspedGraph::build(free_a(), 6, 3);
  const auto& m = s.model();
  std::mt19937_64 rng(9);
  std::vector<Vertex> core;
  for (Vertex v = 0; v < s.size(); ++v)
    if (s.anchor_length(v) <= 2) core.push_back(v);
  std::vector<Word> shifts;
  for (const auto& w : s.ball().words)
    if (w.size() <= 2) shifts.push_back(w);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    Vertex p = core[rng() % core.size()], x = core[rng() % core.size()], y = core[rng() % core.size()];
    const Word& gw = shifts[rng() % shifts.size()];
    Vertex gp = s.translate(gw, p), gx = s.translate(gw, x), gy = s.translate(gw, y);
    REQUIRE(gp >= 0);
    REQUIRE(gx >= 0);
    REQUIRE(gy >= 0);
    auto a = gromov_product(s.graph(), p, x, y), b = gromov_product(s.graph(), gp, gx, gy);
    CHECK(a == b);
    ++checked;
  }
  CHECK(checked >= 100);
  CHECK(s.translate(m.word("b"), s.parse_vertex("a@2")) == s.parse_vertex("b a@2"));
}

TEST_CASE("fellow traveling offsets") {
  auto h = build_horoball(BaseGraph::path(16), 4);
  const Graph& g = h.graph();
  auto geos = enumerate_geodesics(g, h.id(0, 0), h.id(8, 0), 1000);
  REQUIRE(geos.size() >= 2);
  auto same = fellow_traveling_offsets(g, geos.front(), geos.front(), 2);
  CHECK(same.max_gap == 0);
  CHECK(same.k1 == 0);
  CHECK(same.k2 == 0);
  double delta = four_point_delta_exhaustive(g);
  auto diff = fellow_traveling_offsets(g, geos.front(), geos.back(), 1);
  CHECK(diff.max_gap <= 2 * delta);

  auto tree = CuspedGraph::build(GroupModel::free_group(2), 5, 1);
  auto p1 = tree.geodesic(tree.parse_vertex("a"), tree.parse_vertex("b b a b")).vertices;
  auto p2 = tree.geodesic(tree.parse_vertex("a^-1"), tree.parse_vertex("b b a b^-1")).vertices;
  auto r = fellow_traveling_offsets(tree.graph(), p1, p2, 2);
  CHECK(r.max_gap == 0);
  CHECK(r.overlap >= 3);
  CHECK_THROWS_AS(fellow_traveling_offsets(g, {}, geos.front(), 1), Error);
}

TEST_CASE("insize sweep and equivariance") {
  auto tree = CuspedGraph::build(GroupModel::free_group(2), 3, 0);
  CHECK(insize_exhaustive(tree.graph()) == 0);
  std::vector<std::pair<Vertex, Vertex>> cycle;
  for (Vertex v = 0; v < 8; ++v) cycle.emplace_back(v, (v + 1) % 8);
  CHECK(insize_exhaustive(Graph::from_edges(8, cycle)) == 4);
  auto sub = induced_subgraph(tree.graph(), {0, 1, 2});
  CHECK(sub.size() == 3);
  CHECK(sub.edge_count() == 2);
  auto m = GroupModel::free_group(2);
  m.add_peripheral("P", "a");
  auto s = CuspedGraph::build(m, 5, 3);
  auto rep = equivariance_check(s, 30, 4);
  CHECK(rep.samples == 30);
  CHECK(rep.mismatches == 0);
}
