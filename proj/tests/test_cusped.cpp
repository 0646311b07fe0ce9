#include "doctest.h"

#include <sstream>

#include "cusp/cusped.hpp"
#include "cusp/error.hpp"

using namespace cusp;

namespace {
GroupModel free_a() {
  auto m = GroupModel::free_group(2);
  m.add_peripheral("P", "a");
  return m;
}
}  // namespace

TEST_CASE("cusped space examples") {
  auto z = GroupModel::free_group(1);
  z.add_peripheral("P", "a");
  auto s0 = CuspedGraph::build(z, 0, 3);
  CHECK(s0.size() == 4);
  CHECK(s0.graph().edge_count() == 3);

  auto s = CuspedGraph::build(free_a(), 2, 2);
  int idc = s.cosets_at(0).at(0);
  std::vector<std::string> base;
  for (auto m : s.cosets()[idc].desc.members) base.push_back(s.label(m));
  CHECK(base == std::vector<std::string>{"a^-1 a^-1", "a^-1", "e", "a", "a a"});

  auto sg = GroupModel::surface(2);
  sg.add_peripheral("P", "a b a^-1 b^-1");
  auto ss = CuspedGraph::build(sg, 4, 3);
  CHECK(ss.cosets_at(0).size() == 1);
}

TEST_CASE("distances and canonical geodesics") {
  auto tree = CuspedGraph::build(GroupModel::free_group(2), 4, 2);
  Vertex abab = tree.parse_vertex("a b a b");
  CHECK(tree.distance(0, 0).distance == 0);
  CHECK(tree.distance(0, abab).distance == 4);
  auto g = tree.geodesic(0, abab);
  std::vector<std::string> labels;
  for (Vertex v : g.vertices) labels.push_back(tree.label(v));
  CHECK(labels == std::vector<std::string>{"e", "a", "a b", "a b a", "a b a b"});
  CHECK(g.contaminated);  // endpoint sits on the sphere

  auto s = CuspedGraph::build(free_a(), 9, 4);
  Vertex a8 = s.parse_vertex("a^8");
  auto r = s.geodesic(0, a8);
  CHECK(r.length == 6);
  CHECK_FALSE(r.contaminated);
  labels.clear();
  for (Vertex v : r.vertices) labels.push_back(s.label(v));
  CHECK(labels == std::vector<std::string>{"e", "e@1", "a a@1", "a a a a@1", "a a a a a a@1",
                                           "a a a a a a a a@1", "a a a a a a a a"});
  CHECK(s.parse_vertex("a^3@2") == s.horoball_vertex(s.cosets_at(0)[0], 12, 2));
  CHECK_THROWS_AS(s.parse_vertex("a^10"), Error);
  CHECK_THROWS_AS(s.parse_vertex("q"), Error);
  CHECK(s.depth(s.parse_vertex("b@1")) == 1);
}

TEST_CASE("gluing consistency against the standalone horoball") {
  auto s = CuspedGraph::build(free_a(), 6, 4);
  int c = s.cosets_at(0)[0];
  const auto& desc = s.cosets()[c].desc;
  auto h = build_horoball(BaseGraph::from_coords(desc.coords), 4);
  for (int i = 0; i < static_cast<int>(desc.members.size()); ++i) {
    auto d = s.bfs_from(desc.members[i]);
    auto dh = bfs(h.graph(), h.id(i, 0));
    for (int j = 0; j < static_cast<int>(desc.members.size()); ++j) CHECK(d[desc.members[j]] <= dh[h.id(j, 0)]);
  }
}

TEST_CASE("pure tree distances are word lengths") {
  auto f = GroupModel::free_group(2);
  auto s = CuspedGraph::build(f, 4, 3);
  auto d = s.bfs_from(0);
  for (Vertex v = 0; v < s.size(); ++v) CHECK(d[v] == static_cast<int>(s.ball().words[v].size()));
  CHECK(s.size() == s.cayley_size());
}

TEST_CASE("cache is deterministic and hash checked") {
  auto m = free_a();
  auto s1 = CuspedGraph::build(m, 4, 3), s2 = CuspedGraph::build(m, 4, 3);
  std::ostringstream o1, o2;
  s1.write_cache(o1);
  s2.write_cache(o2);
  CHECK(o1.str() == o2.str());
  std::istringstream in(o1.str());
  auto h = read_cache_header(in);
  CHECK(h.radius == 4);
  CHECK(h.depth == 3);
  CHECK(h.vertices == static_cast<size_t>(s1.size()));
  std::istringstream again(o1.str());
  CHECK(load_cached(again, m).size() == s1.size());
  auto other = GroupModel::free_group(2);
  other.add_peripheral("P", "b");
  std::istringstream stale(o1.str());
  CHECK_THROWS_AS(load_cached(stale, other), Error);
}

TEST_CASE("user graph spaces") {
  auto m = GroupModel::parse("family = user-graph\nvertices = 4\nedge = 0 1\nedge = 1 2\nedge = 2 3\nperipheral P = 1 2 3\n");
  auto s = CuspedGraph::build(m, 0, 2);
  CHECK(s.size() == 4 + 3 * 2);
  CHECK(s.label(s.horoball_vertex(0, 0, 1)) == "v1@1");
  CHECK(s.parse_vertex("v3@2") == s.horoball_vertex(0, 2, 2));
  CHECK(s.distance(0, 3).distance == 3);
}
