#include "cusp/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cusp/error.hpp"

namespace cusp {

std::string_view to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::Empty: return "empty";
    case SequenceKind::Finite: return "finite";
    case SequenceKind::HalfInfinite: return "half-infinite";
    case SequenceKind::BiInfinite: return "bi-infinite";
  }
  return "?";
}

Splitting::Splitting(const CuspedGraph& space) : space_(&space) {
  const auto& m = space.model();
  if (m.family() == Family::Hnn)
    hnn_ = true;
  else if (m.family() != Family::Amalgam && m.family() != Family::SurfaceAmalgam)
    throw Error(ErrorKind::NormalFormUnavailable, "splitting needs an amalgam or HNN presentation");
  if (m.peripherals().empty()) throw Error(ErrorKind::NormalFormUnavailable, "splitting needs the edge group as peripheral");
  dist0_ = space.bfs_from(space.basepoint());
}

TreeNode Splitting::edge_node(const Word& g) const {
  TreeNode e;
  e.is_edge = true;
  e.key = space_->model().coset_of(g, 0).key;
  e.coset = space_->find_coset(0, e.key);
  return e;
}

std::vector<TreeNode> Splitting::path_to_element(const Word& g) const {
  const auto& m = space_->model();
  std::vector<TreeNode> nodes;
  nodes.push_back({false, "V0:", -1});
  Word prefix;
  if (!hnn_) {
    AmalgamNF nf = m.amalgam_nf(g);
    int current = 0;
    for (auto& [f, r] : nf.reps) {
      if (f != current) {
        nodes.push_back(edge_node(prefix));
        nodes.push_back({false, "V" + std::to_string(f) + ":" + m.str(prefix), -1});
        current = f;
      }
      prefix.insert(prefix.end(), r.begin(), r.end());
    }
    return nodes;
  }
  HnnNF nf = m.hnn_nf(g);
  const Letter t = letter(m.hnn_data()->stable, false);
  for (auto& [w, e] : nf.reps) {
    prefix.insert(prefix.end(), w.begin(), w.end());
    if (e > 0) {
      nodes.push_back(edge_node(prefix));
      prefix.push_back(t);
    } else {
      prefix.push_back(inv(t));
      nodes.push_back(edge_node(prefix));
    }
    nodes.push_back({false, "V0:" + m.str(prefix), -1});
  }
  return nodes;
}

std::vector<TreeNode> Splitting::path_to(Vertex v) const {
  const auto& ball = space_->ball();
  if (space_->is_cayley(v)) return path_to_element(ball.words[v]);
  const auto& h = space_->cosets()[static_cast<std::size_t>(space_->coset_of(v))];
  if (h.desc.peripheral != 0) throw Error(ErrorKind::NormalFormUnavailable, "horoball is not over an edge coset");
  const Word& g = ball.words[h.desc.rep];
  TreeNode e = edge_node(g);
  std::vector<TreeNode> p = path_to_element(g);
  if (hnn_) {
    Word gt = g;
    gt.push_back(letter(space_->model().hnn_data()->stable, false));
    std::vector<TreeNode> q = path_to_element(gt);
    if (q.size() < p.size()) p = std::move(q);
  }
  if (p.size() >= 2 && p[p.size() - 2] == e) {
    p.pop_back();
    return p;
  }
  p.push_back(e);
  return p;
}

TreePath Splitting::tree_path(const RayApprox& r) const {
  TreePath tp;
  tp.nodes = path_to(r.end());
  for (auto& n : tp.nodes)
    if (n.is_edge) tp.edges.push_back(n);
  return tp;
}

CutPoint Splitting::closest_point(int coset) const {
  CutPoint c;
  c.coset = coset;
  const auto& h = space_->cosets()[static_cast<std::size_t>(coset)];
  c.key = h.desc.key;
  for (Vertex m : h.desc.members)
    if (c.q < 0 || dist0_[m] < c.dist || (dist0_[m] == c.dist && m < c.q)) c.q = m, c.dist = dist0_[m];
  return c;
}

CutPointSequence Splitting::cut_point_sequence(const RayApprox& x, const RayApprox& y) const {
  auto lx = path_to(x.end()), ly = path_to(y.end());
  std::size_t j = 0;
  while (j < lx.size() && j < ly.size() && lx[j] == ly[j]) ++j;
  // tree geodesic: lx back to the last common node, then down ly
  std::vector<TreeNode> path(lx.rbegin(), lx.rend() - static_cast<long>(j - 1));
  path.insert(path.end(), ly.begin() + static_cast<long>(j), ly.end());
  const std::size_t apex = lx.size() - j;  // index of the last common node (closest to the root)
  CutPointSequence seq;
  int on_x_side = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (!path[i].is_edge) continue;
    if (path[i].coset < 0) {
      seq.complete = false;
      continue;
    }
    CutPoint c = closest_point(path[i].coset);
    c.tree_index = static_cast<int>(i);
    seq.cuts.push_back(c);
    if (i <= apex) ++on_x_side;
  }
  seq.split = on_x_side;
  // a side counts as unbounded when it keeps crossing walls up to the last two steps of its ray
  auto open = [&](const RayApprox& r, const CutPoint* outer) {
    return outer && outer->dist >= r.resolution() - 2;
  };
  const std::size_t n = seq.cuts.size();
  if (n == 0) {
    seq.kind = SequenceKind::Empty;
  } else {
    int opens = (open(x, &seq.cuts.front()) ? 1 : 0) + (open(y, &seq.cuts.back()) ? 1 : 0);
    seq.kind = opens == 0 ? SequenceKind::Finite : opens == 1 ? SequenceKind::HalfInfinite : SequenceKind::BiInfinite;
  }
  return seq;
}

std::vector<int> Splitting::cosets_on(const RayApprox& x, const RayApprox& y) const {
  std::vector<int> out;
  for (const RayApprox* r : {&x, &y})
    for (Vertex v : r->path) {
      if (space_->is_cayley(v)) {
        for (int c : space_->cosets_at(v))
          if (space_->cosets()[c].desc.peripheral == 0) out.push_back(c);
      } else if (space_->cosets()[space_->coset_of(v)].desc.peripheral == 0) {
        out.push_back(space_->coset_of(v));
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool separation_check(const CuspedGraph& space, int coset, Vertex x, Vertex y) {
  std::vector<std::uint8_t> blocked(static_cast<std::size_t>(space.size()), 0);
  if (coset >= 0)
    for (Vertex v : space.horoball_vertices(coset)) blocked[v] = 1;
  if (blocked[x] || blocked[y]) throw Error(ErrorKind::EndpointRemoved, "endpoint lies in the removed coset");
  std::vector<std::int32_t> dist;
  bfs(space.graph(), x, dist, &blocked);
  return dist[y] == kUnreached;
}

namespace {

int step_letter(const CuspedGraph& space, Vertex u, Vertex w) {
  const auto& ball = space.ball();
  const int letters = space.model().alphabet().letters();
  for (int l = 0; l < letters; ++l) {
    Word g = ball.words[u];
    g.push_back(static_cast<Letter>(l));
    if (ball.find(space.model(), g) == w) return l;
  }
  return -1;
}

std::vector<int> walls_at(const CuspedGraph& space, Vertex v) {
  std::vector<int> out;
  if (!space.is_cayley(v)) {
    if (space.cosets()[space.coset_of(v)].desc.peripheral == 0) out.push_back(space.coset_of(v));
    return out;
  }
  for (int c : space.cosets_at(v))
    if (space.cosets()[c].desc.peripheral == 0) out.push_back(c);
  return out;
}

}  // namespace

std::vector<Vertex> ray_walk(const RayApprox& x, const RayApprox& y) {
  std::vector<Vertex> walk(x.path.rbegin(), x.path.rend());
  walk.insert(walk.end(), y.path.begin() + 1, y.path.end());
  return walk;
}

std::vector<int> crossed_walls(const CuspedGraph& space, const std::vector<Vertex>& walk) {
  const auto& m = space.model();
  if (walk.empty() || !space.is_cayley(walk.front()) || !space.is_cayley(walk.back()))
    throw Error(ErrorKind::InvalidArgument, "walk ends must be Cayley vertices");
  std::map<int, int> parity;
  if (m.family() == Family::Hnn) {
    const Letter t = letter(m.hnn_data()->stable, false);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      Vertex u = walk[i], w = walk[i + 1];
      if (!space.is_cayley(u) || !space.is_cayley(w)) continue;
      int l = step_letter(space, u, w);
      if (l != t && l != inv(t)) continue;
      for (int c : walls_at(space, l == t ? u : w)) parity[c] ^= 1;
    }
  } else if (m.amalgam()) {
    const auto& factor = m.amalgam()->factor_of_gen;
    auto end_side = [&](Vertex v) {
      AmalgamNF nf = m.amalgam_nf(space.ball().words[v]);
      return nf.reps.empty() ? 0 : nf.reps.back().first;
    };
    std::map<int, int> side;  // side of the walk relative to each wall while on it
    std::vector<int> prev;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      for (int c : walls_at(space, walk[i])) {
        if (i > 0 && std::count(prev.begin(), prev.end(), c)) continue;
        side[c] = i == 0 ? end_side(walk[0]) : factor[gen_of(static_cast<Letter>(step_letter(space, walk[i - 1], walk[i])))];
      }
      prev = walls_at(space, walk[i]);
      if (i + 1 == walk.size()) break;
      auto next = walls_at(space, walk[i + 1]);
      for (int c : walls_at(space, walk[i])) {
        if (std::count(next.begin(), next.end(), c)) continue;
        int l = step_letter(space, walk[i], walk[i + 1]);
        if (l < 0) throw Error(ErrorKind::InvalidArgument, "walk leaves a wall by a non-generator step");
        parity[c] ^= side[c] != factor[gen_of(static_cast<Letter>(l))] ? 1 : 0;
      }
    }
    for (int c : walls_at(space, walk.back())) parity[c] ^= side[c] != end_side(walk.back()) ? 1 : 0;
  } else {
    throw Error(ErrorKind::NormalFormUnavailable, "walls need an amalgam or HNN presentation");
  }
  std::vector<int> out;
  for (auto [c, p] : parity)
    if (p) out.push_back(c);
  return out;
}

EmbeddingReport compare_embedding_products(const CuspedGraph& vertex_space, const CuspedGraph& ambient, int resolution,
                                           std::size_t points, double delta) {
  NetOptions opt;
  opt.resolution = resolution;
  opt.points = points;
  opt.delta = delta;
  opt.cayley_only = true;
  auto net = build_net(vertex_space, opt);
  std::vector<Vertex> ends, images;
  for (const auto& r : net.rays) {
    ends.push_back(r.end());
    images.push_back(ambient.parse_vertex(vertex_space.label(r.end())));
  }
  auto base_v = vertex_space.bfs_from(vertex_space.basepoint());
  auto base_a = ambient.bfs_from(ambient.basepoint());
  EmbeddingReport rep;
  std::vector<std::int32_t> row_v, row_a;
  double total = 0;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    bfs(vertex_space.graph(), ends[i], row_v);
    bfs(ambient.graph(), images[i], row_a);
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      double pv = gromov_from_distances(base_v[ends[i]], base_v[ends[j]], row_v[ends[j]]).value();
      double pa = gromov_from_distances(base_a[images[i]], base_a[images[j]], row_a[images[j]]).value();
      double diff = std::abs(pv - pa);
      rep.max_diff = std::max(rep.max_diff, diff);
      total += diff;
      ++rep.pairs;
    }
  }
  if (rep.pairs) rep.mean_diff = total / static_cast<double>(rep.pairs);
  return rep;
}

}  // namespace cusp
