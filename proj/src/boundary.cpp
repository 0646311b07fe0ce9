#include "cusp/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cusp/error.hpp"
#include "cusp/kernels.hpp"

namespace cusp {

namespace {

// Lexicographically least geodesic from the basepoint to every vertex, as a parent array.
// Vertices of one BFS layer are ranked by their best path, so the parent with the lowest rank wins.
std::vector<Vertex> canonical_parents(const Graph& g, const std::vector<std::int32_t>& dist0) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<Vertex> parent(n, -1);
  std::vector<std::int64_t> rank(n, std::numeric_limits<std::int64_t>::max());
  std::vector<std::vector<Vertex>> layers;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist0[v] < 0) continue;
    if (static_cast<std::size_t>(dist0[v]) >= layers.size()) layers.resize(dist0[v] + 1);
    layers[dist0[v]].push_back(v);
  }
  if (layers.empty()) return parent;
  rank[layers[0][0]] = 0;
  for (std::size_t l = 1; l < layers.size(); ++l) {
    std::vector<std::pair<std::int64_t, Vertex>> order;
    order.reserve(layers[l].size());
    for (Vertex v : layers[l]) {
      Vertex best = -1;
      for (Vertex u : g.neighbors(v))
        if (dist0[u] + 1 == dist0[v] && (best < 0 || rank[u] < rank[best])) best = u;
      parent[v] = best;
      order.emplace_back(rank[best], v);
    }
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i].second] = static_cast<std::int64_t>(i);
  }
  return parent;
}

bool equivalent_upto(BfsWorkspace& ws, const RayApprox& r, const RayApprox& s, int T, double delta) {
  for (int t = 0; t <= T; ++t)
    if (ws.distance(r.at(t), s.at(t)) > delta) return false;
  return true;
}

void append_vertical(const CuspedGraph& space, Vertex q, int coset, RayApprox& r) {
  const auto& h = space.cosets()[static_cast<std::size_t>(coset)];
  auto it = std::find(h.desc.members.begin(), h.desc.members.end(), q);
  if (it == h.desc.members.end()) throw Error(ErrorKind::InvalidArgument, "vertex is not a member of the coset");
  int member = static_cast<int>(it - h.desc.members.begin());
  for (int level = 1; level <= space.max_depth(); ++level) r.path.push_back(space.horoball_vertex(coset, member, level));
  r.canonical = false;
}

}  // namespace

CanonicalRays::CanonicalRays(const CuspedGraph& space)
    : space_(&space), dist0_(space.bfs_from(space.basepoint())), parent_(canonical_parents(space.graph(), dist0_)) {}

RayApprox CanonicalRays::to(Vertex v) const {
  if (v < 0 || v >= space_->size()) throw Error(ErrorKind::UnknownVertex, "vertex id out of range");
  RayApprox r;
  for (Vertex x = v; x >= 0; x = parent_[x]) r.path.push_back(x);
  std::reverse(r.path.begin(), r.path.end());
  r.contaminated = space_->touches_sphere(r.path);
  return r;
}

RayApprox CanonicalRays::vertical(Vertex q, int coset) const {
  RayApprox r = to(q);
  append_vertical(*space_, q, coset, r);
  return r;
}

RayApprox make_ray(const CuspedGraph& space, Vertex endpoint) {
  if (endpoint < 0 || endpoint >= space.size()) throw Error(ErrorKind::UnknownVertex, "vertex id out of range");
  return make_ray(space, endpoint, space.bfs_from(endpoint));
}

RayApprox make_ray(const CuspedGraph& space, Vertex endpoint, const std::vector<std::int32_t>& dist_to_end) {
  RayApprox r;
  r.path = canonical_path(space.graph(), dist_to_end, space.basepoint());
  if (r.path.back() != endpoint) throw Error(ErrorKind::InvalidArgument, "distance rows do not belong to endpoint");
  r.contaminated = space.touches_sphere(r.path);
  return r;
}

RayApprox word_ray(const CuspedGraph& space, const std::string& label) {
  return make_ray(space, space.parse_vertex(label));
}

RayApprox vertical_ray(const CuspedGraph& space, Vertex q, int coset) {
  RayApprox r = make_ray(space, q);
  append_vertical(space, q, coset, r);
  return r;
}

bool extend_ray(const CuspedGraph& space, const std::vector<std::int32_t>& dist_from_base, RayApprox& r) {
  Vertex v = r.end();
  for (Vertex w : space.graph().neighbors(v)) {
    if (dist_from_base[w] == dist_from_base[v] + 1) {
      r.path.push_back(w);
      r.canonical = false;
      r.contaminated = r.contaminated || space.on_sphere(w);
      return true;
    }
  }
  return false;
}

bool ray_equivalent(const CuspedGraph& space, const RayApprox& r, const RayApprox& s, double delta) {
  if (r.resolution() != s.resolution())
    throw Error(ErrorKind::ResolutionMismatch, "rays have different resolutions");
  BfsWorkspace ws(space.graph());
  return equivalent_upto(ws, r, s, r.resolution(), delta);
}

HalfInt endpoint_product(std::int32_t d_base_r, std::int32_t d_base_s, std::int32_t d_rs) {
  return gromov_from_distances(d_base_r, d_base_s, d_rs);
}

ProductReport boundary_product(const CuspedGraph& space, const RayApprox& r, const RayApprox& s, double delta) {
  const int T0 = std::min(r.resolution(), s.resolution());
  BfsWorkspace ws(space.graph());
  if (equivalent_upto(ws, r, s, T0, delta)) throw Error(ErrorKind::RaysEquivalent, "rays are equivalent");
  ProductReport rep;
  int T = T0;
  for (; T > 0; --T)
    if (!space.geodesic(r.at(T), s.at(T)).contaminated) break;
  rep.resolution = T;
  for (int t = 0; t <= T; ++t) rep.sequence.push_back(gromov_from_distances(t, t, ws.distance(r.at(t), s.at(t))));
  rep.value = rep.sequence.back();
  const int from = T - T / 4;
  auto lo = rep.sequence[from].twice, hi = lo;
  for (int t = from; t <= T; ++t) {
    lo = std::min(lo, rep.sequence[t].twice);
    hi = std::max(hi, rep.sequence[t].twice);
  }
  rep.fluctuation = (hi - lo) / 2.0;
  return rep;
}

double visual_quasimetric(double product, double epsilon) { return std::exp(-epsilon * product); }

ChainMetric chain_metric(const std::vector<double>& products, std::size_t n, double epsilon) {
  if (n < 2) throw Error(ErrorKind::TooFewPoints, "chain metric needs at least two points");
  ChainMetric c;
  c.n = n;
  c.quasi.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) c.quasi[i * n + j] = visual_quasimetric(products[i * n + j], epsilon);
  c.d = c.quasi;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) kernels::minplus_row(&c.d[i * n], &c.d[k * n], c.d[i * n + k], n);
  c.k1 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) c.k1 = std::min(c.k1, c.d[i * n + j] / c.quasi[i * n + j]);
  return c;
}

BoundaryNet build_net(const CuspedGraph& space, const NetOptions& opt) {
  const Graph& g = space.graph();
  CanonicalRays canon(space);
  const auto& dist0 = canon.dist0();
  BoundaryNet net;
  net.resolution = opt.resolution;
  std::vector<RayApprox> classes;
  std::vector<std::int32_t> kept_at(static_cast<std::size_t>(g.size()), -1);
  BfsWorkspace ws(g);
  const int reach = static_cast<int>(std::floor(opt.delta));
  std::vector<std::int32_t> local(static_cast<std::size_t>(g.size()), -1);
  std::vector<Vertex> touched;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist0[v] != opt.resolution || space.on_sphere(v)) continue;
    if (opt.cayley_only && !space.is_cayley(v)) continue;
    RayApprox r = canon.to(v);
    if (r.contaminated) continue;
    ++net.candidates;
    // kept rays with endpoints within delta of v
    bool dup = false;
    touched.assign(1, v);
    local[v] = 0;
    for (std::size_t h = 0; h < touched.size() && !dup; ++h) {
      Vertex u = touched[h];
      if (kept_at[u] >= 0 && equivalent_upto(ws, classes[kept_at[u]], r, opt.resolution, opt.delta)) dup = true;
      if (local[u] >= reach) continue;
      for (Vertex w : g.neighbors(u))
        if (local[w] < 0) {
          local[w] = local[u] + 1;
          touched.push_back(w);
        }
    }
    for (Vertex u : touched) local[u] = -1;
    if (dup) continue;
    kept_at[v] = static_cast<std::int32_t>(classes.size());
    classes.push_back(std::move(r));
  }
  net.classes = classes.size();
  if (classes.empty()) throw Error(ErrorKind::EmptyNet, "no uncontaminated sphere vertices at this resolution");
  const std::size_t want = std::min(opt.points, classes.size());
  std::vector<std::int32_t> mind(classes.size(), std::numeric_limits<std::int32_t>::max());
  std::vector<char> used(classes.size(), 0);
  std::size_t next = 0;
  std::vector<std::int32_t> row;
  while (net.rays.size() < want) {
    used[next] = 1;
    net.rays.push_back(classes[next]);
    bfs(g, classes[next].end(), row);
    std::size_t best = classes.size();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (used[c]) continue;
      mind[c] = std::min(mind[c], row[classes[c].end()]);
      if (best == classes.size() || mind[c] > mind[best]) best = c;
    }
    next = best;
  }
  return net;
}

BoundaryNet extend_net(const CuspedGraph& space, const BoundaryNet& net) {
  auto dist0 = space.bfs_from(space.basepoint());
  BoundaryNet out = net;
  out.resolution = net.resolution + 1;
  for (auto& r : out.rays) {
    for (Vertex v : r.path)
      if (v >= space.size()) throw Error(ErrorKind::UnknownVertex, "ray does not belong to this space");
    if (!extend_ray(space, dist0, r)) throw Error(ErrorKind::EmptyNet, "ray cannot be extended inside the ball");
  }
  return out;
}

IdealTriangle ideal_internal_points(const CuspedGraph& space, const RayApprox& r, const RayApprox& s, double delta) {
  if (r.contaminated || s.contaminated) throw Error(ErrorKind::InvalidArgument, "contaminated ray");
  const int T = std::min(r.resolution(), s.resolution());
  const Graph& g = space.graph();
  auto ds = bfs(g, s.at(T));
  const std::int32_t dT = ds[r.at(T)];
  if (dT <= delta) throw Error(ErrorKind::RaysEquivalent, "ray ends are within delta");
  IdealTriangle tri;
  tri.m = gromov_from_distances(T, T, dT);
  tri.line = canonical_path(g, ds, r.at(T));
  const int mf = static_cast<int>(tri.m.floor());
  auto dr_m = bfs(g, r.at(mf));
  auto ds_m = bfs(g, s.at(mf));
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (std::size_t i = 0; i < tri.line.size(); ++i) {
    Vertex z = tri.line[i];
    std::int32_t v = std::max(dr_m[z], ds_m[z]);
    if (v < best) {
      best = v;
      tri.z_index = static_cast<int>(i);
    }
  }
  Vertex z = tri.line[tri.z_index];
  tri.d_rz = dr_m[z];
  tri.d_sz = ds_m[z];
  BfsWorkspace ws(g);
  const int L = static_cast<int>(tri.line.size()) - 1;
  int window = 0;
  for (int j = 0;; ++j) {
    bool left = tri.z_index - j >= 0 && mf + j <= T;
    bool right = tri.z_index + j <= L && mf + j <= T;
    if (!left && !right) break;
    if (left) tri.max_tracking_gap = std::max(tri.max_tracking_gap, ws.distance(tri.line[tri.z_index - j], r.at(mf + j)));
    if (right) tri.max_tracking_gap = std::max(tri.max_tracking_gap, ws.distance(tri.line[tri.z_index + j], s.at(mf + j)));
    window = j;
  }
  tri.window = window;
  return tri;
}

}  // namespace cusp
