#include "cusp/checks.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "cusp/error.hpp"

namespace cusp {

namespace {

std::vector<int> shuffled_cosets(const CuspedGraph& space, int peripheral, std::uint64_t seed) {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(space.cosets().size()); ++c)
    if (space.cosets()[c].desc.peripheral == peripheral) out.push_back(c);
  std::mt19937_64 rng(seed);
  for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng() % i]);
  return out;
}

Vertex closest_member(const CuspedGraph& space, int coset, const std::vector<std::int32_t>& dist0) {
  Vertex q = -1;
  for (Vertex m : space.cosets()[coset].desc.members)
    if (q < 0 || dist0[m] < dist0[q] || (dist0[m] == dist0[q] && m < q)) q = m;
  return q;
}

// BFS from the basepoint in which the coset's members are reached but not expanded and its horoball is removed.
std::vector<std::int32_t> blocked_bfs(const CuspedGraph& space, int coset) {
  const Graph& g = space.graph();
  std::vector<std::uint8_t> member(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : space.horoball_vertices(coset)) member[v] = space.is_cayley(v) ? 1 : 2;
  std::vector<std::int32_t> dist(static_cast<std::size_t>(g.size()), kUnreached);
  std::deque<Vertex> queue{space.basepoint()};
  dist[space.basepoint()] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (member[u] == 1) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreached || member[w] == 2) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<std::int32_t> horoball_distance_row(const CuspedGraph& space, int coset) {
  std::vector<std::int32_t> d;
  multi_source_bfs(space.graph(), space.horoball_vertices(coset), d);
  return d;
}

}  // namespace

CloseReport close_check(const CuspedGraph& space, int peripheral, double delta, std::size_t samples,
                        std::uint64_t seed) {
  CloseReport rep;
  rep.bound = 6 * delta + 4;
  const Graph& g = space.graph();
  auto dist0 = space.bfs_from(space.basepoint());
  std::vector<std::int32_t> dq;
  for (int c : shuffled_cosets(space, peripheral, seed)) {
    if (rep.cosets >= samples) break;
    Vertex q = closest_member(space, c, dist0);
    auto blocked = blocked_bfs(space, c);
    bfs(g, q, dq);
    bool used = false;
    for (Vertex m : space.cosets()[c].desc.members) {
      if (blocked[m] != dist0[m]) continue;
      if (space.on_sphere(m) || space.touches_sphere(canonical_path(g, dq, m))) {
        ++rep.contaminated_discarded;
        continue;
      }
      used = true;
      ++rep.entries;
      rep.max_distance = std::max(rep.max_distance, dq[m]);
      if (dq[m] > rep.bound) ++rep.violations;
    }
    if (used) ++rep.cosets;
  }
  if (rep.cosets < samples) throw Error(ErrorKind::SampleExhausted, "not enough uncontaminated cosets");
  return rep;
}

QcReport check_quasiconvexity(const CuspedGraph& space, int coset, Vertex x, Vertex y, double delta) {
  QcReport rep;
  rep.bound = 2 * delta;
  auto dh = horoball_distance_row(space, coset);
  auto path = space.geodesic(x, y);
  const std::int32_t n = std::max(dh[x], dh[y]);
  rep.pairs = 1;
  rep.max_excess = -n;
  for (Vertex v : path.vertices) rep.max_excess = std::max(rep.max_excess, static_cast<double>(dh[v] - n));
  if (path.contaminated) rep.contaminated_discarded = 1;
  if (rep.max_excess > rep.bound) rep.violations = 1;
  return rep;
}

QcReport qc_check(const CuspedGraph& space, int peripheral, double delta, int max_n, std::size_t samples,
                  std::uint64_t seed) {
  QcReport rep;
  rep.bound = 2 * delta;
  rep.max_excess = -std::numeric_limits<double>::infinity();
  const Graph& g = space.graph();
  auto cosets = shuffled_cosets(space, peripheral, seed);
  if (cosets.empty()) throw Error(ErrorKind::SampleExhausted, "no cosets");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::int32_t> dy;
  std::size_t attempts = 0;
  for (std::size_t i = 0; rep.pairs < samples; ++i) {
    if (++attempts > 20 * samples) throw Error(ErrorKind::SampleExhausted, "not enough uncontaminated pairs");
    int c = cosets[i % cosets.size()];
    auto dh = horoball_distance_row(space, c);
    std::vector<Vertex> near;
    for (Vertex v = 0; v < g.size(); ++v)
      if (dh[v] >= 1 && dh[v] <= max_n && !space.on_sphere(v)) near.push_back(v);
    if (near.size() < 2) continue;
    Vertex x = near[rng() % near.size()], y = near[rng() % near.size()];
    if (x == y) continue;
    bfs(g, y, dy);
    auto path = canonical_path(g, dy, x);
    if (space.touches_sphere(path)) {
      ++rep.contaminated_discarded;
      continue;
    }
    const std::int32_t n = std::max(dh[x], dh[y]);
    double excess = -n;
    for (Vertex v : path) excess = std::max(excess, static_cast<double>(dh[v] - n));
    rep.max_excess = std::max(rep.max_excess, excess);
    if (excess > rep.bound) ++rep.violations;
    ++rep.pairs;
  }
  return rep;
}

DeepReport check_deep_penetration(const CuspedGraph& space, int coset, const std::vector<Vertex>& path, int n,
                                  double delta) {
  DeepReport rep;
  rep.n = n;
  rep.delta = delta;
  const int k = static_cast<int>(path.size()) - 1;
  const double w = n + 3 * delta;
  if (k < 2 * w) throw Error(ErrorKind::TooShort, "geodesic shorter than 2(N + 3 delta)");
  rep.lo = static_cast<int>(std::ceil(w));
  rep.hi = static_cast<int>(std::floor(k - w));
  rep.inside = true;
  rep.min_depth = std::numeric_limits<int>::max();
  for (int i = rep.lo; i <= rep.hi; ++i) {
    Vertex v = path[i];
    bool in = space.is_cayley(v) ? std::count(space.cosets_at(v).begin(), space.cosets_at(v).end(), coset) > 0
                                 : space.coset_of(v) == coset;
    int depth = in ? space.depth(v) : 0;
    rep.min_depth = std::min(rep.min_depth, depth);
    if (!in || depth < delta) rep.inside = false;
  }
  const Vertex x = path.front();
  const auto& members = space.cosets()[coset].desc.members;
  auto it = std::find(members.begin(), members.end(), x);
  rep.start_on_coset = it != members.end();
  rep.vertical_prefix = static_cast<int>(std::floor((k - w) / 2));
  if (rep.start_on_coset && rep.vertical_prefix <= space.max_depth()) {
    int member = static_cast<int>(it - members.begin());
    Vertex top = rep.vertical_prefix == 0 ? x : space.horoball_vertex(coset, member, rep.vertical_prefix);
    auto dy = space.bfs_from(path.back());
    rep.rerouted = dy[top] == k - rep.vertical_prefix;
  }
  return rep;
}

TightReport tight_check(const CuspedGraph& space, int peripheral, double delta, std::size_t samples,
                        std::uint64_t seed) {
  TightReport rep;
  rep.bound = 2 * delta + 1;
  rep.level = std::max(1, static_cast<int>(std::ceil(delta)));
  if (rep.level > space.max_depth()) return rep;
  auto dist0 = space.bfs_from(space.basepoint());
  BfsWorkspace ws(space.graph());
  for (int c : shuffled_cosets(space, peripheral, seed)) {
    if (rep.horoballs >= samples) break;
    std::vector<Vertex> closest;
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    bool contaminated = false;
    for (Vertex v : space.horoball_vertices(c)) {
      if (space.depth(v) < rep.level) continue;
      if (dist0[v] < best) best = dist0[v], closest.clear();
      if (dist0[v] == best) closest.push_back(v);
    }
    for (Vertex v : closest) contaminated = contaminated || space.anchor_length(v) >= space.radius() - 1;
    if (closest.empty() || contaminated) continue;
    ++rep.horoballs;
    for (std::size_t i = 0; i < closest.size(); ++i)
      for (std::size_t j = i + 1; j < closest.size(); ++j)
        rep.max_spread = std::max(rep.max_spread, ws.distance(closest[i], closest[j]));
  }
  return rep;
}

}  // namespace cusp
