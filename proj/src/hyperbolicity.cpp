#include "cusp/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <tuple>

#include "cusp/error.hpp"
#include "cusp/kernels.hpp"

namespace cusp {

HalfInt gromov_product(const Graph& g, Vertex p, Vertex x, Vertex y) {
  BfsWorkspace ws(g);
  return gromov_from_distances(ws.distance(p, x), ws.distance(p, y), ws.distance(x, y));
}

namespace {

std::vector<std::vector<std::int32_t>> all_pairs(const Graph& g) {
  std::vector<std::vector<std::int32_t>> d(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    bfs(g, v, d[v]);
    for (auto x : d[v])
      if (x == kUnreached) throw Error(ErrorKind::Disconnected, "graph is not connected");
  }
  return d;
}

std::int32_t max_matched_gap(const std::vector<std::vector<std::int32_t>>* rows, BfsWorkspace* ws,
                             const std::vector<Vertex>& a, const std::vector<Vertex>& b, std::int64_t upto) {
  std::int32_t gap = 0;
  for (std::int64_t t = 0; t <= upto; ++t) {
    Vertex u = a[t], v = b[t];
    gap = std::max(gap, rows ? (*rows)[u][v] : ws->distance(u, v));
  }
  return gap;
}

TriangleData triangle_impl(const Graph& g, Vertex x, Vertex y, Vertex z,
                           const std::vector<std::vector<std::int32_t>>* rows) {
  TriangleData t;
  t.x = x, t.y = y, t.z = z;
  std::vector<std::int32_t> dy_row, dz_row, dx_row;
  const std::vector<std::int32_t>* ry;
  const std::vector<std::int32_t>* rz;
  const std::vector<std::int32_t>* rx;
  if (rows) {
    rx = &(*rows)[x], ry = &(*rows)[y], rz = &(*rows)[z];
  } else {
    bfs(g, x, dx_row), bfs(g, y, dy_row), bfs(g, z, dz_row);
    rx = &dx_row, ry = &dy_row, rz = &dz_row;
  }
  t.side_xy = canonical_path(g, *ry, x);
  t.side_yz = canonical_path(g, *rz, y);
  t.side_zx = canonical_path(g, *rx, z);
  const std::int64_t dxy = (*ry)[x], dyz = (*rz)[y], dzx = (*rx)[z];
  t.px = gromov_from_distances(dxy, dzx, dyz);
  t.py = gromov_from_distances(dxy, dyz, dzx);
  t.pz = gromov_from_distances(dzx, dyz, dxy);
  t.floored = !t.px.integral();
  const std::int64_t ox = t.px.floor(), oy = t.py.floor(), oz = t.pz.floor();
  t.cz = t.side_xy[ox];
  t.cx = t.side_yz[oy];
  t.cy = t.side_zx[oz];
  std::vector<Vertex> yx(t.side_xy.rbegin(), t.side_xy.rend());
  std::vector<Vertex> zy(t.side_yz.rbegin(), t.side_yz.rend());
  std::vector<Vertex> xz(t.side_zx.rbegin(), t.side_zx.rend());
  std::unique_ptr<BfsWorkspace> ws;
  if (!rows) ws = std::make_unique<BfsWorkspace>(g);
  auto dist = [&](Vertex u, Vertex v) { return rows ? (*rows)[u][v] : ws->distance(u, v); };
  double in = std::max({dist(t.cx, t.cy), dist(t.cy, t.cz), dist(t.cz, t.cx)});
  t.insize = in + (t.floored ? 0.5 : 0.0);
  std::int32_t thin = 0;
  thin = std::max(thin, max_matched_gap(rows, ws.get(), t.side_xy, xz, ox));
  thin = std::max(thin, max_matched_gap(rows, ws.get(), yx, t.side_yz, oy));
  thin = std::max(thin, max_matched_gap(rows, ws.get(), zy, t.side_zx, oz));
  t.thinness = thin;
  return t;
}

double pool_thin(const Graph& g, const std::vector<Vertex>& pool, const std::vector<std::vector<std::int32_t>>& full,
                 std::size_t limit) {
  const std::size_t P = pool.size();
  std::size_t done = 0;
  std::int32_t worst = 0;
  BfsWorkspace ws(g);
  for (std::size_t a = 0; a < P && done < limit; ++a)
    for (std::size_t b = a + 1; b < P && done < limit; ++b)
      for (std::size_t c = b + 1; c < P && done < limit; ++c, ++done) {
        Vertex x = pool[a], y = pool[b], z = pool[c];
        std::vector<Vertex> xy = canonical_path(g, full[b], x), yz = canonical_path(g, full[c], y),
                            zx = canonical_path(g, full[a], z);
        auto px = gromov_from_distances(full[a][y], full[a][z], full[b][z]).floor();
        auto py = gromov_from_distances(full[b][x], full[b][z], full[a][z]).floor();
        auto pz = gromov_from_distances(full[c][x], full[c][y], full[a][y]).floor();
        std::vector<Vertex> xz(zx.rbegin(), zx.rend()), yx(xy.rbegin(), xy.rend()), zy(yz.rbegin(), yz.rend());
        worst = std::max({worst, max_matched_gap(nullptr, &ws, xy, xz, px), max_matched_gap(nullptr, &ws, yx, yz, py),
                          max_matched_gap(nullptr, &ws, zy, zx, pz)});
      }
  return worst;
}

}  // namespace

double four_point_delta_exhaustive(const Graph& g) {
  if (g.size() > 2000) throw Error(ErrorKind::ResourceLimit, "exhaustive four-point mode is limited to 2000 vertices");
  auto d = all_pairs(g);
  const auto n = static_cast<std::size_t>(g.size());
  std::int32_t best = 0;
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = x + 1; y < g.size(); ++y)
      for (Vertex z = y + 1; z < g.size(); ++z)
        best = std::max(best, kernels::fourpoint_row(d[x].data(), d[y].data(), d[z].data(), n, d[x][y], d[x][z],
                                                     d[y][z]));
  return best / 2.0;
}

double four_point_delta_bruteforce(const Graph& g) {
  auto d = all_pairs(g);
  const Vertex n = g.size();
  std::int64_t best = 0;  // doubled
  for (Vertex p = 0; p < n; ++p)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y)
        for (Vertex z = 0; z < n; ++z) {
          auto xz = gromov_from_distances(d[p][x], d[p][z], d[x][z]);
          auto zy = gromov_from_distances(d[p][z], d[p][y], d[z][y]);
          auto xy = gromov_from_distances(d[p][x], d[p][y], d[x][y]);
          best = std::max(best, std::min(xz.twice, zy.twice) - xy.twice);
        }
  return best / 2.0;
}

TriangleData internal_points(const Graph& g, Vertex x, Vertex y, Vertex z) { return triangle_impl(g, x, y, z, nullptr); }

double thin_delta_exhaustive(const Graph& g) {
  if (g.size() > 400) throw Error(ErrorKind::ResourceLimit, "exhaustive thin-triangle mode is limited to 400 vertices");
  auto d = all_pairs(g);
  double best = 0;
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < g.size(); ++y)
      for (Vertex z = 0; z < g.size(); ++z) best = std::max(best, triangle_impl(g, x, y, z, &d).thinness);
  return best;
}

double insize_exhaustive(const Graph& g) {
  if (g.size() > 400) throw Error(ErrorKind::ResourceLimit, "exhaustive insize mode is limited to 400 vertices");
  auto d = all_pairs(g);
  double best = 0;
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = x + 1; y < g.size(); ++y)
      for (Vertex z = y + 1; z < g.size(); ++z) best = std::max(best, triangle_impl(g, x, y, z, &d).insize);
  return best;
}

EquivarianceReport equivariance_check(const CuspedGraph& space, std::size_t samples, std::uint64_t seed,
                                      int max_g_length) {
  EquivarianceReport rep;
  const Graph& g = space.graph();
  const auto& ball = space.ball();
  std::vector<Vertex> elements;
  for (Vertex v = 1; v < space.cayley_size(); ++v)
    if (ball.length[v] <= max_g_length) elements.push_back(v);
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.size(); ++v)
    if (space.anchor_length(v) < space.radius() - max_g_length) core.push_back(v);
  if (elements.empty() || core.empty()) throw Error(ErrorKind::SampleExhausted, "no translating elements");
  std::mt19937_64 rng(seed);
  BfsWorkspace ws(g);
  const Vertex base = space.basepoint();
  for (std::size_t attempts = 0; rep.samples < samples; ++attempts) {
    if (attempts > 50 * samples) throw Error(ErrorKind::SampleExhausted, "not enough uncontaminated triples");
    const Word& w = ball.words[elements[rng() % elements.size()]];
    Vertex x = core[rng() % core.size()], y = core[rng() % core.size()];
    Vertex gb = space.translate(w, base), gx = space.translate(w, x), gy = space.translate(w, y);
    if (gb < 0 || gx < 0 || gy < 0) {
      ++rep.contaminated_discarded;
      continue;
    }
    bool clean = true;
    for (auto [u, v] : {std::pair{base, x}, {base, y}, {x, y}, {gb, gx}, {gb, gy}, {gx, gy}})
      clean = clean && !space.geodesic(u, v).contaminated;
    if (!clean) {
      ++rep.contaminated_discarded;
      continue;
    }
    HalfInt before = gromov_from_distances(ws.distance(base, x), ws.distance(base, y), ws.distance(x, y));
    HalfInt after = gromov_from_distances(ws.distance(gb, gx), ws.distance(gb, gy), ws.distance(gx, gy));
    ++rep.samples;
    if (!(before == after)) ++rep.mismatches;
    rep.max_abs_diff = std::max(rep.max_abs_diff, std::abs(before.value() - after.value()));
  }
  return rep;
}

DeltaEstimate estimate_delta(const CuspedGraph& space, const DeltaOptions& opt) {
  DeltaEstimate est;
  const Graph& g = space.graph();
  if (opt.exhaustive || g.size() <= 300) {
    est.exhaustive = true;
    est.delta_fourpoint = four_point_delta_exhaustive(g);
    std::size_t n = static_cast<std::size_t>(g.size());
    if (g.size() <= 60) {
      est.delta_thin = thin_delta_exhaustive(g);
    } else {
      std::vector<Vertex> all(n);
      for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
      std::mt19937_64 rng(opt.seed);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(std::min<std::size_t>(n, 12));
      std::vector<std::vector<std::int32_t>> full(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) bfs(g, all[i], full[i]);
      est.delta_thin = pool_thin(g, all, full, opt.thin_triangles);
    }
    est.samples = n * (n - 1) * (n - 2) / 6 * n;
    return est;
  }
  const int core = opt.core_radius >= 0 ? opt.core_radius : std::max(0, space.radius() - 2);
  // candidate order depends on anchors only, so nested balls yield the same pool
  std::vector<std::tuple<Vertex, int, int, Vertex>> shallow, deep;
  std::vector<Vertex> core_set;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (space.anchor_length(v) > core) {
      ++est.contaminated_discarded;
      continue;
    }
    core_set.push_back(v);
    Vertex a = space.anchor(v);
    int per = space.is_cayley(v) ? -1 : space.cosets()[space.coset_of(v)].desc.peripheral;
    auto key = std::make_tuple(a, per, space.depth(v), v);
    if (space.depth(v) * 2 >= std::max(1, space.max_depth()) && !space.is_cayley(v))
      deep.push_back(key);
    else
      shallow.push_back(key);
  }
  std::sort(shallow.begin(), shallow.end());
  std::sort(deep.begin(), deep.end());
  const std::size_t W = core_set.size();
  std::size_t pool_n = 8;
  while (pool_n < 24 && pool_n * (pool_n - 1) * (pool_n - 2) / 6 * W < opt.sample_size) ++pool_n;
  pool_n = std::min(pool_n, W);
  std::mt19937_64 rng(opt.seed);
  auto take = [&](std::vector<std::tuple<Vertex, int, int, Vertex>>& from, std::size_t k) {
    for (std::size_t i = 0; i < k && !from.empty(); ++i) {
      std::size_t j = static_cast<std::size_t>(rng() % from.size());
      est.pool.push_back(std::get<3>(from[j]));
      from.erase(from.begin() + static_cast<long>(j));
    }
  };
  take(deep, pool_n / 2);
  take(shallow, pool_n - est.pool.size());
  take(deep, pool_n - est.pool.size());
  const std::size_t P = est.pool.size();
  std::vector<std::vector<std::int32_t>> rows(P);
  std::vector<std::vector<std::int32_t>> full(P);
  for (std::size_t i = 0; i < P; ++i) {
    bfs(g, est.pool[i], full[i]);
    rows[i].resize(W);
    for (std::size_t w = 0; w < W; ++w) rows[i][w] = full[i][core_set[w]];
  }
  std::int32_t best = 0;
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = a + 1; b < P; ++b)
      for (std::size_t c = b + 1; c < P; ++c) {
        best = std::max(best, kernels::fourpoint_row(rows[a].data(), rows[b].data(), rows[c].data(), W,
                                                     full[a][est.pool[b]], full[a][est.pool[c]],
                                                     full[b][est.pool[c]]));
        est.samples += W;
      }
  est.delta_fourpoint = best / 2.0;
  est.delta_thin = pool_thin(g, est.pool, full, opt.thin_triangles);

  // local pools: triples from a small ball around a core vertex, every ball vertex as the fourth point
  std::vector<std::uint8_t> in_core(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : core_set) in_core[v] = 1;
  std::vector<std::int32_t> local(static_cast<std::size_t>(g.size()), kUnreached);
  std::vector<Vertex> ball, reach;
  std::int64_t local_best = 0;
  const std::size_t local_pool = 12;
  const std::size_t triples = local_pool * (local_pool - 1) * (local_pool - 2) / 6;
  auto bounded = [&](Vertex src, int radius, std::vector<Vertex>& seen) {
    seen.assign(1, src);
    local[src] = 0;
    for (std::size_t h = 0; h < seen.size(); ++h) {
      Vertex u = seen[h];
      if (local[u] >= radius) continue;
      for (Vertex w : g.neighbors(u))
        if (local[w] == kUnreached) {
          local[w] = local[u] + 1;
          seen.push_back(w);
        }
    }
  };
  for (std::size_t done = 0; done < opt.local_samples && !core_set.empty();) {
    Vertex c = core_set[rng() % W];
    bounded(c, opt.local_radius, ball);
    for (Vertex u : ball) local[u] = kUnreached;
    std::erase_if(ball, [&](Vertex u) { return !in_core[u]; });
    std::vector<Vertex> pool{c};
    while (pool.size() < std::min(local_pool, ball.size())) {
      Vertex u = ball[rng() % ball.size()];
      if (std::find(pool.begin(), pool.end(), u) == pool.end()) pool.push_back(u);
    }
    const std::size_t B = ball.size(), L = pool.size();
    std::vector<std::vector<std::int32_t>> lrows(L, std::vector<std::int32_t>(B));
    std::vector<std::vector<std::int32_t>> lpair(L, std::vector<std::int32_t>(L));
    for (std::size_t i = 0; i < L; ++i) {
      bounded(pool[i], 2 * opt.local_radius, reach);
      for (std::size_t w = 0; w < B; ++w) lrows[i][w] = local[ball[w]];
      for (std::size_t j = 0; j < L; ++j) lpair[i][j] = local[pool[j]];
      for (Vertex u : reach) local[u] = kUnreached;
    }
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = a + 1; b < L; ++b)
        for (std::size_t e = b + 1; e < L; ++e)
          local_best = std::max<std::int64_t>(
              local_best, kernels::fourpoint_row(lrows[a].data(), lrows[b].data(), lrows[e].data(), B, lpair[a][b],
                                                 lpair[a][e], lpair[b][e]));
    est.local_samples += (L * (L - 1) * (L - 2) / 6) * B;
    done += triples;
  }
  est.delta_local = static_cast<double>(local_best) / 2.0;
  est.delta_fourpoint = std::max(est.delta_fourpoint, est.delta_local);
  return est;
}

OffsetReport fellow_traveling_offsets(const Graph& g, const std::vector<Vertex>& alpha, const std::vector<Vertex>& beta,
                                      int K) {
  if (alpha.empty() || beta.empty()) throw Error(ErrorKind::NoOverlap, "empty geodesic");
  const int la = static_cast<int>(alpha.size()) - 1, lb = static_cast<int>(beta.size()) - 1;
  std::vector<std::vector<std::int32_t>> rows(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) bfs(g, alpha[i], rows[i]);
  OffsetReport best;
  bool found = false;
  for (int k1 = 0; k1 <= K; ++k1)
    for (int k2 = 0; k2 <= K; ++k2)
      for (int k3 = 0; k3 <= K; ++k3) {
        int end = std::min(la - k3 - k1, lb - k2);
        if (end < 0) continue;
        std::int32_t gap = 0;
        for (int i = 0; i <= end; ++i) gap = std::max(gap, rows[k1 + i][beta[k2 + i]]);
        bool better = !found || gap < best.max_gap ||
                      (gap == best.max_gap && k1 + k2 + k3 < best.k1 + best.k2 + best.k3);
        if (better) {
          best = {k1, k2, k3, gap, end + 1};
          found = true;
        }
      }
  if (!found) throw Error(ErrorKind::NoOverlap, "geodesics too short for the offsets");
  return best;
}

}  // namespace cusp
