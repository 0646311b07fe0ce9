#include "cusp/pvmetric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "cusp/error.hpp"

namespace cusp {

namespace {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

double sorted_sum(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double s = 0;
  for (double x : v) s += x;
  return s;
}

bool in_coset(const CuspedGraph& space, Vertex v, int coset) {
  if (!space.is_cayley(v)) return space.coset_of(v) == coset;
  const auto& c = space.cosets_at(v);
  return std::find(c.begin(), c.end(), coset) != c.end();
}

// Breadth-first chain from x to y through points of the ball {p : d(c, p) <= rho}, steps <= eps.
std::vector<std::size_t> chain_in_ball(const std::vector<double>& d, std::size_t n, std::size_t c, double rho,
                                       std::size_t x, std::size_t y, double eps) {
  std::vector<std::size_t> parent(n, n);
  std::deque<std::size_t> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (u == y) break;
    for (std::size_t w = 0; w < n; ++w) {
      if (parent[w] != n || d[c * n + w] > rho || d[u * n + w] > eps) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[y] == n) return {};
  std::vector<std::size_t> chain{y};
  while (chain.back() != x) chain.push_back(parent[chain.back()]);
  return chain;
}

double diameter(const std::vector<double>& d, std::size_t n, const std::vector<std::size_t>& pts) {
  double best = 0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) best = std::max(best, d[pts[a] * n + pts[b]]);
  return best;
}

}  // namespace

BoundaryContext::BoundaryContext(const Splitting& splitting, std::vector<RayApprox> net, double delta, double epsilon)
    : split_(&splitting), rays_(std::move(net)), n_net_(rays_.size()), delta_(delta), epsilon_(epsilon) {
  if (n_net_ < 2) throw Error(ErrorKind::TooFewPoints, "boundary context needs at least two net points");
  const CuspedGraph& space = splitting.space();
  for (std::size_t i = 0; i < n_net_; ++i)
    for (std::size_t j = i + 1; j < n_net_; ++j) seq_.push_back(splitting.cut_point_sequence(rays_[i], rays_[j]));
  CanonicalRays canon(space);
  for (const auto& s : seq_)
    for (const auto& c : s.cuts) {
      auto it = std::find_if(cut_index_.begin(), cut_index_.end(), [&](auto& e) { return e.first == c.coset; });
      if (it != cut_index_.end()) continue;
      cut_index_.emplace_back(c.coset, rays_.size());
      rays_.push_back(canon.vertical(c.q, c.coset));
    }
  std::sort(cut_index_.begin(), cut_index_.end());

  const std::size_t n = rays_.size();
  const auto& dist0 = canon.dist0();
  products_.assign(n * n, HalfInt{});
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      std::vector<std::int32_t> row;
      for (std::size_t a = t; a < n; a += workers) {
        bfs(space.graph(), rays_[a].end(), row);
        for (std::size_t b = 0; b < n; ++b)
          products_[a * n + b] = gromov_from_distances(dist0[rays_[a].end()], dist0[rays_[b].end()], row[rays_[b].end()]);
      }
    });
  for (auto& th : pool) th.join();
  std::vector<double> values(n * n);
  for (std::size_t k = 0; k < n * n; ++k) values[k] = products_[k].value();
  dv_ = chain_metric(values, n, epsilon_);

  for (std::size_t i = 0; i < n_net_; ++i)
    for (std::size_t j = i + 1; j < n_net_; ++j) {
      const auto& s = seq_[pair_index(i, j, n_net_)];
      if (s.cuts.empty()) {
        d_hat_ = std::max(d_hat_, dv(i, j));
        continue;
      }
      d_hat_ = std::max(d_hat_, dv(i, cut_point(s.cuts.front().coset)));
      d_hat_ = std::max(d_hat_, dv(cut_point(s.cuts.back().coset), j));
      for (std::size_t k = 0; k + 1 < s.cuts.size(); ++k)
        d_hat_ = std::max(d_hat_, dv(cut_point(s.cuts[k].coset), cut_point(s.cuts[k + 1].coset)));
    }
}

double BoundaryContext::tail_constant() const {
  return (dv_.k2 / dv_.k1) * std::exp(26 * delta_ + 12) * d_hat_ / (1 - std::exp(-1.0));
}

CutPointSequence BoundaryContext::sequence(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_net_ || j >= n_net_) throw Error(ErrorKind::InvalidArgument, "net indices must be distinct");
  if (i < j) return seq_[pair_index(i, j, n_net_)];
  CutPointSequence s = seq_[pair_index(j, i, n_net_)];
  std::reverse(s.cuts.begin(), s.cuts.end());
  s.split = static_cast<int>(s.cuts.size()) - s.split;
  return s;
}

std::size_t BoundaryContext::cut_point(int coset) const {
  auto it = std::lower_bound(cut_index_.begin(), cut_index_.end(), std::make_pair(coset, std::size_t{0}));
  if (it == cut_index_.end() || it->first != coset) throw Error(ErrorKind::InvalidArgument, "coset is not a cut point");
  return it->second;
}

MetricInterval BoundaryContext::dl(std::size_t i, std::size_t j, int terms) const {
  MetricInterval out;
  if (i == j) return out;
  const CutPointSequence s = sequence(i, j);
  const std::size_t n = s.cuts.size();
  if (n == 0) {
    out.lower = out.upper = dv(i, j);
    return out;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(s.cuts[a].dist, s.cuts[a].coset) < std::tie(s.cuts[b].dist, s.cuts[b].coset);
  });
  const std::size_t keep = terms < 0 ? n : std::clamp<std::size_t>(static_cast<std::size_t>(terms), 1, n);
  std::size_t lo = n, hi = 0;
  for (std::size_t k = 0; k < keep; ++k) lo = std::min(lo, order[k]), hi = std::max(hi, order[k]);
  std::vector<double> parts{dv(i, cut_point(s.cuts[lo].coset)), dv(cut_point(s.cuts[hi].coset), j)};
  for (std::size_t k = lo; k < hi; ++k) parts.push_back(dv(cut_point(s.cuts[k].coset), cut_point(s.cuts[k + 1].coset)));
  out.lower = sorted_sum(parts);
  out.terms_used = static_cast<int>(hi - lo + 1);
  out.tail_bound = tail_constant() * (std::exp(-static_cast<double>(s.cuts[lo].dist)) +
                                      std::exp(-static_cast<double>(s.cuts[hi].dist)));
  out.upper = out.lower + out.tail_bound;
  out.unresolved = out.tail_bound > out.lower;
  return out;
}

DlMatrices dl_matrices(const BoundaryContext& ctx, int terms) {
  DlMatrices m;
  const std::size_t n = m.n = ctx.size();
  m.dv.assign(n * n, 0);
  m.lower.assign(n * n, 0);
  m.upper.assign(n * n, 0);
  m.tail.assign(n * n, 0);
  m.empty.assign(n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto iv = ctx.dl(i, j, terms);
      m.dv[i * n + j] = ctx.dv(i, j);
      m.lower[i * n + j] = iv.lower;
      m.upper[i * n + j] = iv.upper;
      m.tail[i * n + j] = iv.tail_bound;
      m.empty[i * n + j] = ctx.sequence(i, j).cuts.empty();
    }
  return m;
}

AxiomReport metric_axiom_check(const BoundaryContext& ctx) {
  AxiomReport rep;
  const auto m = dl_matrices(ctx);
  const std::size_t n = m.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ++rep.pairs;
      const std::size_t a = i * n + j, b = j * n + i;
      if (m.lower[a] != m.lower[b] || m.upper[a] != m.upper[b]) ++rep.asymmetric;
      if (!(m.lower[a] > 0)) ++rep.nonpositive;
      bool width0 = m.upper[a] == m.lower[a] && m.tail[a] == 0;
      if (width0 != static_cast<bool>(m.empty[a])) ++rep.width_mismatches;
      if (m.tail[a] > m.lower[a]) ++rep.unresolved;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        ++rep.triples;
        if (m.lower[x * n + z] > m.upper[x * n + y] + m.upper[y * n + z]) ++rep.triangle_violations;
      }
  return rep;
}

RefinementReport tail_refinement_check(const BoundaryContext& ctx, std::size_t max_pairs, int terms, int extra) {
  RefinementReport rep;
  rep.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ctx.size() && rep.pairs < max_pairs; ++i)
    for (std::size_t j = i + 1; j < ctx.size() && rep.pairs < max_pairs; ++j) {
      if (ctx.sequence(i, j).cuts.size() < 2) continue;
      auto before = ctx.dl(i, j, terms), after = ctx.dl(i, j, terms + extra);
      ++rep.pairs;
      double slack = std::min(after.lower - before.lower, before.upper - after.lower);
      rep.worst_slack = std::min(rep.worst_slack, slack);
      if (slack >= 0) ++rep.inside;
    }
  return rep;
}

HolderReport holder_modulus_check(const DlMatrices& m) {
  HolderReport rep;
  const std::size_t n = m.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t a = i * n + j;
      ++rep.pairs;
      rep.n_hat = std::max(rep.n_hat, m.upper[a] / std::pow(m.dv[a], 0.25));
      if (m.dv[a] > m.upper[a]) ++rep.dv_above_upper;
      if (m.dv[a] > m.lower[a] * (1 + 1e-12)) ++rep.dv_above_lower;
    }
  return rep;
}

double net_mesh(const std::vector<double>& d, std::size_t n) {
  double mesh = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) nearest = std::min(nearest, d[i * n + j]);
    if (n > 1) mesh = std::max(mesh, nearest);
  }
  return mesh;
}

double chain_ratio(const std::vector<double>& d, std::size_t n, std::size_t x, std::size_t y, double eps_chain) {
  if (x == y) return 1;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c : {x, y}) {
    std::vector<double> radii(n);
    for (std::size_t p = 0; p < n; ++p) radii[p] = d[c * n + p];
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    if (chain_in_ball(d, n, c, radii.back(), x, y, eps_chain).empty())
      throw Error(ErrorKind::Disconnected, "no chain at this step size");
    std::size_t lo = 0, hi = radii.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (chain_in_ball(d, n, c, radii[mid], x, y, eps_chain).empty())
        lo = mid + 1;
      else
        hi = mid;
    }
    best = std::min(best, diameter(d, n, chain_in_ball(d, n, c, radii[lo], x, y, eps_chain)) / d[x * n + y]);
  }
  return best;
}

LinConnReport linear_connectedness_check(const std::vector<double>& d, std::size_t n, double eps_chain) {
  LinConnReport rep;
  rep.mesh = net_mesh(d, n);
  rep.eps_chain = eps_chain > 0 ? eps_chain : 2 * rep.mesh;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double r = chain_ratio(d, n, i, j, rep.eps_chain);
      rep.ratios.push_back(r);
      rep.k_hat = std::max(rep.k_hat, r);
    }
  return rep;
}

std::vector<double> circle_metric(std::size_t n) {
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = i > j ? i - j : j - i;
      k = std::min(k, n - k);
      d[i * n + j] = 2 * std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    }
  return d;
}

E1Report e1_fixture(int k_max, double density) {
  const double pi = std::numbers::pi;
  auto peak = [&](int k) { return 2 / ((4.0 * k + 1) * pi); };
  E1Report rep;
  for (int k = 1; k <= k_max; ++k) {
    E1Row row;
    row.k = k;
    const double a = peak(k + 1), b = peak(k);
    row.peak_gap = 2 * (b - a);
    row.peak_gap_formula = 16 / (pi * (4.0 * k + 1) * (4.0 * k + 5));
    row.trough_depth = 2 * a;
    row.trough_formula = 4 / ((4.0 * k + 5) * pi);
    rep.max_rel_error = std::max({rep.max_rel_error, std::abs(row.peak_gap - row.peak_gap_formula) / row.peak_gap_formula,
                                  std::abs(row.trough_depth - row.trough_formula) / row.trough_formula});
    // uniform in u = 1/x, where the curve's speed is about |cos u| / u
    const double u0 = 1 / b, u1 = 1 / a;
    const std::size_t n = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(density * u1)));
    std::vector<double> px(n), py(n);
    for (std::size_t i = 0; i < n; ++i) {
      double x = i == 0 ? b : i + 1 == n ? a : 1 / (u0 + (u1 - u0) * static_cast<double>(i) / static_cast<double>(n - 1));
      px[i] = x;
      py[i] = x * std::sin(1 / x);
    }
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::hypot(px[i] - px[j], py[i] - py[j]);
    row.ratio = chain_ratio(d, n, 0, n - 1, 2 * net_mesh(d, n));
    row.ratio_bound = (4.0 * k + 1) / 4;
    rep.rows.push_back(row);
  }
  if (!rep.rows.empty()) rep.growth = rep.rows.back().ratio / rep.rows.front().ratio;
  return rep;
}

std::size_t doubling_estimate(const std::vector<double>& d, std::size_t n, const std::vector<double>& radii) {
  std::size_t best = n == 0 ? 0 : 1;
  std::vector<std::size_t> ball;
  std::vector<char> covered(n);
  for (std::size_t x = 0; x < n; ++x)
    for (double r : radii) {
      ball.clear();
      for (std::size_t p = 0; p < n; ++p)
        if (d[x * n + p] <= r) ball.push_back(p);
      std::sort(ball.begin(), ball.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(d[x * n + a], a) < std::make_pair(d[x * n + b], b);
      });
      for (std::size_t p : ball) covered[p] = 0;
      std::size_t count = 0;
      for (std::size_t p : ball) {
        if (covered[p]) continue;
        ++count;
        for (std::size_t q : ball)
          if (d[p * n + q] <= r / 2) covered[q] = 1;
      }
      best = std::max(best, count);
    }
  return best;
}

std::vector<double> default_radii(const std::vector<double>& d, std::size_t n, int count) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (std::size_t k = 0; k < n * n; ++k)
    if (d[k] > 0) lo = std::min(lo, d[k]), hi = std::max(hi, d[k]);
  std::vector<double> radii;
  if (hi == 0) return radii;
  for (int i = 0; i < count; ++i)
    radii.push_back(count == 1 ? hi : lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return radii;
}

ApproxReport approx_inequality_check(const Splitting& sp, double delta, std::size_t samples, std::uint64_t seed) {
  const CuspedGraph& space = sp.space();
  ApproxReport rep;
  rep.bound = 26 * delta + 12;
  rep.max_excess = -std::numeric_limits<double>::infinity();
  if (space.max_depth() < 1) throw Error(ErrorKind::SampleExhausted, "no horoballs");
  std::vector<int> cosets;
  for (int c = 0; c < static_cast<int>(space.cosets().size()); ++c)
    if (space.cosets()[c].desc.peripheral == 0 && !space.on_sphere(sp.closest_point(c).q)) cosets.push_back(c);
  std::mt19937_64 rng(seed);
  for (std::size_t i = cosets.size(); i > 1; --i) std::swap(cosets[i - 1], cosets[rng() % i]);
  const auto& dist0 = sp.dist0();
  BfsWorkspace ws(space.graph());
  std::vector<std::int32_t> dq;
  std::size_t attempts = 0;
  for (std::size_t ci = 0; rep.samples < samples && !cosets.empty(); ++ci) {
    if (++attempts > 20 * samples) break;
    const int c = cosets[ci % cosets.size()];
    const CutPoint cp = sp.closest_point(c);
    const auto edge_path = sp.path_to(space.horoball_vertex(c, 0, 1));
    bfs(space.graph(), cp.q, dq);
    std::vector<Vertex> beyond;
    for (Vertex v = 0; v < space.cayley_size(); ++v) {
      if (dq[v] < 1 || dq[v] > 4 || space.on_sphere(v)) continue;
      auto p = sp.path_to(v);
      if (p.size() == edge_path.size() + 1 && std::equal(edge_path.begin(), edge_path.end(), p.begin())) beyond.push_back(v);
    }
    if (beyond.size() < 2) continue;
    Vertex a1 = beyond[rng() % beyond.size()], a2 = beyond[rng() % beyond.size()];
    if (a1 == a2) continue;
    if (space.geodesic(a1, a2).contaminated) {
      ++rep.contaminated_discarded;
      continue;
    }
    const std::int32_t d12 = ws.distance(a1, a2);
    const HalfInt at_base = gromov_from_distances(dist0[a1], dist0[a2], d12);
    const HalfInt at_q = gromov_from_distances(dq[a1], dq[a2], d12);
    const double gap = std::abs(at_base.value() - cp.dist - at_q.value());
    ++rep.samples;
    rep.max_excess = std::max(rep.max_excess, gap - rep.bound);
    if (gap > rep.bound) ++rep.violations;
  }
  if (rep.samples < samples) throw Error(ErrorKind::SampleExhausted, "not enough approx configurations");
  return rep;
}

SeparateReport separate_check(const BoundaryContext& ctx, std::size_t max_pairs) {
  SeparateReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  const CuspedGraph& space = ctx.splitting().space();
  BfsWorkspace ws(space.graph());
  const double delta = ctx.delta();
  for (std::size_t i = 0; i < ctx.size() && rep.triangles < max_pairs; ++i)
    for (std::size_t j = i + 1; j < ctx.size() && rep.triangles < max_pairs; ++j) {
      IdealTriangle tri;
      try {
        tri = ideal_internal_points(space, ctx.ray(i), ctx.ray(j), delta);
      } catch (const Error&) {
        continue;
      }
      ++rep.triangles;
      const int len = static_cast<int>(tri.line.size());
      for (int side : {-1, 1}) {
        const RayApprox& opposite = side > 0 ? ctx.ray(i) : ctx.ray(j);
        for (int k = 1;; ++k) {
          int idx = tri.z_index + side * k;
          if (idx < 0 || idx >= len) break;
          std::int32_t best = std::numeric_limits<std::int32_t>::max();
          for (Vertex v : opposite.path) best = std::min(best, ws.distance(tri.line[idx], v));
          ++rep.points;
          double margin = best - (k - 2 * delta);
          rep.min_margin = std::min(rep.min_margin, margin);
          if (margin < 0) ++rep.violations;
          if (best < k - 10 * delta) ++rep.working_violations;
        }
      }
    }
  return rep;
}

D01Report d01_check(const BoundaryContext& ctx) {
  D01Report rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  const CuspedGraph& space = ctx.splitting().space();
  auto entry = [&](const RayApprox& r, int coset) {
    for (int t = 0; t <= r.resolution(); ++t)
      if (in_coset(space, r.at(t), coset)) return static_cast<double>(t);
    return std::numeric_limits<double>::infinity();
  };
  for (std::size_t i = 0; i < ctx.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.size(); ++j) {
      const auto s = ctx.sequence(i, j);
      if (s.split <= 0 || s.split >= static_cast<int>(s.cuts.size())) continue;
      ++rep.configurations;
      const CutPoint& cm1 = s.cuts[s.split - 1];
      const CutPoint& c0 = s.cuts[s.split];
      const double m = ctx.product(i, j).value();
      if (entry(ctx.ray(j), c0.coset) < m || entry(ctx.ray(i), cm1.coset) < m) continue;
      ++rep.applicable;
      double margin = ctx.product(ctx.cut_point(c0.coset), ctx.cut_point(cm1.coset)).value() - (m - 9 * ctx.delta() - 4);
      rep.min_margin = std::min(rep.min_margin, margin);
      if (margin < 0) ++rep.violations;
    }
  return rep;
}

}  // namespace cusp
