#include "cusp/horoball.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cusp/error.hpp"

namespace cusp {

BaseGraph BaseGraph::from_graph(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorKind::EmptyGraph, "empty base graph");
  BaseGraph b;
  b.n_ = g.size();
  b.dist_.resize(static_cast<std::size_t>(b.n_) * b.n_);
  std::vector<std::int32_t> row;
  for (Vertex s = 0; s < g.size(); ++s) {
    bfs(g, s, row);
    std::copy(row.begin(), row.end(), b.dist_.begin() + static_cast<long>(s) * b.n_);
  }
  return b;
}

BaseGraph BaseGraph::path(int n) {
  if (n <= 0) throw Error(ErrorKind::EmptyGraph, "empty base graph");
  std::vector<std::vector<long>> c;
  for (int i = 0; i < n; ++i) c.push_back({i});
  return from_coords(c);
}

BaseGraph BaseGraph::single() { return path(1); }

BaseGraph BaseGraph::from_coords(const std::vector<std::vector<long>>& coords) {
  if (coords.empty()) throw Error(ErrorKind::EmptyGraph, "empty base graph");
  BaseGraph b;
  b.n_ = static_cast<int>(coords.size());
  b.dist_.resize(static_cast<std::size_t>(b.n_) * b.n_);
  for (int u = 0; u < b.n_; ++u)
    for (int v = 0; v < b.n_; ++v) {
      long s = 0;
      for (std::size_t i = 0; i < coords[u].size(); ++i) s += std::labs(coords[u][i] - coords[v][i]);
      b.dist_[static_cast<std::size_t>(u) * b.n_ + v] = static_cast<std::int32_t>(s);
    }
  for (int u = 0; u < b.n_ && b.geodesic_; ++u)
    for (int v = 0; v < b.n_ && b.geodesic_; ++v) {
      if (b.d(u, v) < 2) continue;
      bool step = false;
      for (int w = 0; w < b.n_ && !step; ++w) step = b.d(u, w) == 1 && b.d(w, v) == b.d(u, v) - 1;
      b.geodesic_ = step;
    }
  return b;
}

BaseGraph BaseGraph::read_csv(std::istream& in) {
  std::string line;
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex n = 0;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.find_first_of("0123456789") != 0) continue;
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u >> v)) throw Error(ErrorKind::ParseError, "bad edge row: " + line);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    n = std::max<Vertex>(n, static_cast<Vertex>(std::max(u, v) + 1));
  }
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "no edges");
  return from_graph(Graph::from_edges(n, std::move(edges)));
}

HoroballGraph build_horoball(const BaseGraph& base, int depth, std::size_t budget) {
  if (base.size() == 0) throw Error(ErrorKind::EmptyGraph, "empty base graph");
  if (depth < 0) throw Error(ErrorKind::InvalidArgument, "negative depth");
  const int n = base.size();
  if (static_cast<std::size_t>(n) * (depth + 1) > budget) throw Error(ErrorKind::ResourceLimit, "horoball too large");
  HoroballGraph h;
  h.base_ = base;
  h.depth_ = depth;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int k = 0; k <= depth; ++k) {
    const std::int64_t span = std::int64_t{1} << std::min(k, 40);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        std::int32_t d = base.d(u, v);
        if (d > 0 && d <= span) edges.emplace_back(h.id(u, k), h.id(v, k));
      }
      if (k < depth) edges.emplace_back(h.id(u, k), h.id(u, k + 1));
    }
    if (edges.size() > budget) throw Error(ErrorKind::ResourceLimit, "horoball too large");
  }
  h.graph_ = Graph::from_edges(static_cast<Vertex>(n * (depth + 1)), std::move(edges));
  return h;
}

std::size_t HoroballGraph::horizontal_edges(int level) const {
  std::size_t c = 0;
  for (int u = 0; u < base_.size(); ++u)
    for (Vertex w : graph_.neighbors(id(u, level)))
      if (depth(w) == level && at(w).v > u) ++c;
  return c;
}

void HoroballGraph::write_csv(std::ostream& out) const {
  out << "source,target\n";
  for (auto [u, v] : graph_.edge_list()) {
    auto a = at(u), b = at(v);
    out << a.v << ':' << a.level << ',' << b.v << ':' << b.level << '\n';
  }
}

int default_depth(const BaseGraph& base) {
  std::int32_t diam = 0;
  for (int u = 0; u < base.size(); ++u)
    for (int v = 0; v < base.size(); ++v) diam = std::max(diam, base.d(u, v));
  int lg = 0;
  while ((std::int64_t{1} << lg) < diam) ++lg;
  return lg + 1;
}

NormalForm normal_form_shape(std::int32_t d, int k1, int k2) {
  if (d < 0) throw Error(ErrorKind::Disconnected, "base points in different components");
  NormalForm best;
  best.length = -1;
  const int top = std::max(k1, k2) + 34;
  for (int l = 0; l <= top; ++l) {
    std::int64_t span = std::int64_t{1} << l;
    std::int64_t h = (d + span - 1) / span;
    if (h > 3) continue;
    int cost = std::abs(l - k1) + std::abs(l - k2) + static_cast<int>(h);
    if (best.length < 0 || cost < best.length) {
      best.apex = l;
      best.horizontal = static_cast<int>(h);
      best.length = cost;
    }
  }
  return best;
}

HoroDistance horoball_distance(const HoroballGraph& h, Vertex x, Vertex y) {
  HoroDistance r;
  std::vector<std::int32_t> dy;
  bfs(h.graph(), y, dy);
  if (dy[x] == kUnreached) throw Error(ErrorKind::Disconnected, "horoball vertices not connected");
  r.distance = dy[x];
  try {
    NormalForm nf = normal_form_geodesic(h, x, y);
    if (nf.length == r.distance) {
      r.has_normal_form = true;
      r.geodesic = std::move(nf.path);
    }
  } catch (const Error&) {
  }
  if (!r.has_normal_form) r.geodesic = canonical_path(h.graph(), dy, x);
  return r;
}

NormalForm normal_form_geodesic(const HoroballGraph& h, Vertex x, Vertex y) {
  const BaseGraph& b = h.base();
  auto px = h.at(x), py = h.at(y);
  NormalForm nf = normal_form_shape(b.d(px.v, py.v), px.level, py.level);
  if (nf.apex > h.max_depth())
    throw Error(ErrorKind::DepthClipped, "normal form apex " + std::to_string(nf.apex) + " exceeds depth " +
                                             std::to_string(h.max_depth()));
  if (!b.geodesic()) throw Error(ErrorKind::NormalFormUnavailable, "base metric is not geodesic");
  const int step = px.level <= nf.apex ? 1 : -1;
  for (int k = px.level; k != nf.apex; k += step) nf.path.push_back(h.id(px.v, k));
  const std::int64_t span = std::int64_t{1} << nf.apex;
  int cur = px.v;
  nf.path.push_back(h.id(cur, nf.apex));
  while (cur != py.v) {
    std::int32_t rem = b.d(cur, py.v);
    auto hop = static_cast<std::int32_t>(std::min<std::int64_t>(span, rem));
    int next = -1;
    for (int u = 0; u < b.size() && next < 0; ++u)
      if (b.d(cur, u) == hop && b.d(u, py.v) == rem - hop) next = u;
    cur = next;
    nf.path.push_back(h.id(cur, nf.apex));
  }
  const int down = nf.apex <= py.level ? 1 : -1;
  for (int k = nf.apex + down; k != py.level + down; k += down) nf.path.push_back(h.id(py.v, k));
  return nf;
}

std::vector<std::vector<Vertex>> enumerate_geodesics(const Graph& g, Vertex x, Vertex y, std::size_t cap,
                                                     bool* truncated) {
  std::vector<std::int32_t> dy;
  bfs(g, y, dy);
  if (dy[x] == kUnreached) throw Error(ErrorKind::Disconnected, "no path");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{x};
  bool cut = false;
  // iterative DFS over the geodesic DAG
  std::vector<std::size_t> pos{0};
  while (!path.empty()) {
    Vertex u = path.back();
    if (u == y) {
      if (out.size() >= cap) {
        cut = true;
        break;
      }
      out.push_back(path);
      path.pop_back();
      pos.pop_back();
      continue;
    }
    auto nb = g.neighbors(u);
    std::size_t& i = pos.back();
    while (i < nb.size() && dy[nb[i]] != dy[u] - 1) ++i;
    if (i == nb.size()) {
      path.pop_back();
      pos.pop_back();
      continue;
    }
    Vertex v = nb[i++];
    path.push_back(v);
    pos.push_back(0);
  }
  if (truncated) *truncated = cut;
  return out;
}

HausdorffReport hausdorff_check(const HoroballGraph& h, Vertex x, Vertex y, std::size_t cap, bool throw_on_cap) {
  NormalForm nf = normal_form_geodesic(h, x, y);
  std::vector<std::vector<std::int32_t>> rows(nf.path.size());
  for (std::size_t i = 0; i < nf.path.size(); ++i) bfs(h.graph(), nf.path[i], rows[i]);
  bool truncated = false;
  auto geos = enumerate_geodesics(h.graph(), x, y, cap, &truncated);
  HausdorffReport rep;
  rep.geodesics = geos.size();
  rep.partial = truncated;
  for (const auto& g : geos) {
    int hd = 0;
    for (Vertex v : g) {
      std::int32_t m = INT32_MAX;
      for (auto& r : rows) m = std::min(m, r[v]);
      hd = std::max(hd, m);
    }
    for (auto& r : rows) {
      std::int32_t m = INT32_MAX;
      for (Vertex v : g) m = std::min(m, r[v]);
      hd = std::max(hd, m);
    }
    rep.value = std::max(rep.value, hd);
  }
  if (truncated && throw_on_cap)
    throw Error(ErrorKind::EnumerationCap, "more than " + std::to_string(cap) + " geodesics; partial max " +
                                               std::to_string(rep.value));
  return rep;
}

}  // namespace cusp
