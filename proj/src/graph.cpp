#include "cusp/graph.hpp"

#include <algorithm>

#include "cusp/error.hpp"

namespace cusp {

Graph Graph::from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  Graph g;
  std::vector<std::pair<Vertex, Vertex>> dir;
  dir.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (u == v) continue;
    dir.emplace_back(u, v);
    dir.emplace_back(v, u);
  }
  edges.clear();
  edges.shrink_to_fit();
  std::sort(dir.begin(), dir.end());
  dir.erase(std::unique(dir.begin(), dir.end()), dir.end());
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto& e : dir) ++g.offsets_[e.first + 1];
  for (Vertex i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(dir.size());
  for (std::size_t i = 0; i < dir.size(); ++i) g.adj_[i] = dir[i].second;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void bfs(const Graph& g, Vertex src, std::vector<std::int32_t>& dist, const std::vector<std::uint8_t>* blocked) {
  dist.assign(static_cast<std::size_t>(g.size()), kUnreached);
  if (blocked && (*blocked)[src]) return;
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.size()));
  queue.push_back(src);
  dist[src] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex u = queue[h];
    std::int32_t du = dist[u] + 1;
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] != kUnreached) continue;
      if (blocked && (*blocked)[v]) continue;
      dist[v] = du;
      queue.push_back(v);
    }
  }
}

std::vector<std::int32_t> bfs(const Graph& g, Vertex src) {
  std::vector<std::int32_t> d;
  bfs(g, src, d);
  return d;
}

void multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources, std::vector<std::int32_t>& dist) {
  dist.assign(static_cast<std::size_t>(g.size()), kUnreached);
  std::vector<Vertex> queue;
  for (Vertex s : sources)
    if (dist[s] == kUnreached) {
      dist[s] = 0;
      queue.push_back(s);
    }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex u = queue[h];
    for (Vertex v : g.neighbors(u))
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
}

BfsWorkspace::BfsWorkspace(const Graph& g) : g_(&g) {
  for (int s = 0; s < 2; ++s) {
    stamp_[s].assign(static_cast<std::size_t>(g.size()), 0);
    dist_[s].assign(static_cast<std::size_t>(g.size()), 0);
  }
}

std::int32_t BfsWorkspace::distance(Vertex s, Vertex t) {
  if (s == t) return 0;
  if (++epoch_ == 0) {
    for (auto& st : stamp_) std::fill(st.begin(), st.end(), 0);
    epoch_ = 1;
  }
  Vertex ends[2] = {s, t};
  for (int side = 0; side < 2; ++side) {
    frontier_[side].assign(1, ends[side]);
    stamp_[side][ends[side]] = epoch_;
    dist_[side][ends[side]] = 0;
  }
  std::int32_t radius[2] = {0, 0};
  while (!frontier_[0].empty() && !frontier_[1].empty()) {
    int side = frontier_[0].size() <= frontier_[1].size() ? 0 : 1;
    int other = 1 - side;
    next_.clear();
    std::int32_t best = -1;
    for (Vertex u : frontier_[side]) {
      for (Vertex v : g_->neighbors(u)) {
        if (stamp_[other][v] == epoch_) {
          std::int32_t cand = dist_[side][u] + 1 + dist_[other][v];
          if (best < 0 || cand < best) best = cand;
        }
        if (stamp_[side][v] == epoch_) continue;
        stamp_[side][v] = epoch_;
        dist_[side][v] = dist_[side][u] + 1;
        next_.push_back(v);
      }
    }
    ++radius[side];
    if (best >= 0) return best;
    frontier_[side].swap(next_);
  }
  throw Error(ErrorKind::Disconnected, "vertices in different components");
}

std::vector<Vertex> canonical_path(const Graph& g, const std::vector<std::int32_t>& dist_to, Vertex from) {
  if (dist_to[from] == kUnreached) throw Error(ErrorKind::Disconnected, "no path");
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (dist_to[cur] > 0) {
    Vertex next = -1;
    for (Vertex v : g.neighbors(cur))
      if (dist_to[v] == dist_to[cur] - 1) {
        next = v;
        break;
      }
    cur = next;
    path.push_back(cur);
  }
  return path;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), index[w]);
  return Graph::from_edges(static_cast<Vertex>(keep.size()), std::move(edges));
}

std::vector<std::int32_t> components(const Graph& g, const std::vector<std::uint8_t>* blocked) {
  std::vector<std::int32_t> label(static_cast<std::size_t>(g.size()), -1);
  std::int32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (label[s] != -1 || (blocked && (*blocked)[s])) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (label[v] == -1 && !(blocked && (*blocked)[v])) {
          label[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return label;
}

}  // namespace cusp
