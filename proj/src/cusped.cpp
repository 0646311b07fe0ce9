#include "cusp/cusped.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

namespace {

BaseGraph user_coset_base(const GroupModel& model, const std::vector<int>& members) {
  std::vector<int> pos(static_cast<std::size_t>(model.user_graph().vertices), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [u, v] : model.user_graph().edges)
    if (pos[u] >= 0 && pos[v] >= 0) e.emplace_back(pos[u], pos[v]);
  return BaseGraph::from_graph(Graph::from_edges(static_cast<Vertex>(members.size()), std::move(e)));
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

CuspedGraph CuspedGraph::build(const GroupModel& model, int radius, int depth, std::size_t budget) {
  if (radius < 0 || depth < 0) throw Error(ErrorKind::InvalidArgument, "radius and depth must be >= 0");
  CuspedGraph s;
  s.model_ = std::make_shared<const GroupModel>(model);
  s.radius_ = radius;
  s.depth_ = depth;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<BaseGraph> bases;
  if (model.is_group()) {
    s.ball_ = cayley_ball(model, radius, budget);
    s.cayley_n_ = static_cast<Vertex>(s.ball_.size());
    for (auto& e : s.ball_.edges) edges.emplace_back(e.u, e.v);
    for (int p = 0; p < static_cast<int>(model.peripherals().size()); ++p)
      for (auto& d : peripheral_cosets_in_ball(model, s.ball_, p)) {
        bases.push_back(BaseGraph::from_coords(d.coords));
        s.cosets_.push_back({std::move(d), 0});
      }
  } else {
    const auto& ug = model.user_graph();
    s.cayley_n_ = ug.vertices;
    edges = ug.edges;
    for (int p = 0; p < static_cast<int>(ug.cosets.size()); ++p) {
      CosetDescriptor d;
      d.peripheral = p;
      d.members = ug.cosets[p];
      std::sort(d.members.begin(), d.members.end());
      d.rep = d.members.empty() ? -1 : d.members.front();
      d.key = std::to_string(p);
      if (d.members.empty()) throw Error(ErrorKind::EmptyGraph, "empty coset");
      bases.push_back(user_coset_base(model, d.members));
      s.cosets_.push_back({std::move(d), 0});
    }
  }
  s.memberships_.assign(static_cast<std::size_t>(s.cayley_n_), {});
  Vertex next = s.cayley_n_;
  for (std::size_t c = 0; c < s.cosets_.size(); ++c) {
    auto& h = s.cosets_[c];
    h.first = next;
    const int m = h.m();
    if (static_cast<std::size_t>(next) + static_cast<std::size_t>(m) * depth > budget)
      throw Error(ErrorKind::ResourceLimit, "cusped space exceeds vertex budget");
    next += m * depth;
    for (int i = 0; i < m; ++i) s.memberships_[h.desc.members[i]].push_back(static_cast<int>(c));
    for (int l = 1; l <= depth; ++l)
      for (int i = 0; i < m; ++i) {
        s.owner_.push_back(static_cast<int>(c));
        s.level_.push_back(l);
        s.member_.push_back(i);
      }
    const BaseGraph& b = bases[c];
    for (int l = 0; l <= depth; ++l) {
      const std::int64_t span = std::int64_t{1} << std::min(l, 40);
      for (int i = 0; i < m; ++i) {
        Vertex vi = l == 0 ? h.desc.members[i] : h.first + (l - 1) * m + i;
        for (int j = i + 1; j < m; ++j) {
          std::int32_t d = b.d(i, j);
          if (d <= 0 || (l == 0 ? d != 1 : d > span)) continue;
          Vertex vj = l == 0 ? h.desc.members[j] : h.first + (l - 1) * m + j;
          edges.emplace_back(vi, vj);
        }
        if (l < depth) edges.emplace_back(vi, h.first + l * m + i);
      }
    }
  }
  s.graph_ = Graph::from_edges(next, std::move(edges));
  auto comp = components(s.graph_);
  for (std::int32_t c : comp)
    if (c != 0) throw Error(ErrorKind::Disconnected, "cusped space is not connected");
  return s;
}

Vertex CuspedGraph::anchor(Vertex v) const {
  if (is_cayley(v)) return v;
  const auto& h = cosets_[owner_[v - cayley_n_]];
  return h.desc.members[member_[v - cayley_n_]];
}

int CuspedGraph::member_index(Vertex v) const { return is_cayley(v) ? -1 : member_[v - cayley_n_]; }

Vertex CuspedGraph::horoball_vertex(int coset, int member, int level) const {
  const auto& h = cosets_.at(coset);
  if (member < 0 || member >= h.m() || level < 0 || level > depth_)
    throw Error(ErrorKind::UnknownVertex, "horoball coordinates out of range");
  return level == 0 ? h.desc.members[member] : h.first + (level - 1) * h.m() + member;
}

std::vector<Vertex> CuspedGraph::horoball_vertices(int coset) const {
  const auto& h = cosets_.at(coset);
  std::vector<Vertex> out(h.desc.members.begin(), h.desc.members.end());
  for (int i = 0; i < h.m() * depth_; ++i) out.push_back(h.first + i);
  return out;
}

int CuspedGraph::find_coset(int peripheral, const std::string& key) const {
  for (std::size_t c = 0; c < cosets_.size(); ++c)
    if (cosets_[c].desc.peripheral == peripheral && cosets_[c].desc.key == key) return static_cast<int>(c);
  return -1;
}

int CuspedGraph::anchor_length(Vertex v) const {
  if (!model_->is_group()) return 0;
  return ball_.length[anchor(v)];
}

bool CuspedGraph::on_sphere(Vertex v) const { return model_->is_group() && anchor_length(v) >= radius_; }

bool CuspedGraph::touches_sphere(const std::vector<Vertex>& path) const {
  return std::any_of(path.begin(), path.end(), [&](Vertex v) { return on_sphere(v); });
}

std::string CuspedGraph::label(Vertex v) const {
  if (v < 0 || v >= size()) throw Error(ErrorKind::UnknownVertex, "vertex id out of range");
  Vertex a = anchor(v);
  std::string base;
  if (model_->is_group()) {
    base = ball_.words[a].empty() ? "e" : model_->str(ball_.words[a]);
  } else {
    base = "v" + std::to_string(a);
  }
  if (is_cayley(v)) return base;
  std::string s = base + "@" + std::to_string(depth(v));
  if (model_->peripherals().size() > 1) s += "/" + std::to_string(cosets_[coset_of(v)].desc.peripheral);
  return s;
}

Vertex CuspedGraph::parse_vertex(const std::string& text) const {
  std::string body = text;
  int level = 0, peripheral = -1;
  auto at = body.find('@');
  if (at != std::string::npos) {
    std::string rest = body.substr(at + 1);
    body = body.substr(0, at);
    auto slash = rest.find('/');
    try {
      if (slash != std::string::npos) {
        peripheral = std::stoi(rest.substr(slash + 1));
        rest = rest.substr(0, slash);
      }
      level = std::stoi(rest);
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownVertex, "bad vertex label '" + text + "'");
    }
  }
  Vertex a = -1;
  if (model_->is_group()) {
    Word w;
    try {
      w = model_->word(body == "e" ? "" : body);
    } catch (const Error&) {
      throw Error(ErrorKind::UnknownVertex, "bad word in '" + text + "'");
    }
    a = ball_.find(*model_, w);
  } else if (body.size() > 1 && body[0] == 'v') {
    try {
      a = std::stoi(body.substr(1));
    } catch (const std::exception&) {
      a = -1;
    }
    if (a >= cayley_n_) a = -1;
  }
  if (a < 0) throw Error(ErrorKind::UnknownVertex, "vertex '" + text + "' is not in the space");
  if (level == 0) return a;
  for (int c : memberships_[a]) {
    const auto& h = cosets_[c];
    if (peripheral >= 0 && h.desc.peripheral != peripheral) continue;
    auto it = std::find(h.desc.members.begin(), h.desc.members.end(), a);
    return horoball_vertex(c, static_cast<int>(it - h.desc.members.begin()), level);
  }
  throw Error(ErrorKind::UnknownVertex, "vertex '" + text + "' lies in no horoball");
}

Vertex CuspedGraph::translate(const Word& g, Vertex v) const {
  if (!model_->is_group()) throw Error(ErrorKind::UnsupportedFamily, "translation needs a group model");
  Vertex a = ball_.find(*model_, mul(g, ball_.words[anchor(v)]));
  if (a < 0 || is_cayley(v)) return a;
  int per = cosets_[coset_of(v)].desc.peripheral;
  for (int c : memberships_[a]) {
    const auto& h = cosets_[c];
    if (h.desc.peripheral != per) continue;
    auto it = std::find(h.desc.members.begin(), h.desc.members.end(), a);
    return horoball_vertex(c, static_cast<int>(it - h.desc.members.begin()), depth(v));
  }
  return -1;
}

DistanceResult CuspedGraph::distance(Vertex x, Vertex y) const {
  GeodesicPath g = geodesic(x, y);
  return {g.length, g.contaminated};
}

GeodesicPath CuspedGraph::geodesic(Vertex x, Vertex y) const {
  if (x < 0 || y < 0 || x >= size() || y >= size()) throw Error(ErrorKind::UnknownVertex, "vertex id out of range");
  return geodesic(x, bfs(graph_, y));
}

GeodesicPath CuspedGraph::geodesic(Vertex x, const std::vector<std::int32_t>& dist_to_y) const {
  GeodesicPath g;
  g.vertices = canonical_path(graph_, dist_to_y, x);
  g.length = static_cast<std::int32_t>(g.vertices.size()) - 1;
  g.contaminated = touches_sphere(g.vertices);
  return g;
}

std::uint64_t CuspedGraph::graph_hash() const {
  std::uint64_t h = fnv1a("graph");
  for (Vertex u = 0; u < graph_.size(); ++u) {
    h = fnv1a(std::string_view(reinterpret_cast<const char*>(&u), sizeof u), h);
    for (Vertex v : graph_.neighbors(u)) h = fnv1a(std::string_view(reinterpret_cast<const char*>(&v), sizeof v), h);
  }
  return h;
}

void CuspedGraph::write_cache(std::ostream& out) const {
  out << "version " << kBuildVersion << "\n";
  out << "model_hash " << hex64(model_->hash()) << "\n";
  out << "radius " << radius_ << "\n";
  out << "depth " << depth_ << "\n";
  out << "graph_hash " << hex64(graph_hash()) << "\n";
  out << "vertices " << size() << "\n";
  out << "edges " << graph_.edge_count() << "\n";
  out << "# id,kind,coset,depth,word\n";
  for (Vertex v = 0; v < size(); ++v) {
    Vertex a = anchor(v);
    std::string word = model_->is_group() ? model_->str(ball_.words[a]) : "v" + std::to_string(a);
    out << v << ',' << (is_cayley(v) ? 'C' : 'H') << ',' << coset_of(v) << ',' << depth(v) << ',' << word << "\n";
  }
  out << "# source,target\n";
  for (auto [u, v] : graph_.edge_list()) out << u << ',' << v << "\n";
}

CacheHeader read_cache_header(std::istream& in) {
  CacheHeader h;
  std::string line;
  auto field = [&](const char* name) {
    if (!std::getline(in, line)) throw Error(ErrorKind::StaleCache, "truncated cache header");
    std::istringstream ls(line);
    std::string k, v;
    ls >> k >> v;
    if (k != name) throw Error(ErrorKind::StaleCache, std::string("cache header missing ") + name);
    return v;
  };
  h.version = field("version");
  h.model_hash = std::stoull(field("model_hash"), nullptr, 16);
  h.radius = std::stoi(field("radius"));
  h.depth = std::stoi(field("depth"));
  h.graph_hash = std::stoull(field("graph_hash"), nullptr, 16);
  h.vertices = std::stoull(field("vertices"));
  h.edges = std::stoull(field("edges"));
  return h;
}

CuspedGraph load_cached(std::istream& cache, const GroupModel& model) {
  CacheHeader h = read_cache_header(cache);
  if (h.version != kBuildVersion) throw Error(ErrorKind::StaleCache, "cache version " + h.version);
  if (h.model_hash != model.hash()) throw Error(ErrorKind::StaleCache, "presentation hash does not match cache");
  CuspedGraph s = CuspedGraph::build(model, h.radius, h.depth);
  if (s.graph_hash() != h.graph_hash || static_cast<std::size_t>(s.size()) != h.vertices ||
      s.graph().edge_count() != h.edges)
    throw Error(ErrorKind::StaleCache, "graph differs from cache");
  return s;
}

}  // namespace cusp
