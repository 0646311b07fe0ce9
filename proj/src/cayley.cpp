#include "cusp/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cusp/error.hpp"

namespace cusp {

std::int32_t CayleyBall::find(const GroupModel& m, const Word& w) const {
  auto it = index.find(m.key(w));
  return it == index.end() ? -1 : it->second;
}

CayleyBall cayley_ball(const GroupModel& model, int radius, std::size_t budget) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "negative radius");
  if (!model.is_group()) throw Error(ErrorKind::UnsupportedFamily, "user-graph has no Cayley ball");
  CayleyBall b;
  b.radius = radius;
  auto add = [&](Word w, std::string k, int len) {
    if (b.words.size() >= budget) throw Error(ErrorKind::ResourceLimit, "Cayley ball exceeds vertex budget");
    auto id = static_cast<std::int32_t>(b.words.size());
    b.index.emplace(k, id);
    b.words.push_back(std::move(w));
    b.keys.push_back(std::move(k));
    b.length.push_back(len);
    return id;
  };
  add({}, model.key({}), 0);
  const int letters = model.alphabet().letters();
  for (std::size_t head = 0; head < b.words.size(); ++head) {
    const auto u = static_cast<std::int32_t>(head);
    for (int l = 0; l < letters; ++l) {
      Word w = b.words[head];
      w.push_back(static_cast<Letter>(l));
      std::string k = model.key(w);
      auto it = b.index.find(k);
      std::int32_t v;
      if (it != b.index.end()) {
        v = it->second;
      } else {
        if (b.length[head] >= radius) continue;
        v = add(std::move(w), std::move(k), b.length[head] + 1);
      }
      // keep each undirected edge once, from its positive label or the smaller endpoint for involutions
      if (!is_inverse(static_cast<Letter>(l))) b.edges.push_back({u, v, static_cast<Letter>(l)});
    }
  }
  std::sort(b.edges.begin(), b.edges.end(), [](const CayleyEdge& x, const CayleyEdge& y) {
    return std::tie(x.u, x.v, x.label) < std::tie(y.u, y.v, y.label);
  });
  return b;
}

std::vector<CosetDescriptor> peripheral_cosets_in_ball(const GroupModel& model, const CayleyBall& ball, int peripheral) {
  std::vector<CosetDescriptor> out;
  std::unordered_map<std::string, std::size_t> where;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    CosetCoord c = model.coset_of(ball.words[i], peripheral);
    auto it = where.find(c.key);
    if (it == where.end()) {
      it = where.emplace(c.key, out.size()).first;
      CosetDescriptor d;
      d.peripheral = peripheral;
      d.key = c.key;
      d.rep = static_cast<std::int32_t>(i);  // vertices come in shortlex order
      out.push_back(std::move(d));
    }
    out[it->second].members.push_back(static_cast<std::int32_t>(i));
    out[it->second].coords.push_back(std::move(c.coord));
  }
  for (auto& d : out) {
    std::vector<std::size_t> order(d.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d.coords[a] < d.coords[b]; });
    std::vector<std::int32_t> m;
    std::vector<std::vector<long>> c;
    for (auto o : order) {
      m.push_back(d.members[o]);
      c.push_back(d.coords[o]);
    }
    d.members = std::move(m);
    d.coords = std::move(c);
  }
  return out;
}

}  // namespace cusp
