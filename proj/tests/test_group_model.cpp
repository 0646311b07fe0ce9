#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "cusp/cayley.hpp"
#include "cusp/error.hpp"
#include "cusp/group_model.hpp"

using namespace cusp;

namespace {

Word random_word(std::mt19937_64& rng, int gens, int len) {
  Word w;
  std::uniform_int_distribution<int> d(0, 2 * gens - 1);
  for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(d(rng)));
  return w;
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// G = <a, b, t | t^-1 a t = b> is free on a, t; substitute b = t^-1 a t.
Word hnn_to_free(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (gen_of(l) == 1) {
      Word s = {letter(2, true), letter(0, is_inverse(l)), letter(2, false)};
      out.insert(out.end(), s.begin(), s.end());
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(out);
}

GroupModel hnn_fixture() {
  return GroupModel::parse(
      "family = hnn\ngenerators = a b t\nstable = t\nhnn_in = a\nhnn_out = b\nperipheral P = a\n");
}

}  // namespace

TEST_CASE("normal form examples") {
  auto f = GroupModel::free_group(2);
  CHECK(f.str(f.normal_form(f.word("a a^-1 b"))) == "b");
  auto s = GroupModel::surface(2);
  CHECK(s.normal_form(s.word("a b a^-1 b^-1 c d c^-1 d^-1")).empty());
  auto z = GroupModel::free_abelian(2);
  CHECK(z.str(z.normal_form(z.word("b a b"))) == "a b b");
  CHECK_THROWS_AS(f.normal_form(Word{9}), Error);
  CHECK_THROWS_AS(f.word("a q"), Error);
}

TEST_CASE("free-abelian normal form is the shortlex least geodesic (enumeration oracle)") {
  auto z = GroupModel::free_abelian(2);
  // all words of length <= 3 grouped by exponent vector
  std::map<std::pair<int, int>, Word> best;
  std::vector<Word> words{Word{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<Word> next;
    for (auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (Letter l = 0; l < 4; ++l) {
          Word v = w;
          v.push_back(l);
          next.push_back(v);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (auto& w : words) {
    int ea = 0, eb = 0;
    for (Letter l : w) (gen_of(l) == 0 ? ea : eb) += is_inverse(l) ? -1 : 1;
    auto key = std::make_pair(ea, eb);
    auto it = best.find(key);
    if (it == best.end() || shortlex_less(w, it->second)) best[key] = w;
  }
  for (auto& w : words) {
    Word nf = z.normal_form(w);
    int ea = 0, eb = 0;
    for (Letter l : w) (gen_of(l) == 0 ? ea : eb) += is_inverse(l) ? -1 : 1;
    CHECK(nf == best[{ea, eb}]);
  }
}

TEST_CASE("free group oracle agrees with free reduction on 10^4 random words") {
  auto f = GroupModel::free_group(2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    Word w = random_word(rng, 2, i % 30);
    Word nf = f.normal_form(w);
    CHECK(nf == free_reduce(w));
    CHECK(f.normal_form(nf) == nf);
  }
}

TEST_CASE("surface amalgam keys agree with Dehn's algorithm") {
  auto s = GroupModel::surface(2);
  const Word rel = s.relators()[0];
  std::mt19937_64 rng(5);
  int trivial = 0;
  for (int i = 0; i < 3000; ++i) {
    Word w = random_word(rng, 4, 2 + i % 12);
    if (i % 3 == 0) {
      // conjugate of a relator power inserted: trivial words
      Word u = random_word(rng, 4, i % 5);
      Word r = i % 2 ? rel : inverse(rel);
      w = cat({u, r, inverse(u)});
    } else if (i % 3 == 1) {
      Word u = random_word(rng, 4, 3);
      Word v = random_word(rng, 4, 3);
      // w and w' differ by a relator insertion
      Word a = cat({u, v});
      Word b = cat({u, rel, v});
      CHECK(s.key(a) == s.key(b));
    }
    bool dehn_trivial = s.dehn_reduce(w).empty();
    bool key_trivial = s.key(w) == s.key({});
    CHECK(dehn_trivial == key_trivial);
    trivial += key_trivial;
  }
  CHECK(trivial >= 1000);
}

TEST_CASE("surface key distinguishes elements like Dehn on pairs") {
  auto s = GroupModel::surface(2);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    Word u = random_word(rng, 4, 1 + i % 6);
    Word v = random_word(rng, 4, 1 + (i / 7) % 6);
    if (i % 4 == 0) v = cat({u, s.relators()[0]});
    bool same = s.dehn_reduce(cat({u, inverse(v)})).empty();
    CHECK(same == s.equal(u, v));
  }
}

TEST_CASE("surface normal form is a geodesic representative and idempotent") {
  auto s = GroupModel::surface(2);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    Word w = random_word(rng, 4, 1 + i % 5);
    Word nf = s.normal_form(w);
    CHECK(s.equal(nf, w));
    CHECK(s.normal_form(nf) == nf);
    CHECK(nf.size() <= free_reduce(w).size());
  }
  CHECK(s.normal_form(s.word("a b a^-1 b^-1")).size() == 4);
}

TEST_CASE("HNN Britton keys agree with the free group on a, t") {
  auto h = hnn_fixture();
  CHECK(h.equal(h.word("t^-1 a t"), h.word("b")));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 4000; ++i) {
    Word u = random_word(rng, 3, 1 + i % 9);
    Word v = random_word(rng, 3, 1 + (i / 3) % 9);
    if (i % 5 == 0) v = cat({u, h.relators()[0]});
    bool same = hnn_to_free(u) == hnn_to_free(v);
    CHECK(same == h.equal(u, v));
  }
}

TEST_CASE("general amalgam keys respect the relator") {
  auto m = GroupModel::parse(
      "family = amalgam\ngenerators = a b\nfactor_a = a\nfactor_b = b\nedge_a = a a\nedge_b = b b b\n");
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    Word u = random_word(rng, 2, i % 6), v = random_word(rng, 2, i % 5);
    CHECK(m.key(cat({u, v})) == m.key(cat({u, m.relators()[0], v})));
    CHECK(m.key(cat({u, inverse(u)})) == m.key({}));
  }
  CHECK(m.equal(m.word("a a b"), m.word("b b b b")));
  CHECK_FALSE(m.equal(m.word("a"), m.word("b")));
}

TEST_CASE("cayley ball counts") {
  auto f = GroupModel::free_group(2);
  auto b1 = cayley_ball(f, 1);
  CHECK(b1.size() == 5);
  CHECK(b1.edges.size() == 4);
  long p = 1;
  for (int r = 0; r <= 6; ++r) {
    CHECK(cayley_ball(f, r).size() == static_cast<size_t>(1 + 2 * (p - 1)));
    p *= 3;
  }
  auto z = GroupModel::free_abelian(2);
  int lattice = 0;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) lattice += std::abs(x) + std::abs(y) <= 2;
  CHECK(cayley_ball(z, 2).size() == static_cast<size_t>(lattice));
  CHECK(lattice == 13);
  CHECK_THROWS_AS(cayley_ball(f, 3, 20), Error);
}

TEST_CASE("surface ball matches Dehn-based enumeration") {
  auto s = GroupModel::surface(2);
  auto ball = cayley_ball(s, 3);
  // brute force: distinct elements among reduced words of length <= 3 under Dehn equality
  std::vector<Word> reps;
  std::vector<Word> layer{Word{}};
  reps.push_back({});
  for (int len = 1; len <= 3; ++len) {
    std::vector<Word> next;
    for (auto& w : layer)
      for (Letter l = 0; l < 8; ++l) {
        if (!w.empty() && w.back() == inv(l)) continue;
        Word v = w;
        v.push_back(l);
        next.push_back(v);
        bool seen = false;
        for (auto& r : reps)
          if (s.dehn_reduce(cat({v, inverse(r)})).empty()) {
            seen = true;
            break;
          }
        if (!seen) reps.push_back(v);
      }
    layer = next;
  }
  CHECK(ball.size() == reps.size());
  std::vector<int> spheres(4, 0);
  for (auto l : ball.length) ++spheres[l];
  CHECK(spheres[0] == 1);
  CHECK(spheres[1] == 8);
  CHECK(spheres[2] == 56);
}

TEST_CASE("ball labels are shortlex least geodesics") {
  auto f = GroupModel::free_group(2);
  auto ball = cayley_ball(f, 4);
  for (size_t i = 0; i < ball.size(); ++i) {
    CHECK(ball.words[i] == f.normal_form(ball.words[i]));
    CHECK(static_cast<int>(ball.words[i].size()) == ball.length[i]);
  }
  auto s = GroupModel::surface(2);
  auto sb = cayley_ball(s, 2);
  for (size_t i = 0; i < sb.size(); ++i) CHECK(s.normal_form(sb.words[i]) == sb.words[i]);
}

TEST_CASE("peripheral cosets in a ball") {
  auto f = GroupModel::free_group(2);
  f.add_peripheral("P", "a");
  auto b0 = cayley_ball(f, 0);
  auto c0 = peripheral_cosets_in_ball(f, b0, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].members.size() == 1);

  auto ball = cayley_ball(f, 3);
  auto cosets = peripheral_cosets_in_ball(f, ball, 0);
  // brute force: u ~ v iff u^-1 v is a power of a
  auto same = [&](int u, int v) {
    Word w = free_reduce([&] {
      Word c = inverse(ball.words[u]);
      c.insert(c.end(), ball.words[v].begin(), ball.words[v].end());
      return c;
    }());
    for (Letter l : w)
      if (gen_of(l) != 0) return false;
    return true;
  };
  std::vector<int> cls(ball.size(), -1);
  for (size_t c = 0; c < cosets.size(); ++c)
    for (auto m : cosets[c].members) cls[m] = static_cast<int>(c);
  for (size_t u = 0; u < ball.size(); ++u)
    for (size_t v = 0; v < ball.size(); ++v) CHECK((cls[u] == cls[v]) == same(static_cast<int>(u), static_cast<int>(v)));
  // identity coset is {a^-3 .. a^3}
  int id = cls[0];
  CHECK(cosets[id].members.size() == 7);
  CHECK(cosets[id].coords.front() == std::vector<long>{-3});
  CHECK(cosets[id].coords.back() == std::vector<long>{3});
  for (auto& c : cosets) {
    Word rep = ball.words[c.rep];
    CHECK((rep.empty() || gen_of(rep.front()) != 0 || rep.size() > 0));
    for (auto m : c.members) CHECK(!shortlex_less(ball.words[m], rep));
  }
}

TEST_CASE("surface identity coset contains the commutator") {
  auto s = GroupModel::surface(2);
  s.add_peripheral("P", "a b a^-1 b^-1");
  auto ball = cayley_ball(s, 4);
  auto cosets = peripheral_cosets_in_ball(s, ball, 0);
  int idc = -1;
  for (size_t c = 0; c < cosets.size(); ++c)
    for (auto m : cosets[c].members)
      if (m == 0) idc = static_cast<int>(c);
  REQUIRE(idc >= 0);
  std::set<std::string> words;
  for (auto m : cosets[idc].members) words.insert(s.str(ball.words[m]));
  CHECK(words.count(""));
  CHECK(words.count("a b a^-1 b^-1"));
}

TEST_CASE("coset relation is an equivalence on sampled triples") {
  auto s = GroupModel::surface(2);
  s.add_peripheral("P", "a b a^-1 b^-1");
  std::mt19937_64 rng(23);
  const Word c = s.word("a b a^-1 b^-1");
  for (int i = 0; i < 300; ++i) {
    Word x = random_word(rng, 4, i % 6);
    Word y = i % 2 ? cat({x, power(c, i % 5 - 2)}) : random_word(rng, 4, 3);
    Word z = i % 3 ? cat({y, power(c, 1)}) : random_word(rng, 4, 2);
    auto kx = s.coset_of(x, 0).key, ky = s.coset_of(y, 0).key, kz = s.coset_of(z, 0).key;
    CHECK(kx == s.coset_of(x, 0).key);
    if (kx == ky && ky == kz) CHECK(kx == kz);
    if (kx == ky && ky != kz) CHECK(kx != kz);
  }
  // coordinates move by one along the peripheral generator
  Word g = s.word("c d^-1 a");
  auto c0 = s.coset_of(g, 0), c1 = s.coset_of(cat({g, c}), 0);
  CHECK(c0.key == c1.key);
  CHECK(c1.coord[0] - c0.coord[0] == 1);
}

TEST_CASE("presentation parsing errors and unsupported peripherals") {
  CHECK_THROWS_AS(GroupModel::parse(""), Error);
  CHECK_THROWS_AS(GroupModel::parse("family = free\n"), Error);
  CHECK_THROWS_AS(GroupModel::parse("family = nope\ngenerators = a\n"), Error);
  CHECK_THROWS_AS(GroupModel::parse("family = free\ngenerators = a b\nperipheral P = a; b\n"), Error);
  auto m = GroupModel::parse("# comment\nfamily = free\ngenerators = a b\nperipheral P = a\n");
  CHECK(m.peripherals().size() == 1);
  CHECK(m.hash() == GroupModel::parse("family = free\ngenerators = a b\nperipheral P = a\n").hash());
  auto ug = GroupModel::parse("family = user-graph\nvertices = 3\nedge = 0 1\nedge = 1 2\nperipheral P = 1 2\n");
  CHECK_THROWS_AS(ug.key({}), Error);
  CHECK_THROWS_AS(ug.normal_form({}), Error);
}
