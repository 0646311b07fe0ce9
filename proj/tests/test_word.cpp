#include "doctest.h"

#include <random>

#include "cusp/error.hpp"
#include "cusp/word.hpp"

using namespace cusp;

namespace {

Word naive_reduce(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if ((w[i] ^ 1) == w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

Word random_word(std::mt19937_64& rng, int gens, int len) {
  Word w;
  std::uniform_int_distribution<int> d(0, 2 * gens - 1);
  for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(d(rng)));
  return w;
}

}  // namespace

TEST_CASE("parse and format round trip") {
  Alphabet ab({"a", "b"});
  Word w = parse_word("a b^-1 a^-1 b", ab);
  CHECK(w == Word{0, 3, 1, 2});
  CHECK(format_word(w, ab) == "a b^-1 a^-1 b");
  CHECK(parse_word("a^3 b^-2", ab) == Word{0, 0, 0, 3, 3});
  CHECK(parse_word("", ab).empty());
  CHECK(parse_word("e", ab).empty());
  CHECK_THROWS_AS(parse_word("a c", ab), Error);
  CHECK_THROWS_AS(parse_word("a^x", ab), Error);
}

TEST_CASE("free reduction agrees with naive cancellation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_word(rng, 2, 1 + i % 24);
    CHECK(free_reduce(w) == naive_reduce(w));
    Word v = random_word(rng, 2, i % 9);
    CHECK(mul(free_reduce(w), free_reduce(v)) == naive_reduce([&] {
            Word c = w;
            c.insert(c.end(), v.begin(), v.end());
            return c;
          }()));
  }
}

TEST_CASE("shortlex order and inverse") {
  CHECK(shortlex_less(Word{3}, Word{0, 0}));
  CHECK(shortlex_less(Word{0, 1}, Word{0, 2}));
  CHECK(inverse(Word{0, 2, 3}) == Word{2, 3, 1});
}

TEST_CASE("coset decomposition matches wide brute force") {
  std::mt19937_64 rng(11);
  const std::vector<Word> subgroup_gens = {{0}, {0, 2, 1, 3}, {2, 0, 3}, {0, 0}};
  for (const Word& u : subgroup_gens)
    for (int i = 0; i < 300; ++i) {
      Word g = free_reduce(random_word(rng, 2, i % 14));
      CosetDecomp d = decompose_mod_cyclic(g, u);
      CHECK(mul(d.rep, power(u, d.k)) == g);
      Word best = g;
      for (long k = -40; k <= 40; ++k) {
        Word c = mul(g, power(u, k));
        if (shortlex_less(c, best)) best = c;
      }
      CHECK(d.rep == best);
    }
}

TEST_CASE("cyclic split") {
  CyclicSplit s = cyclic_split(Word{2, 0, 0, 3});
  CHECK(s.conj == Word{2});
  CHECK(s.core == Word{0, 0});
}
