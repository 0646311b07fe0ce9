#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cusp {

// Letter encoding: 2*generator + (1 if inverse). Ordering a < a^-1 < b < b^-1 < ...
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

inline Letter letter(int gen, bool inverse) { return static_cast<Letter>(2 * gen + (inverse ? 1 : 0)); }
inline Letter inv(Letter l) { return static_cast<Letter>(l ^ 1u); }
inline int gen_of(Letter l) { return l >> 1; }
inline bool is_inverse(Letter l) { return (l & 1u) != 0; }

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  int letters() const { return 2 * size(); }
  const std::string& name(int gen) const { return names_[gen]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when unknown
  int index(std::string_view sym) const;

 private:
  std::vector<std::string> names_;
};

// Whitespace separated symbols, "x^-1" for inverses; "x^n" with integer n is accepted too.
// "e", "1" and the empty string denote the empty word. Throws MalformedWord.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

Word inverse(const Word& w);
Word free_reduce(const Word& w);
// Reduced product of two reduced words.
Word mul(const Word& a, const Word& b);
Word power(const Word& w, long k);
bool shortlex_less(const Word& a, const Word& b);

// Cyclic reduction: w = p c p^-1 with c cyclically reduced.
struct CyclicSplit {
  Word conj;
  Word core;
};
CyclicSplit cyclic_split(const Word& w);

// Decomposition g = rep * u^k in a free group, rep the shortlex least element of the
// coset g<u>. Inputs reduced; u nontrivial.
struct CosetDecomp {
  Word rep;
  long k = 0;
};
CosetDecomp decompose_mod_cyclic(const Word& g, const Word& u);

}  // namespace cusp
