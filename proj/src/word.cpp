#include "cusp/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "cusp/error.hpp"

namespace cusp {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty() || names_[i].find('^') != std::string::npos)
      throw Error(ErrorKind::ParseError, "bad generator name '" + names_[i] + "'");
    for (size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw Error(ErrorKind::ParseError, "duplicate generator " + names_[i]);
  }
}

int Alphabet::index(std::string_view sym) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == sym) return static_cast<int>(i);
  return -1;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word out;
  size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "e" && alphabet.index("e") < 0) continue;
    if (tok == "1") continue;
    long exp = 1;
    size_t caret = tok.find('^');
    std::string_view sym = tok.substr(0, caret);
    if (caret != std::string_view::npos) {
      std::string_view e = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (ec != std::errc() || p != e.data() + e.size())
        throw Error(ErrorKind::MalformedWord, "bad exponent in '" + std::string(tok) + "'");
    }
    int g = alphabet.index(sym);
    if (g < 0) throw Error(ErrorKind::MalformedWord, "unknown symbol '" + std::string(sym) + "'");
    Letter l = letter(g, exp < 0);
    for (long i = 0; i < std::labs(exp); ++i) out.push_back(l);
  }
  return out;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += alphabet.name(gen_of(w[i]));
    if (is_inverse(w[i])) s += "^-1";
  }
  return s;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inv(l);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inv(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word mul(const Word& a, const Word& b) {
  size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == inv(b[cancel])) ++cancel;
  Word out(a.begin(), a.end() - static_cast<long>(cancel));
  out.insert(out.end(), b.begin() + static_cast<long>(cancel), b.end());
  return out;
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < std::labs(k); ++i) out = mul(out, base);
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

CyclicSplit cyclic_split(const Word& w) {
  Word r = free_reduce(w);
  size_t i = 0;
  while (2 * i + 1 < r.size() && r[i] == inv(r[r.size() - 1 - i])) ++i;
  CyclicSplit s;
  s.conj.assign(r.begin(), r.begin() + static_cast<long>(i));
  s.core.assign(r.begin() + static_cast<long>(i), r.end() - static_cast<long>(i));
  return s;
}

CosetDecomp decompose_mod_cyclic(const Word& g, const Word& u) {
  CyclicSplit cs = cyclic_split(u);
  if (cs.core.empty()) throw Error(ErrorKind::InvalidArgument, "trivial cyclic subgroup generator");
  // |g u^k| >= |k||core| - |g| - 2|conj|, and k = 0 already gives |g|.
  long bound = static_cast<long>((2 * g.size() + 2 * cs.conj.size()) / cs.core.size()) + 1;
  Word uinv = inverse(free_reduce(u));
  Word ur = free_reduce(u);
  CosetDecomp best{g, 0};
  Word cur = g;
  for (long k = 1; k <= bound; ++k) {
    cur = mul(cur, ur);
    if (shortlex_less(cur, best.rep)) best = {cur, -k};
  }
  cur = g;
  for (long k = 1; k <= bound; ++k) {
    cur = mul(cur, uinv);
    if (shortlex_less(cur, best.rep)) best = {cur, k};
  }
  return best;
}

}  // namespace cusp
