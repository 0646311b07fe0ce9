#include "cusp/group_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cusp/error.hpp"

namespace cusp {

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Free: return "free";
    case Family::FreeAbelian: return "free-abelian";
    case Family::SurfaceAmalgam: return "surface-amalgam";
    case Family::Amalgam: return "amalgam";
    case Family::Hnn: return "hnn";
    case Family::UserGraph: return "user-graph";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  for (Family f : {Family::Free, Family::FreeAbelian, Family::SurfaceAmalgam, Family::Amalgam, Family::Hnn,
                   Family::UserGraph})
    if (to_string(f) == s) return f;
  throw Error(ErrorKind::UnsupportedFamily, "unknown family '" + std::string(s) + "'");
}

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

void put_letters(std::string& key, const Word& w) {
  for (Letter l : w) key.push_back(static_cast<char>(l + 1));
}

void put_long(std::string& key, long k) {
  key.push_back(static_cast<char>(0xFE));
  key += std::to_string(k);
}

std::vector<int> exponents(const Word& w, int rank) {
  std::vector<int> e(rank, 0);
  for (Letter l : w) e[gen_of(l)] += is_inverse(l) ? -1 : 1;
  return e;
}

Word commutator(int x, int y) { return {letter(x, false), letter(y, false), letter(x, true), letter(y, true)}; }

}  // namespace

GroupModel GroupModel::parse(std::string_view text) {
  GroupModel m;
  bool have_family = false, have_gens = false;
  std::vector<std::pair<std::string, std::string>> periph_text;
  std::vector<std::string> relator_text;
  std::string factor_a, factor_b, edge_a, edge_b, stable, w_in, w_out;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected key = value");
    std::vector<std::string> lhs = split_ws(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (lhs.empty()) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": missing key");
    const std::string& k = lhs[0];
    if (k == "family") {
      m.family_ = family_from_string(value);
      have_family = true;
    } else if (k == "generators") {
      m.alphabet_ = Alphabet(split_ws(value));
      have_gens = true;
    } else if (k == "relator") {
      relator_text.push_back(value);
    } else if (k == "peripheral") {
      periph_text.emplace_back(lhs.size() > 1 ? lhs[1] : "P" + std::to_string(periph_text.size()), value);
    } else if (k == "factor_a") {
      factor_a = value;
    } else if (k == "factor_b") {
      factor_b = value;
    } else if (k == "edge_a") {
      edge_a = value;
    } else if (k == "edge_b") {
      edge_b = value;
    } else if (k == "stable") {
      stable = value;
    } else if (k == "hnn_in") {
      w_in = value;
    } else if (k == "hnn_out") {
      w_out = value;
    } else if (k == "vertices") {
      m.user_graph_.vertices = std::stoi(value);
    } else if (k == "edge") {
      auto t = split_ws(value);
      if (t.size() != 2) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": edge needs 2 ids");
      m.user_graph_.edges.emplace_back(std::stoi(t[0]), std::stoi(t[1]));
    } else {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": unknown key '" + k + "'");
    }
  }
  if (!have_family) throw Error(ErrorKind::ParseError, "missing family");
  if (m.family_ == Family::UserGraph) {
    if (m.user_graph_.vertices <= 0) throw Error(ErrorKind::ParseError, "user-graph needs vertices > 0");
    for (auto& [id, v] : periph_text) {
      std::vector<int> set;
      for (auto& t : split_ws(v)) set.push_back(std::stoi(t));
      m.user_graph_.cosets.push_back(set);
      m.peripherals_.push_back({id, {}});
    }
    m.validate();
    return m;
  }
  if (!have_gens || m.alphabet_.size() == 0) throw Error(ErrorKind::ParseError, "missing generators");
  for (auto& r : relator_text) m.relators_.push_back(m.word(r));
  if (m.family_ == Family::Amalgam) {
    AmalgamData a;
    a.factor_of_gen.assign(m.alphabet_.size(), -1);
    for (auto& g : split_ws(factor_a)) {
      int i = m.alphabet_.index(g);
      if (i < 0) throw Error(ErrorKind::MalformedWord, "unknown generator " + g);
      a.factor_of_gen[i] = 0;
    }
    for (auto& g : split_ws(factor_b)) {
      int i = m.alphabet_.index(g);
      if (i < 0) throw Error(ErrorKind::MalformedWord, "unknown generator " + g);
      a.factor_of_gen[i] = 1;
    }
    a.edge[0] = free_reduce(m.word(edge_a));
    a.edge[1] = free_reduce(m.word(edge_b));
    m.amalgam_ = a;
  } else if (m.family_ == Family::Hnn) {
    HnnData h;
    h.stable = m.alphabet_.index(stable);
    if (h.stable < 0) throw Error(ErrorKind::ParseError, "hnn needs a stable letter");
    h.w_in = free_reduce(m.word(w_in));
    h.w_out = free_reduce(m.word(w_out));
    m.hnn_ = h;
  }
  for (auto& [id, v] : periph_text) {
    std::vector<Word> gens;
    for (auto& w : split_on(v, ';'))
      if (!w.empty()) gens.push_back(free_reduce(m.word(w)));
    m.peripherals_.push_back({id, gens});
  }
  m.validate();
  return m;
}

GroupModel GroupModel::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

namespace {
std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  return names;
}
}  // namespace

GroupModel GroupModel::free_group(int rank) {
  GroupModel m;
  m.family_ = Family::Free;
  m.alphabet_ = Alphabet(default_names(rank));
  m.validate();
  return m;
}

GroupModel GroupModel::free_abelian(int rank) {
  GroupModel m;
  m.family_ = Family::FreeAbelian;
  m.alphabet_ = Alphabet(default_names(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) m.relators_.push_back(commutator(i, j));
  m.validate();
  return m;
}

GroupModel GroupModel::surface(int genus) {
  GroupModel m;
  m.family_ = Family::SurfaceAmalgam;
  m.alphabet_ = Alphabet(default_names(2 * genus));
  m.validate();
  return m;
}

GroupModel GroupModel::hnn(std::vector<std::string> base_gens, std::string stable, std::string w_in,
                           std::string w_out) {
  GroupModel m;
  m.family_ = Family::Hnn;
  base_gens.push_back(stable);
  m.alphabet_ = Alphabet(base_gens);
  HnnData h;
  h.stable = m.alphabet_.index(stable);
  h.w_in = free_reduce(m.word(w_in));
  h.w_out = free_reduce(m.word(w_out));
  m.hnn_ = h;
  m.validate();
  return m;
}

void GroupModel::check_word(const Word& w) const {
  for (Letter l : w)
    if (gen_of(l) >= alphabet_.size()) throw Error(ErrorKind::MalformedWord, "letter outside alphabet");
}

void GroupModel::validate() {
  periph_aux_.clear();
  const int n = alphabet_.size();
  switch (family_) {
    case Family::Free:
      if (!relators_.empty()) throw Error(ErrorKind::UnsupportedFamily, "free family takes no relators");
      break;
    case Family::FreeAbelian: {
      std::vector<Word> expected;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) expected.push_back(commutator(i, j));
      if (relators_.empty()) relators_ = expected;
      break;
    }
    case Family::SurfaceAmalgam: {
      if (n < 4 || n % 2) throw Error(ErrorKind::UnsupportedFamily, "surface family needs 2g >= 4 generators");
      Word rel;
      for (int i = 0; i < n; i += 2) {
        Word c = commutator(i, i + 1);
        rel.insert(rel.end(), c.begin(), c.end());
      }
      if (relators_.empty()) relators_.push_back(rel);
      if (relators_.size() != 1 || relators_[0] != rel)
        throw Error(ErrorKind::UnsupportedFamily, "surface relator must be the product of commutators in order");
      AmalgamData a;
      a.factor_of_gen.assign(n, 1);
      a.factor_of_gen[0] = a.factor_of_gen[1] = 0;
      a.edge[0] = commutator(0, 1);
      a.edge[1] = inverse(Word(rel.begin() + 4, rel.end()));
      amalgam_ = a;
      break;
    }
    case Family::Amalgam: {
      if (!amalgam_) throw Error(ErrorKind::ParseError, "amalgam needs factor_a/factor_b/edge_a/edge_b");
      auto& a = *amalgam_;
      for (int g = 0; g < n; ++g)
        if (a.factor_of_gen[g] < 0) throw Error(ErrorKind::ParseError, "generator in no factor: " + alphabet_.name(g));
      for (int f = 0; f < 2; ++f) {
        if (cyclic_split(a.edge[f]).core.empty()) throw Error(ErrorKind::ParseError, "trivial edge word");
        for (Letter l : a.edge[f])
          if (a.factor_of_gen[gen_of(l)] != f) throw Error(ErrorKind::ParseError, "edge word leaves its factor");
      }
      Word rel = mul(a.edge[0], inverse(a.edge[1]));
      if (relators_.empty()) relators_.push_back(rel);
      break;
    }
    case Family::Hnn: {
      if (!hnn_ || hnn_->stable < 0) throw Error(ErrorKind::ParseError, "hnn needs stable/hnn_in/hnn_out");
      for (const Word* w : {&hnn_->w_in, &hnn_->w_out}) {
        if (cyclic_split(*w).core.empty()) throw Error(ErrorKind::ParseError, "trivial associated word");
        for (Letter l : *w)
          if (gen_of(l) == hnn_->stable) throw Error(ErrorKind::ParseError, "associated word uses the stable letter");
      }
      Letter t = letter(hnn_->stable, false);
      Word rel{inv(t)};
      rel.insert(rel.end(), hnn_->w_in.begin(), hnn_->w_in.end());
      rel.push_back(t);
      Word wo = inverse(hnn_->w_out);
      rel.insert(rel.end(), wo.begin(), wo.end());
      if (relators_.empty()) relators_.push_back(rel);
      break;
    }
    case Family::UserGraph: {
      for (auto [u, v] : user_graph_.edges)
        if (u < 0 || v < 0 || u >= user_graph_.vertices || v >= user_graph_.vertices)
          throw Error(ErrorKind::ParseError, "edge endpoint out of range");
      for (auto& c : user_graph_.cosets)
        for (int v : c)
          if (v < 0 || v >= user_graph_.vertices) throw Error(ErrorKind::ParseError, "coset vertex out of range");
      for (size_t i = 0; i < peripherals_.size(); ++i) periph_aux_.push_back({});
      return;
    }
  }
  for (auto& r : relators_) check_word(r);
  for (auto& p : peripherals_) {
    for (auto& w : p.generator_words) check_word(w);
    std::vector<int> aux;
    switch (family_) {
      case Family::Free:
        if (p.generator_words.size() != 1 || p.generator_words[0].empty())
          throw Error(ErrorKind::UnsupportedFamily, "free family supports cyclic peripherals only");
        break;
      case Family::FreeAbelian:
        for (auto& w : p.generator_words) {
          auto e = exponents(w, n);
          int nz = 0, idx = -1;
          for (int i = 0; i < n; ++i)
            if (e[i]) ++nz, idx = i;
          if (nz != 1 || std::abs(e[idx]) != 1)
            throw Error(ErrorKind::UnsupportedFamily, "free-abelian peripherals must be spanned by generators");
          aux.push_back(idx);
        }
        break;
      case Family::SurfaceAmalgam:
      case Family::Amalgam: {
        if (p.generator_words.size() != 1) throw Error(ErrorKind::UnsupportedFamily, "peripheral must be the edge group");
        const Word& w = p.generator_words[0];
        if (equal(w, amalgam_->edge[0]))
          aux.push_back(1);
        else if (equal(w, inverse(amalgam_->edge[0])))
          aux.push_back(-1);
        else
          throw Error(ErrorKind::UnsupportedFamily, "peripheral must be the edge group");
        break;
      }
      case Family::Hnn: {
        if (p.generator_words.size() != 1) throw Error(ErrorKind::UnsupportedFamily, "peripheral must be <hnn_in>");
        const Word& w = p.generator_words[0];
        if (equal(w, hnn_->w_in))
          aux.push_back(1);
        else if (equal(w, inverse(hnn_->w_in)))
          aux.push_back(-1);
        else
          throw Error(ErrorKind::UnsupportedFamily, "peripheral must be <hnn_in>");
        break;
      }
      case Family::UserGraph: break;
    }
    periph_aux_.push_back(aux);
  }
}

void GroupModel::add_peripheral(std::string id, std::vector<Word> gens) {
  for (auto& g : gens) g = free_reduce(g);
  peripherals_.push_back({std::move(id), std::move(gens)});
  validate();
}

void GroupModel::add_peripheral(std::string id, const std::string& word_text) {
  std::vector<Word> gens;
  for (auto& w : split_on(word_text, ';'))
    if (!w.empty()) gens.push_back(word(w));
  add_peripheral(std::move(id), std::move(gens));
}

AmalgamNF GroupModel::amalgam_nf(const Word& w) const {
  if (!amalgam_) throw Error(ErrorKind::NormalFormUnavailable, "not an amalgam");
  check_word(w);
  const auto& a = *amalgam_;
  AmalgamNF nf;
  int ft = -1;
  Word t;
  for (Letter x : w) {
    int g = a.factor_of_gen[gen_of(x)];
    if (ft < 0) ft = g;
    if (g == ft) {
      t = mul(t, Word{x});
      continue;
    }
    CosetDecomp d = decompose_mod_cyclic(t, a.edge[ft]);
    if (!d.rep.empty()) {
      nf.reps.emplace_back(ft, std::move(d.rep));
      t = power(a.edge[g], d.k);
    } else {
      t = power(a.edge[g], d.k);
      if (!nf.reps.empty() && nf.reps.back().first == g) {
        t = mul(nf.reps.back().second, t);
        nf.reps.pop_back();
      }
    }
    t = mul(t, Word{x});
    ft = g;
  }
  if (ft >= 0) {
    CosetDecomp d = decompose_mod_cyclic(t, a.edge[ft]);
    if (!d.rep.empty()) nf.reps.emplace_back(ft, std::move(d.rep));
    nf.k = d.k;
  }
  return nf;
}

HnnNF GroupModel::hnn_nf(const Word& w) const {
  if (!hnn_) throw Error(ErrorKind::NormalFormUnavailable, "not an HNN extension");
  check_word(w);
  const auto& h = *hnn_;
  HnnNF nf;
  for (Letter x : w) {
    if (gen_of(x) != h.stable) {
      nf.tail = mul(nf.tail, Word{x});
      continue;
    }
    int e = is_inverse(x) ? -1 : 1;
    // t^-1 w_in^k t = w_out^k and t w_out^k t^-1 = w_in^k
    const Word& pinch = e == 1 ? h.w_in : h.w_out;
    if (!nf.reps.empty() && nf.reps.back().second == -e) {
      CosetDecomp d = decompose_mod_cyclic(nf.tail, pinch);
      if (d.rep.empty()) {
        Word prev = std::move(nf.reps.back().first);
        nf.reps.pop_back();
        nf.tail = mul(prev, power(e == 1 ? h.w_out : h.w_in, d.k));
        continue;
      }
    }
    // w_in^k t = t w_out^k and w_out^k t^-1 = t^-1 w_in^k
    const Word& through = e == 1 ? h.w_in : h.w_out;
    CosetDecomp d = decompose_mod_cyclic(nf.tail, through);
    nf.reps.emplace_back(std::move(d.rep), e);
    nf.tail = power(e == 1 ? h.w_out : h.w_in, d.k);
  }
  return nf;
}

Word GroupModel::dehn_reduce(const Word& w) const {
  if (family_ != Family::SurfaceAmalgam) throw Error(ErrorKind::UnsupportedFamily, "Dehn reduction needs a surface group");
  check_word(w);
  const Word& r = relators_[0];
  const size_t n = r.size();
  std::vector<Word> sym;
  for (const Word& base : {r, inverse(r)})
    for (size_t s = 0; s < n; ++s) {
      Word c(base.begin() + static_cast<long>(s), base.end());
      c.insert(c.end(), base.begin(), base.begin() + static_cast<long>(s));
      sym.push_back(c);
    }
  Word cur = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cur.size() && !changed; ++i) {
      for (const Word& rho : sym) {
        size_t len = 0;
        while (len < n && i + len < cur.size() && cur[i + len] == rho[len]) ++len;
        if (2 * len > n) {
          Word rest = inverse(Word(rho.begin() + static_cast<long>(len), rho.end()));
          Word next(cur.begin(), cur.begin() + static_cast<long>(i));
          next.insert(next.end(), rest.begin(), rest.end());
          next.insert(next.end(), cur.begin() + static_cast<long>(i + len), cur.end());
          cur = free_reduce(next);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

std::string GroupModel::key(const Word& w) const {
  check_word(w);
  std::string k;
  switch (family_) {
    case Family::Free:
      put_letters(k, free_reduce(w));
      return k;
    case Family::FreeAbelian: {
      for (int e : exponents(w, alphabet_.size())) put_long(k, e);
      return k;
    }
    case Family::SurfaceAmalgam:
    case Family::Amalgam: {
      AmalgamNF nf = amalgam_nf(w);
      for (auto& [f, r] : nf.reps) {
        k.push_back(static_cast<char>(0xF0 + f));
        put_letters(k, r);
      }
      put_long(k, nf.k);
      return k;
    }
    case Family::Hnn: {
      HnnNF nf = hnn_nf(w);
      for (auto& [g, e] : nf.reps) {
        put_letters(k, g);
        k.push_back(static_cast<char>(e > 0 ? 0xF1 : 0xF2));
      }
      put_letters(k, nf.tail);
      return k;
    }
    case Family::UserGraph: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "user-graph has no word oracle");
}

Word GroupModel::normal_form(const Word& w, std::size_t budget) const {
  check_word(w);
  switch (family_) {
    case Family::Free: return free_reduce(w);
    case Family::FreeAbelian: {
      auto e = exponents(w, alphabet_.size());
      Word out;
      for (int g = 0; g < alphabet_.size(); ++g)
        for (int i = 0; i < std::abs(e[g]); ++i) out.push_back(letter(g, e[g] < 0));
      return out;
    }
    case Family::UserGraph:
      throw Error(ErrorKind::UnsupportedFamily, "user-graph has no word oracle");
    default: break;
  }
  // Breadth-first search in shortlex order; the first hit is the shortlex least geodesic.
  const std::string target = key(w);
  std::vector<Word> layer{Word{}};
  std::unordered_set<std::string> seen{key(Word{})};
  if (seen.count(target)) return {};
  const int letters = alphabet_.letters();
  while (!layer.empty()) {
    std::vector<Word> next;
    for (const Word& u : layer) {
      for (int l = 0; l < letters; ++l) {
        if (!u.empty() && u.back() == inv(static_cast<Letter>(l))) continue;
        Word v = u;
        v.push_back(static_cast<Letter>(l));
        std::string kv = key(v);
        if (kv == target) return v;
        if (seen.insert(std::move(kv)).second) {
          next.push_back(std::move(v));
          if (seen.size() > budget) throw Error(ErrorKind::ResourceLimit, "normal form search exceeded budget");
        }
      }
    }
    layer = std::move(next);
  }
  throw Error(ErrorKind::ResourceLimit, "normal form search exhausted");
}

CosetCoord GroupModel::coset_of(const Word& g, int peripheral) const {
  if (peripheral < 0 || peripheral >= static_cast<int>(peripherals_.size()))
    throw Error(ErrorKind::InvalidArgument, "no such peripheral");
  const auto& p = peripherals_[peripheral];
  const auto& aux = periph_aux_[peripheral];
  CosetCoord c;
  switch (family_) {
    case Family::Free: {
      CosetDecomp d = decompose_mod_cyclic(free_reduce(g), p.generator_words[0]);
      put_letters(c.key, d.rep);
      c.coord = {d.k};
      return c;
    }
    case Family::FreeAbelian: {
      auto e = exponents(g, alphabet_.size());
      for (size_t i = 0; i < aux.size(); ++i) {
        int sign = is_inverse(p.generator_words[i][0]) ? -1 : 1;
        c.coord.push_back(static_cast<long>(sign) * e[aux[i]]);
        e[aux[i]] = 0;
      }
      for (int x : e) put_long(c.key, x);
      return c;
    }
    case Family::SurfaceAmalgam:
    case Family::Amalgam: {
      AmalgamNF nf = amalgam_nf(g);
      for (auto& [f, r] : nf.reps) {
        c.key.push_back(static_cast<char>(0xF0 + f));
        put_letters(c.key, r);
      }
      c.coord = {aux[0] * nf.k};
      return c;
    }
    case Family::Hnn: {
      HnnNF nf = hnn_nf(g);
      for (auto& [w, e] : nf.reps) {
        put_letters(c.key, w);
        c.key.push_back(static_cast<char>(e > 0 ? 0xF1 : 0xF2));
      }
      CosetDecomp d = decompose_mod_cyclic(nf.tail, hnn_->w_in);
      put_letters(c.key, d.rep);
      c.coord = {aux[0] * d.k};
      return c;
    }
    case Family::UserGraph: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "user-graph cosets are explicit");
}

std::string GroupModel::canonical_text() const {
  std::ostringstream o;
  o << "family=" << to_string(family_) << "\n";
  if (family_ == Family::UserGraph) {
    o << "vertices=" << user_graph_.vertices << "\n";
    for (auto [u, v] : user_graph_.edges) o << "edge=" << u << " " << v << "\n";
    for (size_t i = 0; i < user_graph_.cosets.size(); ++i) {
      o << "peripheral " << peripherals_[i].id << "=";
      for (int v : user_graph_.cosets[i]) o << " " << v;
      o << "\n";
    }
    return o.str();
  }
  o << "generators=";
  for (auto& n : alphabet_.names()) o << " " << n;
  o << "\n";
  for (auto& r : relators_) o << "relator=" << str(r) << "\n";
  if (amalgam_) {
    o << "factors=";
    for (int f : amalgam_->factor_of_gen) o << f;
    o << "\nedge_a=" << str(amalgam_->edge[0]) << "\nedge_b=" << str(amalgam_->edge[1]) << "\n";
  }
  if (hnn_)
    o << "stable=" << alphabet_.name(hnn_->stable) << "\nhnn_in=" << str(hnn_->w_in) << "\nhnn_out=" << str(hnn_->w_out)
      << "\n";
  for (auto& p : peripherals_) {
    o << "peripheral " << p.id << "=";
    for (size_t i = 0; i < p.generator_words.size(); ++i) o << (i ? "; " : "") << str(p.generator_words[i]);
    o << "\n";
  }
  return o.str();
}

std::uint64_t GroupModel::hash() const { return fnv1a(canonical_text()); }

}  // namespace cusp
