#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cusp/word.hpp"

namespace cusp {

enum class Family { Free, FreeAbelian, SurfaceAmalgam, Amalgam, Hnn, UserGraph };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

struct PeripheralSpec {
  std::string id;
  std::vector<Word> generator_words;
};

// A *_C B with A, B free on disjoint generator subsets and C = <edge_a> = <edge_b>.
struct AmalgamData {
  std::vector<int> factor_of_gen;  // 0 or 1 per generator
  Word edge[2];
};

// <A, t | t^-1 w_in t = w_out>, A free on the remaining generators.
struct HnnData {
  int stable = -1;
  Word w_in;
  Word w_out;
};

struct UserGraphData {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cosets;  // one vertex set per peripheral
};

// Amalgam normal form r_1 ... r_n u^k; r_i nontrivial shortlex-least coset representatives of C in
// alternating factors.
struct AmalgamNF {
  std::vector<std::pair<int, Word>> reps;
  long k = 0;
};

// Britton normal form g_0 t^e_1 g_1 ... t^e_n g_n; each g_{i-1} is a representative mod <w_in> when
// e_i = +1 and mod <w_out> when e_i = -1, no pinches.
struct HnnNF {
  std::vector<std::pair<Word, int>> reps;
  Word tail;
};

struct CosetCoord {
  std::string key;
  std::vector<long> coord;
};

class GroupModel {
 public:
  static constexpr std::size_t kDefaultBudget = 5'000'000;

  static GroupModel parse(std::string_view text);
  static GroupModel load(const std::string& path);

  static GroupModel free_group(int rank);
  static GroupModel free_abelian(int rank);
  static GroupModel surface(int genus);
  static GroupModel hnn(std::vector<std::string> base_gens, std::string stable, std::string w_in,
                        std::string w_out);

  Family family() const { return family_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<PeripheralSpec>& peripherals() const { return peripherals_; }
  const std::optional<AmalgamData>& amalgam() const { return amalgam_; }
  const std::optional<HnnData>& hnn_data() const { return hnn_; }
  const UserGraphData& user_graph() const { return user_graph_; }
  bool is_group() const { return family_ != Family::UserGraph; }

  void add_peripheral(std::string id, std::vector<Word> gens);
  void add_peripheral(std::string id, const std::string& word_text);

  Word word(std::string_view text) const { return parse_word(text, alphabet_); }
  std::string str(const Word& w) const { return format_word(w, alphabet_); }

  // Exact canonical key; equal keys iff equal elements.
  std::string key(const Word& w) const;
  bool equal(const Word& a, const Word& b) const { return key(a) == key(b); }
  // Shortlex least geodesic representative.
  Word normal_form(const Word& w, std::size_t budget = 200'000) const;

  AmalgamNF amalgam_nf(const Word& w) const;
  HnnNF hnn_nf(const Word& w) const;
  Word dehn_reduce(const Word& w) const;

  // Left coset g P_i: canonical key plus integer coordinates whose l1 distance is the word
  // metric of P_i on its own generators.
  CosetCoord coset_of(const Word& g, int peripheral) const;

  std::string canonical_text() const;
  std::uint64_t hash() const;

 private:
  void validate();
  void check_word(const Word& w) const;

  Family family_ = Family::Free;
  Alphabet alphabet_;
  std::vector<Word> relators_;
  std::vector<PeripheralSpec> peripherals_;
  std::optional<AmalgamData> amalgam_;
  std::optional<HnnData> hnn_;
  UserGraphData user_graph_;
  // peripheral i: sign s with P_i generator = edge^s (amalgam), w_in^s (hnn); basis index (abelian)
  std::vector<std::vector<int>> periph_aux_;
};

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 1469598103934665603ull);

}  // namespace cusp
