#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cusp/group_model.hpp"

namespace cusp {

struct CayleyEdge {
  std::int32_t u;
  std::int32_t v;
  Letter label;  // v = u * label
};

// Full ball of radius R around the identity, vertices in shortlex order of their labels.
struct CayleyBall {
  int radius = 0;
  std::vector<Word> words;          // shortlex least geodesic per vertex
  std::vector<std::string> keys;
  std::vector<std::int32_t> length;  // word length
  std::vector<CayleyEdge> edges;     // one per unordered pair and label
  std::unordered_map<std::string, std::int32_t> index;

  std::size_t size() const { return words.size(); }
  // -1 when outside the ball
  std::int32_t find(const GroupModel& m, const Word& w) const;
};

CayleyBall cayley_ball(const GroupModel& model, int radius, std::size_t budget = GroupModel::kDefaultBudget);

struct CosetDescriptor {
  int peripheral = 0;
  std::string key;
  std::int32_t rep = -1;                     // shortlex least shortest member in the ball
  std::vector<std::int32_t> members;         // sorted by coordinate
  std::vector<std::vector<long>> coords;
};

std::vector<CosetDescriptor> peripheral_cosets_in_ball(const GroupModel& model, const CayleyBall& ball, int peripheral);

}  // namespace cusp
