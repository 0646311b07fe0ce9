#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cusp/graph.hpp"

namespace cusp {

// Finite base graph with its all-pairs distance table (kUnreached for different components).
class BaseGraph {
 public:
  static BaseGraph from_graph(const Graph& g);
  static BaseGraph path(int n);
  static BaseGraph single();
  // l1 metric on integer coordinate vectors (a coset of a peripheral subgroup).
  static BaseGraph from_coords(const std::vector<std::vector<long>>& coords);
  static BaseGraph read_csv(std::istream& in);

  int size() const { return n_; }
  std::int32_t d(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  bool geodesic() const { return geodesic_; }

 private:
  int n_ = 0;
  bool geodesic_ = true;  // every distance realised by a path inside the base
  std::vector<std::int32_t> dist_;
};

struct HoroballVertex {
  int v;
  int level;
};

class HoroballGraph {
 public:
  const BaseGraph& base() const { return base_; }
  int max_depth() const { return depth_; }
  const Graph& graph() const { return graph_; }
  Vertex id(int v, int level) const { return static_cast<Vertex>(level * base_.size() + v); }
  HoroballVertex at(Vertex x) const { return {x % base_.size(), x / base_.size()}; }
  int depth(Vertex x) const { return x / base_.size(); }
  std::size_t horizontal_edges(int level) const;
  void write_csv(std::ostream& out) const;

  friend HoroballGraph build_horoball(const BaseGraph& base, int depth, std::size_t budget);

 private:
  BaseGraph base_;
  int depth_ = 0;
  Graph graph_;
};

HoroballGraph build_horoball(const BaseGraph& base, int depth, std::size_t budget = 50'000'000);

// Smallest depth that keeps every normal-form apex unclipped: ceil(log2(diam)) + 1.
int default_depth(const BaseGraph& base);

struct NormalForm {
  int apex = 0;
  int horizontal = 0;
  int length = 0;
  std::vector<Vertex> path;
};

// Apex/horizontal split minimising |apex-k1| + |apex-k2| + h with h = ceil(d / 2^apex) <= 3,
// lowest apex on ties. Pure arithmetic, no truncation.
NormalForm normal_form_shape(std::int32_t base_distance, int k1, int k2);

struct HoroDistance {
  std::int32_t distance = 0;
  bool has_normal_form = false;
  std::vector<Vertex> geodesic;
};

HoroDistance horoball_distance(const HoroballGraph& h, Vertex x, Vertex y);
// Throws DepthClipped when the apex exceeds max_depth.
NormalForm normal_form_geodesic(const HoroballGraph& h, Vertex x, Vertex y);

struct HausdorffReport {
  int value = 0;
  std::size_t geodesics = 0;
  bool partial = false;
};

// Maximum Hausdorff distance from the normal-form geodesic over enumerated geodesics.
// With throw_on_cap the EnumerationCap error is raised after the cap, otherwise partial is set.
HausdorffReport hausdorff_check(const HoroballGraph& h, Vertex x, Vertex y, std::size_t cap = 10'000,
                                bool throw_on_cap = false);

// Enumerate geodesics x -> y in lexicographic order of vertex sequences (at most cap).
std::vector<std::vector<Vertex>> enumerate_geodesics(const Graph& g, Vertex x, Vertex y, std::size_t cap,
                                                     bool* truncated = nullptr);

}  // namespace cusp
