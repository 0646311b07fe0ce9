#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cusp/checks.hpp"
#include "cusp/error.hpp"
#include "cusp/horoball.hpp"
#include "cusp/hyperbolicity.hpp"
#include "cusp/pvmetric.hpp"

using namespace cusp;
using json = nlohmann::json;

namespace {

struct RunConfig {
  std::string config;
  std::string cache;
  int radius = 6;
  int depth = 4;
  bool depth_set = false;
  bool radius_set = false;
  double epsilon = 1;
  std::size_t net = 20;
  std::size_t samples = 0;  // 0 picks the suite default
  std::size_t budget = GroupModel::kDefaultBudget;
  std::string suite;
  std::string out;
  std::uint64_t seed = 1;
  std::string kind;
  std::vector<std::string> args;
  std::string base = "e";
};

constexpr int kPass = 0, kAssertFail = 1, kInfraFail = 2;

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupModel load_model(const RunConfig& c) {
  if (c.config.empty()) throw Usage("--config is required");
  return GroupModel::load(c.config);
}

CuspedGraph load_space(const RunConfig& c, const GroupModel& model) {
  if (c.cache.empty()) throw Usage("--cache is required");
  std::ifstream in(c.cache, std::ios::binary);
  if (!in) throw Error(ErrorKind::StaleCache, "cannot open cache " + c.cache);
  return load_cached(in, model);
}

std::size_t samples_or(const RunConfig& c, std::size_t fallback) { return c.samples ? c.samples : fallback; }

double delta_of(const CuspedGraph& space, const RunConfig& c) {
  DeltaOptions opt;
  opt.seed = c.seed;
  return estimate_delta(space, opt).delta_fourpoint;
}

json half(HalfInt h) { return h.value(); }

json path_labels(const CuspedGraph& s, const std::vector<Vertex>& path) {
  json out = json::array();
  for (Vertex v : path) out.push_back(s.label(v));
  return out;
}

json cut_json(const CuspedGraph& s, const CutPointSequence& seq) {
  json cuts = json::array();
  for (const auto& c : seq.cuts)
    cuts.push_back({{"coset", c.coset}, {"rep", s.label(s.cosets()[c.coset].desc.rep)}, {"q", s.label(c.q)}, {"dist", c.dist}, {"tree_index", c.tree_index}});
  return {{"cuts", cuts}, {"kind", std::string(to_string(seq.kind))}, {"complete", seq.complete}, {"split", seq.split}};
}

BoundaryNet context_net(const CuspedGraph& s, const RunConfig& c, double delta) {
  NetOptions opt;
  opt.resolution = s.radius() - 1;
  opt.points = c.net;
  opt.delta = delta;
  opt.cayley_only = true;
  return build_net(s, opt);
}

int cmd_build(const RunConfig& c) {
  auto model = load_model(c);
  if (c.cache.empty()) throw Usage("--cache is required");
  auto space = CuspedGraph::build(model, c.radius, c.depth, c.budget);
  std::ofstream out(c.cache, std::ios::binary);
  space.write_cache(out);
  if (!out) throw Error(ErrorKind::ResourceLimit, "cannot write cache " + c.cache);
  json rep{{"cache", c.cache},
           {"radius", space.radius()},
           {"depth", space.max_depth()},
           {"vertices", space.size()},
           {"cayley_vertices", space.cayley_size()},
           {"edges", space.graph().edge_count()},
           {"cosets", space.cosets().size()},
           {"graph_hash", space.graph_hash()},
           {"model_hash", model.hash()}};
  std::cout << rep.dump(2) << "\n";
  return kPass;
}

int cmd_query(const RunConfig& c) {
  auto model = load_model(c);
  auto s = load_space(c, model);
  auto vertex = [&](std::size_t i) {
    if (c.args.size() <= i) throw Usage("query " + c.kind + " needs " + std::to_string(i + 1) + " vertex arguments");
    return s.parse_vertex(c.args[i]);
  };
  json rep{{"kind", c.kind}};
  if (c.kind == "dist") {
    auto d = s.distance(vertex(0), vertex(1));
    rep["distance"] = d.distance;
    rep["contaminated"] = d.contaminated;
  } else if (c.kind == "geodesic") {
    auto g = s.geodesic(vertex(0), vertex(1));
    rep["length"] = g.length;
    rep["vertices"] = path_labels(s, g.vertices);
    rep["contaminated"] = g.contaminated;
  } else if (c.kind == "gromov") {
    Vertex p = s.parse_vertex(c.base), x = vertex(0), y = vertex(1);
    rep["base"] = s.label(p);
    rep["value"] = half(gromov_product(s.graph(), p, x, y));
  } else if (c.kind == "delta") {
    DeltaOptions opt;
    opt.seed = c.seed;
    if (c.samples) opt.sample_size = c.samples;
    auto est = estimate_delta(s, opt);
    rep["delta_fourpoint"] = est.delta_fourpoint;
    rep["delta_thin"] = est.delta_thin;
    rep["delta_local"] = est.delta_local;
    rep["samples"] = est.samples;
    rep["local_samples"] = est.local_samples;
    rep["contaminated_discarded"] = est.contaminated_discarded;
    rep["exhaustive"] = est.exhaustive;
  } else if (c.kind == "boundary-pair") {
    auto r = make_ray(s, vertex(0)), q = make_ray(s, vertex(1));
    auto p = boundary_product(s, r, q, delta_of(s, c));
    json seq = json::array();
    for (auto h : p.sequence) seq.push_back(half(h));
    rep["value"] = half(p.value);
    rep["resolution"] = p.resolution;
    rep["sequence"] = seq;
    rep["fluctuation"] = p.fluctuation;
  } else if (c.kind == "cutpoints") {
    Splitting sp(s);
    rep.update(cut_json(s, sp.cut_point_sequence(make_ray(s, vertex(0)), make_ray(s, vertex(1)))));
  } else if (c.kind == "dl") {
    Splitting sp(s);
    BoundaryContext ctx(sp, {make_ray(s, vertex(0)), make_ray(s, vertex(1))}, delta_of(s, c), c.epsilon);
    auto iv = ctx.dl(0, 1);
    rep["dv"] = ctx.dv(0, 1);
    rep["lower"] = iv.lower;
    rep["upper"] = iv.upper;
    rep["tail_bound"] = iv.tail_bound;
    rep["terms_used"] = iv.terms_used;
    rep["unresolved"] = iv.unresolved;
    rep["sequence"] = cut_json(s, ctx.sequence(0, 1));
  } else {
    throw Usage("unknown query kind '" + c.kind + "'");
  }
  std::cout << rep.dump(2) << "\n";
  return kPass;
}

struct SuiteResult {
  bool pass = false;
  json report;
};

SuiteResult suite_horoball_nf(const RunConfig& c) {
  const int n = c.radius_set ? c.radius : 64;
  const int depth = c.depth_set ? c.depth : 6;
  auto h = build_horoball(BaseGraph::path(n), depth, c.budget);
  const Graph& g = h.graph();
  std::size_t pairs = 0, mismatches = 0, clipped = 0;
  std::vector<std::int32_t> row;
  for (Vertex x = 0; x < g.size(); ++x) {
    bfs(g, x, row);
    for (Vertex y = x + 1; y < g.size(); ++y) {
      ++pairs;
      try {
        if (normal_form_geodesic(h, x, y).length != row[y]) ++mismatches;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DepthClipped) throw;
        ++clipped;
      }
    }
  }
  std::mt19937_64 rng(c.seed);
  const std::size_t samples = samples_or(c, 200);
  int worst = 0;
  std::size_t partial = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Vertex x = static_cast<Vertex>(rng() % g.size()), y = static_cast<Vertex>(rng() % g.size());
    if (x == y) continue;
    try {
      auto r = hausdorff_check(h, x, y, 2000);
      worst = std::max(worst, r.value);
      partial += r.partial;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DepthClipped) throw;
    }
  }
  SuiteResult r;
  r.report = {{"base_path", n},   {"depth", depth},           {"pairs", pairs},
              {"mismatches", mismatches}, {"depth_clipped", clipped}, {"hausdorff_samples", samples},
              {"hausdorff_max", worst},   {"hausdorff_bound", 4},     {"hausdorff_partial", partial}};
  r.pass = mismatches == 0 && clipped == 0 && worst <= 4;
  return r;
}

SuiteResult suite_close(const CuspedGraph& s, const RunConfig& c) {
  const double delta = delta_of(s, c);
  auto rep = close_check(s, 0, delta, samples_or(c, 200), c.seed);
  return {rep.violations == 0,
          {{"delta", delta}, {"cosets", rep.cosets}, {"entries", rep.entries},
           {"contaminated_discarded", rep.contaminated_discarded}, {"violations", rep.violations},
           {"max_distance", rep.max_distance}, {"bound", rep.bound}, {"margin", rep.bound - rep.max_distance}}};
}

SuiteResult suite_qc(const CuspedGraph& s, const RunConfig& c) {
  const double delta = delta_of(s, c);
  auto rep = qc_check(s, 0, delta, 3, samples_or(c, 200), c.seed);
  return {rep.violations == 0,
          {{"delta", delta}, {"pairs", rep.pairs}, {"max_n", 3},
           {"contaminated_discarded", rep.contaminated_discarded}, {"violations", rep.violations},
           {"max_excess", rep.max_excess}, {"bound", rep.bound}, {"margin", rep.bound - rep.max_excess}}};
}

struct DeepTally {
  std::size_t checked = 0, failures = 0, too_short = 0, contaminated = 0, rerouted = 0, start = 0;
  int min_depth = std::numeric_limits<int>::max();
  bool pass() const { return failures == 0 && rerouted == start; }
  json to_json(double delta) const {
    return {{"delta", delta}, {"geodesics", checked}, {"failures", failures}, {"too_short", too_short},
            {"contaminated_discarded", contaminated}, {"min_depth", checked ? min_depth : 0},
            {"rerouted", rerouted}, {"start_on_coset", start}};
  }
};

DeepTally deep_tally(const CuspedGraph& s, double delta, std::size_t samples) {
  DeepTally t;
  for (int h = 0; h < static_cast<int>(s.cosets().size()) && t.checked < samples; ++h) {
    std::vector<Vertex> members;
    for (Vertex m : s.cosets()[h].desc.members)
      if (!s.on_sphere(m)) members.push_back(m);
    if (members.size() < 2) continue;
    auto path = s.geodesic(members.front(), members.back());
    if (path.contaminated) {
      ++t.contaminated;
      continue;
    }
    try {
      auto rep = check_deep_penetration(s, h, path.vertices, 0, delta);
      ++t.checked;
      if (!rep.inside) ++t.failures;
      t.start += rep.start_on_coset;
      t.rerouted += rep.rerouted;
      t.min_depth = std::min(t.min_depth, rep.min_depth);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooShort) throw;
      ++t.too_short;
    }
  }
  return t;
}

// Gated on the estimated delta; the run at max(delta, 4) is gated too when it has any long enough geodesic.
SuiteResult suite_deep(const CuspedGraph& s, const RunConfig& c) {
  const double delta = delta_of(s, c);
  const double floored = std::max(delta, 4.0);
  const std::size_t samples = samples_or(c, 50);
  auto raw = deep_tally(s, delta, samples);
  if (raw.checked == 0) throw Error(ErrorKind::SampleExhausted, "no coset with a long uncontaminated geodesic " + raw.to_json(delta).dump());
  auto flo = deep_tally(s, floored, samples);
  auto j = raw.to_json(delta);
  j["floored"] = flo.to_json(floored);
  return {raw.pass() && flo.pass(), j};
}

SuiteResult suite_approx(const CuspedGraph& s, const RunConfig& c) {
  const double delta = delta_of(s, c);
  Splitting sp(s);
  auto rep = approx_inequality_check(sp, delta, samples_or(c, 100), c.seed);
  return {rep.violations == 0,
          {{"delta", delta}, {"samples", rep.samples}, {"contaminated_discarded", rep.contaminated_discarded},
           {"violations", rep.violations}, {"max_excess", rep.max_excess}, {"bound", rep.bound}}};
}

SuiteResult suite_equivariance(const CuspedGraph& s, const RunConfig& c) {
  auto rep = equivariance_check(s, samples_or(c, 100), c.seed);
  return {rep.mismatches == 0,
          {{"samples", rep.samples}, {"contaminated_discarded", rep.contaminated_discarded},
           {"mismatches", rep.mismatches}, {"max_abs_diff", rep.max_abs_diff}}};
}

struct NetContext {
  double delta = 0;
  std::unique_ptr<Splitting> sp;
  std::unique_ptr<BoundaryContext> ctx;
};

NetContext net_context(const CuspedGraph& s, const RunConfig& c) {
  NetContext n;
  n.delta = delta_of(s, c);
  n.sp = std::make_unique<Splitting>(s);
  n.ctx = std::make_unique<BoundaryContext>(*n.sp, context_net(s, c, n.delta).rays, n.delta, c.epsilon);
  return n;
}

json context_json(const NetContext& n) {
  return {{"delta", n.delta},       {"net_points", n.ctx->size()}, {"cut_points", n.ctx->points() - n.ctx->size()},
          {"k1", n.ctx->k1()},      {"k2", n.ctx->k2()},           {"d_hat", n.ctx->d_hat()},
          {"tail_constant", n.ctx->tail_constant()}};
}

SuiteResult suite_metric_axioms(const CuspedGraph& s, const RunConfig& c) {
  auto n = net_context(s, c);
  auto ax = metric_axiom_check(*n.ctx);
  auto rf = tail_refinement_check(*n.ctx, 20, 1, 5);
  json rep = context_json(n);
  rep.update({{"pairs", ax.pairs},
              {"triples", ax.triples},
              {"asymmetric", ax.asymmetric},
              {"triangle_violations", ax.triangle_violations},
              {"nonpositive", ax.nonpositive},
              {"width_mismatches", ax.width_mismatches},
              {"unresolved", ax.unresolved},
              {"refinement_pairs", rf.pairs},
              {"refinement_inside", rf.inside},
              {"refinement_worst_slack", rf.worst_slack}});
  return {ax.pass() && rf.inside == rf.pairs, rep};
}

SuiteResult suite_holder(const CuspedGraph& s, const RunConfig& c) {
  auto n = net_context(s, c);
  auto h = holder_modulus_check(dl_matrices(*n.ctx));
  json rep = context_json(n);
  rep.update({{"n_hat", h.n_hat}, {"pairs", h.pairs}, {"dv_above_upper", h.dv_above_upper},
              {"dv_above_lower", h.dv_above_lower}});
  return {h.dv_above_upper == 0 && std::isfinite(h.n_hat), rep};
}

SuiteResult suite_linconn(const CuspedGraph& s, const RunConfig& c) {
  auto n = net_context(s, c);
  auto m = dl_matrices(*n.ctx);
  auto lc = linear_connectedness_check(m.lower, m.n);
  json rep = context_json(n);
  rep.update({{"k_hat", lc.k_hat}, {"eps_chain", lc.eps_chain}, {"mesh", lc.mesh}, {"metric", "dl_lower"}});
  return {std::isfinite(lc.k_hat), rep};
}

SuiteResult suite_doubling(const CuspedGraph& s, const RunConfig& c) {
  auto n = net_context(s, c);
  auto m = dl_matrices(*n.ctx);
  auto radii = default_radii(m.lower, m.n, 8);
  json rep = context_json(n);
  rep.update({{"doubling", doubling_estimate(m.lower, m.n, radii)}, {"radii", radii}, {"metric", "dl_lower"}});
  return {true, rep};
}

SuiteResult suite_e1(const RunConfig&) {
  auto e = e1_fixture(20);
  json rows = json::array();
  bool all = true;
  for (const auto& r : e.rows) {
    rows.push_back({{"k", r.k}, {"ratio", r.ratio}, {"ratio_bound", r.ratio_bound}, {"peak_gap", r.peak_gap},
                    {"peak_gap_formula", r.peak_gap_formula}, {"trough_depth", r.trough_depth},
                    {"trough_formula", r.trough_formula}});
    all = all && r.ratio >= r.ratio_bound;
  }
  const bool unbounded = e.growth >= 2;
  return {all && unbounded && e.max_rel_error < 1e-12,
          {{"rows", rows}, {"growth", e.growth}, {"max_rel_error", e.max_rel_error},
           {"expected_outcome", "not linearly connected"}, {"growth_detected", unbounded}}};
}

const std::vector<std::string> kSuites{"horoball-nf", "close",         "qc",     "deep",    "approx",    "equivariance",
                                       "metric-axioms", "holder", "linconn", "e1-fixture", "doubling"};

int cmd_verify(const RunConfig& c) {
  if (std::find(kSuites.begin(), kSuites.end(), c.suite) == kSuites.end()) throw Usage("unknown suite '" + c.suite + "'");
  SuiteResult r;
  if (c.suite == "e1-fixture") {
    r = suite_e1(c);
  } else if (c.suite == "horoball-nf") {
    r = suite_horoball_nf(c);
  } else {
    auto model = load_model(c);
    auto s = load_space(c, model);
    if (c.suite == "close") r = suite_close(s, c);
    else if (c.suite == "qc") r = suite_qc(s, c);
    else if (c.suite == "deep") r = suite_deep(s, c);
    else if (c.suite == "approx") r = suite_approx(s, c);
    else if (c.suite == "equivariance") r = suite_equivariance(s, c);
    else if (c.suite == "metric-axioms") r = suite_metric_axioms(s, c);
    else if (c.suite == "holder") r = suite_holder(s, c);
    else if (c.suite == "linconn") r = suite_linconn(s, c);
    else r = suite_doubling(s, c);
  }
  json rep{{"suite", c.suite}, {"seed", c.seed}, {"pass", r.pass}, {"report", r.report}};
  const std::string text = rep.dump(2) + "\n";
  std::cout << text;
  if (!c.out.empty()) {
    std::filesystem::create_directories(c.out);
    std::ofstream(std::filesystem::path(c.out) / (c.suite + ".json"), std::ios::binary) << text;
  }
  return r.pass ? kPass : kAssertFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cusped spaces, boundaries and piecewise visual metrics"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", cfg.config, "presentation file");
    sub->add_option("--cache", cfg.cache, "graph cache file");
    sub->add_option("--radius", cfg.radius, "Cayley ball radius; base path length for horoball-nf")->check(CLI::NonNegativeNumber);
    sub->add_option("--depth", cfg.depth, "horoball depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--epsilon", cfg.epsilon, "visual parameter")->check(CLI::PositiveNumber);
    sub->add_option("--net", cfg.net, "boundary net size")->check(CLI::PositiveNumber);
    sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "vertex budget")->check(CLI::PositiveNumber);
    sub->add_option("--suite", cfg.suite, "verification suite");
    sub->add_option("--out", cfg.out, "report directory");
    sub->add_option("--seed", cfg.seed, "random seed");
  };
  auto* build = app.add_subcommand("build", "build a cusped space and write its cache");
  common(build);
  auto* query = app.add_subcommand("query", "query a cached space");
  common(query);
  query->add_option("kind", cfg.kind, "dist | geodesic | gromov | delta | boundary-pair | cutpoints | dl")->required();
  query->add_option("vertices", cfg.args, "vertex labels, e.g. \"a b\" or \"a@2\"");
  query->add_option("--base", cfg.base, "basepoint for gromov");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInfraFail;
  }
  for (auto* sub : {build, query, verify}) {
    if (!*sub) continue;
    cfg.depth_set = sub->count("--depth") > 0;
    cfg.radius_set = sub->count("--radius") > 0;
  }
  try {
    if (*build) return cmd_build(cfg);
    if (*query) return cmd_query(cfg);
    return cmd_verify(cfg);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kInfraFail;
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
    return kInfraFail;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kInfraFail;
  }
}
