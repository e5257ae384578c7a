#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "domstruct/cycles.hpp"
#include "domstruct/domination.hpp"
#include "domstruct/generators.hpp"
#include "domstruct/graph.hpp"
#include "domstruct/graph_io.hpp"
#include "domstruct/structure.hpp"
#include "domstruct/x3assign.hpp"

namespace domstruct {

using json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RandomCorpus {
  std::size_t count = 100;
  int n_min = 6;
  int n_max = 14;
  std::uint64_t seed = 42;
  int attempts = 10000;
};

struct CampaignConfig {
  std::vector<std::string> named;
  std::optional<RandomCorpus> random;
  CycleBudget budget;
  std::size_t max_structures = 10000;
  std::size_t max_families = 10000;
  int oracle_limit = 30;
  SeamOptions seam;
  PatternMode pattern = PatternMode::exact;
  unsigned jobs = 1;
  bool timings = false;  // wall-clock numbers make output non-reproducible
  std::string out;       // empty: stdout

  /// Every named graph plus 100 random 3-connected graphs, n in [6,14], seed 42.
  static CampaignConfig defaults() {
    CampaignConfig cfg;
    cfg.named = default_named_corpus();
    cfg.random = RandomCorpus{};
    return cfg;
  }

  void validate() const {
    if (budget.max_count == 0 || (budget.max_length && *budget.max_length == 0))
      throw ConfigError("cycle caps must be positive");
    if (max_structures == 0 || max_families == 0) throw ConfigError("structure and family caps must be positive");
    if (oracle_limit <= 0) throw ConfigError("oracle_limit must be positive");
    if (jobs == 0) throw ConfigError("jobs must be positive");
    if (random) {
      if (random->n_min < 4 || random->n_max < random->n_min) throw ConfigError("random n-range must satisfy 4 <= n_min <= n_max");
      if (random->attempts <= 0) throw ConfigError("random attempts must be positive");
    }
    for (const auto& name : named) {
      try {
        (void)parse_named(name);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }

  [[nodiscard]] AssignOptions assign_options() const { return {pattern, 100000}; }
};

/// Reads a campaign config object. Missing keys keep their defaults, except
/// that a "random" block must carry an explicit "seed".
inline CampaignConfig config_from_json(const json& j) {
  CampaignConfig cfg;
  try {
    if (j.contains("named")) {
      if (j["named"].is_string() && j["named"] == "all")
        cfg.named = default_named_corpus();
      else
        cfg.named = j["named"].get<std::vector<std::string>>();
    }
    if (j.contains("random") && !j["random"].is_null()) {
      const auto& r = j["random"];
      if (!r.contains("seed")) throw ConfigError("random corpus requires an explicit seed");
      RandomCorpus rc;
      rc.seed = r["seed"].get<std::uint64_t>();
      rc.count = r.value("count", rc.count);
      rc.n_min = r.value("n_min", rc.n_min);
      rc.n_max = r.value("n_max", rc.n_max);
      rc.attempts = r.value("attempts", rc.attempts);
      cfg.random = rc;
    }
    if (j.contains("max_cycle_len") && !j["max_cycle_len"].is_null())
      cfg.budget.max_length = j["max_cycle_len"].get<std::size_t>();
    cfg.budget.max_count = j.value("max_cycles", cfg.budget.max_count);
    cfg.max_structures = j.value("max_structures", cfg.max_structures);
    cfg.max_families = j.value("max_families", cfg.max_families);
    cfg.oracle_limit = j.value("oracle_limit", cfg.oracle_limit);
    cfg.seam.allow_vertex_seam = j.value("allow_vertex_seam", false);
    cfg.pattern = j.value("loose_pattern", false) ? PatternMode::loose : PatternMode::exact;
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.timings = j.value("timings", false);
    cfg.out = j.value("out", std::string{});
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

struct CorpusEntry {
  std::string id;
  Graph graph;
};

/// Named graphs first, then the random draws. Each random graph gets its own
/// order and seed from one generator seeded with the corpus seed.
inline std::vector<CorpusEntry> build_corpus(const CampaignConfig& cfg) {
  std::vector<CorpusEntry> out;
  for (const auto& name : cfg.named) out.push_back({name, generate_named(name)});
  if (cfg.random) {
    const auto& r = *cfg.random;
    std::mt19937_64 rng(r.seed);
    for (std::size_t i = 0; i < r.count; ++i) {
      const int n = r.n_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r.n_max - r.n_min + 1)));
      const std::uint64_t graph_seed = rng();
      out.push_back({"random-" + std::to_string(i) + "-n" + std::to_string(n) + "-s" + std::to_string(graph_seed),
                     generate_random_3connected(n, graph_seed, r.attempts)});
    }
  }
  return out;
}

/// Structures and families of one graph under a config's budgets.
struct GraphAnalysis {
  StructureSet structures;
  FamilySet families;

  [[nodiscard]] bool exhaustive() const {
    return !structures.cg_truncated && !structures.truncated && !families.truncated;
  }
};

inline GraphAnalysis analyze_structures(const Graph& g, const CampaignConfig& cfg) {
  GraphAnalysis a;
  a.structures = enumerate_structures(g, cfg.budget, cfg.max_structures, cfg.seam);
  a.families = build_family(a.structures.structures, cfg.max_families);
  return a;
}

struct TheoremCheck {
  bool ok = false;
  json evidence;
};

/// Some family H leaves only components of size <= 1 in G - H, and under its
/// minimal assignment every singleton {x} has N(x) inside X.
inline TheoremCheck check_theorem_t2(const Graph& g, const GraphAnalysis& a, const CampaignConfig& cfg) {
  TheoremCheck out;
  std::optional<FamilyEvaluation> best_failure;
  for (std::size_t f = 0; f < a.families.families.size(); ++f) {
    const auto& family = a.families.families[f];
    const auto label_sets = family_label_sets(a.structures.structures, family, cfg.assign_options(), 1);
    auto ev = evaluate_family(g, family, f,
                              label_sets.empty() ? std::nullopt : std::optional<VertexSet>(label_sets.front()));
    std::size_t singletons = 0;
    for (const auto& r : ev.leftover) singletons += r.size() == 1 ? 1 : 0;
    // without an assignment the singleton clause holds only vacuously
    const bool neighbour_clause = ev.assignment_feasible ? ev.exceptional_ok : singletons == 0;
    if (ev.components_ok && neighbour_clause) {
      out.ok = true;
      out.evidence = {{"family", f},
                      {"leftover_singletons", singletons},
                      {"assignment_feasible", ev.assignment_feasible},
                      {"labels", ev.labels.ids()}};
      return out;
    }
    auto rank = [](const FamilyEvaluation& e) {
      return std::make_pair(e.largest_leftover, e.unsatisfied_singletons.size());
    };
    if (!best_failure || rank(ev) < rank(*best_failure)) best_failure = std::move(ev);
  }
  if (!best_failure) {
    out.evidence = {{"reason", "no families"}};
    return out;
  }
  json comps = json::array();
  for (const auto& r : best_failure->leftover) comps.push_back(r.ids());
  out.evidence = {{"family", best_failure->family_index},
                  {"largest_component", best_failure->largest_leftover},
                  {"components", comps},
                  {"assignment_feasible", best_failure->assignment_feasible},
                  {"labels", best_failure->labels.ids()},
                  {"unsatisfied_singletons", best_failure->unsatisfied_singletons}};
  return out;
}

struct FamilyBoundCheck {
  std::optional<bool> ok;  // nullopt: inconclusive (enumeration truncated)
  std::size_t count = 0;
  std::size_t bound = 0;
};

inline FamilyBoundCheck check_family_bound(const Graph& g, const GraphAnalysis& a) {
  FamilyBoundCheck out;
  out.count = a.families.families.size();
  out.bound = static_cast<std::size_t>(g.order()) + 1;
  if (a.exhaustive()) out.ok = out.count <= out.bound;
  return out;
}

struct OptimalityCheck {
  std::optional<bool> ok;  // nullopt: oracle not run (n above the limit)
  std::optional<std::size_t> oracle;
  std::optional<std::size_t> structure;
  std::optional<std::string> failure;
  std::optional<bool> dominates;  // the best structure candidate dominates G
  StructureGammaOutcome outcome;
};

inline OptimalityCheck check_optimality(const Graph& g, const GraphAnalysis& a, const CampaignConfig& cfg) {
  OptimalityCheck out;
  out.outcome = structure_gamma(g, a.structures.structures, a.families, cfg.assign_options());
  if (out.outcome.result) {
    out.structure = out.outcome.result->gamma;
    out.dominates = true;
  } else {
    out.failure = "structure method failed";
    if (!out.outcome.evaluations.empty()) {
      out.dominates = std::any_of(out.outcome.evaluations.begin(), out.outcome.evaluations.end(),
                                  [](const FamilyEvaluation& e) { return e.dominating; });
    }
  }
  if (g.order() <= cfg.oracle_limit) {
    out.oracle = brute_force_gamma(g, cfg.oracle_limit).gamma;
    out.ok = out.structure && *out.structure == *out.oracle;
  }
  return out;
}

/// Every feasible minimal assignment of a structure whose D_SG has at most two
/// cycles must admit a closed X-3-path between every vertex pair.
struct ClosedPathCheck {
  std::optional<bool> ok;  // nullopt: no eligible structure
  std::size_t structures_checked = 0;
  std::size_t pairs_checked = 0;
  json evidence;
};

inline ClosedPathCheck check_closed_paths(const GraphAnalysis& a, const CampaignConfig& cfg) {
  ClosedPathCheck out;
  const auto& all = a.structures.structures;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& s = all[i];
    if (s.d_sg.size() > 2) continue;
    auto assignment = min_label_assignment(s, i, cfg.assign_options());
    if (!assignment) continue;
    ++out.structures_checked;
    const auto& verts = s.union_graph.vertices.ids();
    for (std::size_t x = 0; x < verts.size(); ++x) {
      for (std::size_t y = x + 1; y < verts.size(); ++y) {
        ++out.pairs_checked;
        if (!has_closed_x3_path(s, *assignment, verts[x], verts[y], {cfg.pattern, 2000000})) {
          out.ok = false;
          out.evidence = {{"structure", i}, {"u", verts[x]}, {"v", verts[y]}, {"labels", assignment->labels.ids()}};
          return out;
        }
      }
    }
  }
  if (out.structures_checked > 0) out.ok = true;
  return out;
}

struct VerificationReport {
  std::string graph_id;
  int n = 0;
  std::size_t m = 0;
  bool is_3_connected = false;
  std::size_t cg_size = 0;
  bool cg_truncated = false;
  std::size_t structure_count = 0;
  bool structures_truncated = false;
  std::size_t family_count = 0;
  bool families_truncated = false;
  std::size_t family_bound = 0;
  bool exhaustive = false;
  std::optional<bool> cg_nonempty_ok;
  std::optional<bool> family_bound_ok;
  std::optional<bool> single_component_ok;
  std::optional<bool> closed_path_ok;
  std::optional<bool> theorem_T2_ok;
  std::optional<std::size_t> oracle_gamma;
  std::size_t greedy_gamma = 0;
  std::optional<std::size_t> structure_gamma;
  std::optional<std::vector<Vertex>> structure_witness;
  std::optional<std::string> structure_failure;
  std::optional<bool> structure_dominates;
  std::optional<bool> optimality_ok;
  std::map<std::string, double> runtime_ms;
  std::optional<json> counterexample;

  /// (name, flag) for every claim flag, in report order.
  [[nodiscard]] std::vector<std::pair<std::string, std::optional<bool>>> claim_flags() const {
    return {{"cg_nonempty_ok", cg_nonempty_ok},
            {"closed_path_ok", closed_path_ok},
            {"single_component_ok", single_component_ok},
            {"family_bound_ok", family_bound_ok},
            {"theorem_T2_ok", theorem_T2_ok},
            {"optimality_ok", optimality_ok}};
  }
};

namespace detail {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

class StageClock {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Runs the whole pipeline and every claim check on one graph. Claim checks
/// apply only to 3-connected inputs; the flags stay null otherwise.
inline VerificationReport verify_graph(const std::string& id, const Graph& g, const CampaignConfig& cfg) {
  VerificationReport r;
  detail::StageClock clock;
  r.graph_id = id;
  r.n = g.order();
  r.m = g.size();
  r.is_3_connected = is_3_connected(g);
  r.family_bound = static_cast<std::size_t>(g.order()) + 1;
  r.greedy_gamma = greedy_gamma(g).gamma;
  r.runtime_ms["connectivity"] = clock.lap();

  const auto a = analyze_structures(g, cfg);
  r.cg_size = a.structures.cg_size;
  r.cg_truncated = a.structures.cg_truncated;
  r.structure_count = a.structures.structures.size();
  r.structures_truncated = a.structures.truncated;
  r.family_count = a.families.families.size();
  r.families_truncated = a.families.truncated;
  r.exhaustive = a.exhaustive();
  r.runtime_ms["structures"] = clock.lap();

  json evidence = json::object();
  if (r.is_3_connected) {
    if (r.cg_size > 0)
      r.cg_nonempty_ok = true;
    else if (!r.cg_truncated)
      r.cg_nonempty_ok = false;

    const auto bound = check_family_bound(g, a);
    r.family_bound_ok = bound.ok;
    if (bound.ok == false) evidence["family_bound_ok"] = {{"count", bound.count}, {"bound", bound.bound}};

    bool single = true;
    json multi = json::array();
    for (std::size_t f = 0; f < a.families.families.size(); ++f) {
      if (a.families.families[f].members.size() != 1) {
        single = false;
        multi.push_back({{"family", f}, {"members", a.families.families[f].members}});
      }
    }
    r.single_component_ok = single;
    if (!single) evidence["single_component_ok"] = multi;

    const auto closed = check_closed_paths(a, cfg);
    r.closed_path_ok = closed.ok;
    if (closed.ok == false) evidence["closed_path_ok"] = closed.evidence;
    r.runtime_ms["claims"] = clock.lap();

    const auto t2 = check_theorem_t2(g, a, cfg);
    r.theorem_T2_ok = t2.ok;
    if (!t2.ok) evidence["theorem_T2_ok"] = t2.evidence;
    r.runtime_ms["theorem"] = clock.lap();

    const auto opt = check_optimality(g, a, cfg);
    r.oracle_gamma = opt.oracle;
    r.structure_gamma = opt.structure;
    r.structure_failure = opt.failure;
    r.structure_dominates = opt.dominates;
    if (opt.outcome.result) r.structure_witness = opt.outcome.result->witness.ids();
    r.optimality_ok = opt.ok;
    if (opt.ok == false)
      evidence["optimality_ok"] = {{"oracle", detail::optional_json(opt.oracle)},
                                   {"structure", detail::optional_json(opt.structure)},
                                   {"failure", detail::optional_json(opt.failure)}};
    r.runtime_ms["optimality"] = clock.lap();
  } else if (g.order() <= cfg.oracle_limit) {
    r.oracle_gamma = brute_force_gamma(g, cfg.oracle_limit).gamma;
    r.runtime_ms["oracle"] = clock.lap();
  }

  std::vector<std::string> failed;
  for (const auto& [name, flag] : r.claim_flags())
    if (flag == false) failed.push_back(name);
  if (!failed.empty()) {
    if (!evidence.contains("cg_nonempty_ok") && r.cg_nonempty_ok == false) evidence["cg_nonempty_ok"] = {{"cg_size", 0}};
    r.counterexample = json{{"graph", to_edge_list(g)}, {"failed", failed}, {"evidence", evidence}};
  }
  return r;
}

inline json to_json(const VerificationReport& r, bool timings) {
  json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["is_3_connected"] = r.is_3_connected;
  j["cg_size"] = r.cg_size;
  j["cg_truncated"] = r.cg_truncated;
  j["structure_count"] = r.structure_count;
  j["structures_truncated"] = r.structures_truncated;
  j["family_count"] = r.family_count;
  j["families_truncated"] = r.families_truncated;
  j["family_bound"] = r.family_bound;
  j["exhaustive"] = r.exhaustive;
  j["semantics"] = "greedy-closure";
  for (const auto& [name, flag] : r.claim_flags()) j[name] = detail::optional_json(flag);
  j["oracle_gamma"] = detail::optional_json(r.oracle_gamma);
  j["greedy_gamma"] = r.greedy_gamma;
  j["structure_gamma"] = detail::optional_json(r.structure_gamma);
  j["structure_witness"] = detail::optional_json(r.structure_witness);
  j["structure_failure"] = detail::optional_json(r.structure_failure);
  j["structure_dominates"] = detail::optional_json(r.structure_dominates);
  if (timings) {
    json t = json::object();
    for (const auto& [stage, ms] : r.runtime_ms) t[stage] = ms;
    j["runtime_ms"] = t;
  }
  j["counterexample"] = r.counterexample ? *r.counterexample : json(nullptr);
  return j;
}

/// Pass/fail/inconclusive tallies per claim over a set of reports.
inline json summarize(const std::vector<VerificationReport>& reports) {
  json claims = json::object();
  std::size_t exhaustive = 0;
  std::size_t connected = 0;
  for (const auto& r : reports) {
    exhaustive += r.exhaustive ? 1 : 0;
    connected += r.is_3_connected ? 1 : 0;
  }
  if (!reports.empty()) {
    for (const auto& [name, unused] : reports.front().claim_flags()) {
      (void)unused;
      claims[name] = {{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
    }
  }
  for (const auto& r : reports) {
    for (const auto& [name, flag] : r.claim_flags()) {
      const char* key = !flag ? "inconclusive" : (*flag ? "pass" : "fail");
      claims[name][key] = claims[name][key].get<std::size_t>() + 1;
    }
  }
  return json{{"summary", {{"graphs", reports.size()},
                           {"three_connected", connected},
                           {"exhaustive", exhaustive},
                           {"claims", claims}}}};
}

/// Analyzes every corpus graph (on `cfg.jobs` workers) and returns reports in corpus order.
inline std::vector<VerificationReport> run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const auto corpus = build_corpus(cfg);
  std::vector<VerificationReport> reports(corpus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        reports[i] = verify_graph(corpus[i].id, corpus[i].graph, cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(corpus.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

/// JSON Lines: one report per line, then the summary object.
inline std::string to_jsonl(const std::vector<VerificationReport>& reports, bool timings) {
  std::string out;
  for (const auto& r : reports) out += to_json(r, timings).dump() + "\n";
  out += summarize(reports).dump() + "\n";
  return out;
}

inline json to_json(const Assignment& a) {
  return json{{"structure_id", a.structure_id}, {"phases", a.phases}, {"labels", a.labels.ids()}, {"feasible", a.feasible}};
}

inline json to_json(const Cycle& c) { return json(std::vector<Vertex>(c.vertices().begin(), c.vertices().end())); }

inline json to_json(const Structure& s, std::size_t id) {
  json cycles = json::array();
  for (const auto& c : s.cycles) cycles.push_back(to_json(c));
  json d_sg = json::array();
  for (const auto& c : s.d_sg) d_sg.push_back(to_json(c));
  json edges = json::array();
  for (const auto& e : s.union_graph.edges) edges.push_back({e.u, e.v});
  return json{{"structure_id", id},
              {"cycle_count", s.cycles.size()},
              {"cycles", cycles},
              {"d_sg", d_sg},
              {"union_vertices", s.union_graph.vertices.ids()},
              {"union_edges", edges}};
}

}  // namespace domstruct
