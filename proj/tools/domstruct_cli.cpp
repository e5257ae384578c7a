#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "domstruct/domstruct.hpp"

namespace {

using namespace domstruct;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

Graph read_graph(const std::string& path) {
  const auto text = read_file(path);
  try {
    return load_graph(text);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  }
}

struct PipelineFlags {
  std::size_t max_cycle_len = 0;
  std::size_t max_cycles = 200000;
  std::size_t max_structures = 10000;
  std::size_t max_families = 10000;
  int oracle_limit = 30;
  bool allow_vertex_seam = false;
  bool loose_pattern = false;

  CLI::Option* max_cycle_len_opt = nullptr;
  CLI::Option* max_cycles_opt = nullptr;
  CLI::Option* max_structures_opt = nullptr;
  CLI::Option* max_families_opt = nullptr;
  CLI::Option* oracle_limit_opt = nullptr;

  void attach(CLI::App& app) {
    max_cycle_len_opt = app.add_option("--max-cycle-len", max_cycle_len, "Longest cycle to enumerate (default: n)")
                            ->check(CLI::PositiveNumber);
    max_cycles_opt = app.add_option("--max-cycles", max_cycles, "Cycle enumeration cap")->check(CLI::PositiveNumber);
    max_structures_opt =
        app.add_option("--max-structures", max_structures, "Structure enumeration cap")->check(CLI::PositiveNumber);
    max_families_opt = app.add_option("--max-families", max_families, "Family enumeration cap")->check(CLI::PositiveNumber);
    oracle_limit_opt =
        app.add_option("--oracle-limit", oracle_limit, "Largest n for the exact oracle")->check(CLI::PositiveNumber);
    app.add_flag("--allow-vertex-seam", allow_vertex_seam, "Count a single shared vertex as a seamless connection");
    app.add_flag("--loose-pattern", loose_pattern, "Allow extra labels between every-third positions");
  }

  // Only flags given on the command line override the config.
  void apply(CampaignConfig& cfg) const {
    if (max_cycle_len_opt->count()) cfg.budget.max_length = max_cycle_len;
    if (max_cycles_opt->count()) cfg.budget.max_count = max_cycles;
    if (max_structures_opt->count()) cfg.max_structures = max_structures;
    if (max_families_opt->count()) cfg.max_families = max_families;
    if (oracle_limit_opt->count()) cfg.oracle_limit = oracle_limit;
    if (allow_vertex_seam) cfg.seam.allow_vertex_seam = true;
    if (loose_pattern) cfg.pattern = PatternMode::loose;
  }
};

json domination_json(const DominationResult& r) {
  return json{{"gamma", r.gamma}, {"witness", r.witness.ids()}, {"method", to_string(r.method)}, {"exact", r.exact}};
}

int run_gamma(const std::string& file, int oracle_limit, const std::string& out) {
  const Graph g = read_graph(file);
  json j{{"n", g.order()}, {"m", g.size()}};
  try {
    j["oracle"] = domination_json(brute_force_gamma(g, oracle_limit));
  } catch (const OracleLimitExceeded& e) {
    j["oracle"] = json{{"refused", e.what()}};
  }
  j["greedy"] = domination_json(greedy_gamma(g));
  write_output(out, j.dump(2) + "\n");
  return kExitOk;
}

int run_analyze(const std::string& file, const CampaignConfig& cfg, const std::string& dot_dir, bool full_cycles,
                const std::string& out) {
  const Graph g = read_graph(file);
  const auto a = analyze_structures(g, cfg);
  json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["is_3_connected"] = is_3_connected(g);
  j["cg_size"] = a.structures.cg_size;
  j["cg_truncated"] = a.structures.cg_truncated;
  j["structures_truncated"] = a.structures.truncated;
  j["families_truncated"] = a.families.truncated;

  json structures = json::array();
  json assignments = json::array();
  std::vector<std::optional<Assignment>> best(a.structures.structures.size());
  for (std::size_t i = 0; i < a.structures.structures.size(); ++i) {
    const auto& s = a.structures.structures[i];
    auto sj = to_json(s, i);
    if (!full_cycles) sj.erase("cycles");
    structures.push_back(sj);
    best[i] = min_label_assignment(s, i, cfg.assign_options());
    if (best[i]) {
      assignments.push_back(to_json(*best[i]));
    } else {
      assignments.push_back(json{{"structure_id", i}, {"phases", json::array()}, {"labels", json::array()}, {"feasible", false}});
    }
  }
  j["structures"] = structures;
  j["assignments"] = assignments;

  json families = json::array();
  for (const auto& f : a.families.families)
    families.push_back({{"members", f.members}, {"covered", f.covered.ids()}});
  j["families"] = families;

  const auto t2 = check_theorem_t2(g, a, cfg);
  j["theorem_T2"] = {{"ok", t2.ok}, {"evidence", t2.evidence}};
  const auto sg = structure_gamma(g, a.structures.structures, a.families, cfg.assign_options());
  if (sg.result)
    j["structure_gamma"] = domination_json(*sg.result);
  else
    j["structure_gamma"] = json{{"failure", "structure method failed"}};

  if (!dot_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dot_dir, ec);
    if (ec) throw IoError("cannot create " + dot_dir + ": " + ec.message());
    for (std::size_t i = 0; i < a.structures.structures.size(); ++i) {
      const auto path = (std::filesystem::path(dot_dir) / ("structure_" + std::to_string(i) + ".dot")).string();
      write_output(path, to_dot(g, a.structures.structures[i], best[i], "structure_" + std::to_string(i)));
    }
  }
  write_output(out, j.dump(2) + "\n");
  return kExitOk;
}

int run_verify(const std::string& config_path, const PipelineFlags& flags, unsigned jobs, bool jobs_given,
               bool timings, const std::string& out) {
  json raw;
  try {
    raw = json::parse(read_file(config_path));
  } catch (const json::parse_error& e) {
    throw ConfigError(config_path + ": " + e.what());
  }
  auto cfg = config_from_json(raw);
  flags.apply(cfg);
  if (jobs_given) cfg.jobs = jobs;
  if (timings) cfg.timings = true;
  if (!out.empty()) cfg.out = out;
  cfg.validate();
  const auto reports = run_campaign(cfg);
  write_output(cfg.out, to_jsonl(reports, cfg.timings));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination structures of 3-connected graphs: analysis and claim verification"};
  app.require_subcommand(1);

  std::string out;
  PipelineFlags flags;

  auto* gamma = app.add_subcommand("gamma", "Exact and greedy domination number of a graph file");
  std::string gamma_file;
  gamma->add_option("file", gamma_file, "Graph (edge list or graph6)")->required();
  gamma->add_option("--oracle-limit", flags.oracle_limit, "Largest n for the exact oracle")->check(CLI::PositiveNumber);
  gamma->add_option("--out", out, "Output path (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Structures, families, assignments and structure-derived set");
  std::string analyze_file;
  std::string dot_dir;
  bool full_cycles = false;
  analyze->add_option("file", analyze_file, "Graph (edge list or graph6)")->required();
  analyze->add_option("--dot", dot_dir, "Write one DOT file per structure into this directory");
  analyze->add_flag("--cycles", full_cycles, "Include every member cycle of each structure");
  analyze->add_option("--out", out, "Output path (default stdout)");
  flags.attach(*analyze);

  auto* verify = app.add_subcommand("verify", "Run a verification campaign from a JSON config");
  std::string config_path;
  unsigned jobs = 1;
  bool timings = false;
  verify->add_option("config", config_path, "Campaign config (JSON)")->required();
  auto* jobs_opt = verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "Include per-stage runtimes (output no longer reproducible)");
  verify->add_option("--out", out, "JSON Lines output path (default stdout)");
  PipelineFlags verify_flags;
  verify_flags.attach(*verify);

  auto* generate = app.add_subcommand("generate", "Emit a corpus graph as an edge list");
  std::string named;
  int random_n = 0;
  std::uint64_t seed = 42;
  int attempts = 10000;
  auto* named_opt = generate->add_option("--named", named, "K4, K5, prism3, wheel(k), petersen, cube_q3, moebius_kantor");
  auto* random_opt = generate->add_option("--random", random_n, "Random 3-connected graph on this many vertices");
  generate->add_option("--seed", seed, "Seed for --random");
  generate->add_option("--attempts", attempts, "Rejection-sampling attempts for --random")->check(CLI::PositiveNumber);
  generate->add_option("--out", out, "Output path (default stdout)");
  named_opt->excludes(random_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gamma) return run_gamma(gamma_file, flags.oracle_limit, out);
    if (*analyze) {
      CampaignConfig cfg;
      flags.apply(cfg);
      cfg.validate();
      return run_analyze(analyze_file, cfg, dot_dir, full_cycles, out);
    }
    if (*verify) return run_verify(config_path, verify_flags, jobs, jobs_opt->count() > 0, timings, out);
    if (*generate) {
      if (!named_opt->count() && !random_opt->count()) {
        std::cerr << "generate: one of --named or --random is required\n";
        return kExitUsage;
      }
      const Graph g = named_opt->count() ? generate_named(named) : generate_random_3connected(random_n, seed, attempts);
      write_output(out, to_edge_list(g));
      return kExitOk;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
