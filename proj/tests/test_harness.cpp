#include <gtest/gtest.h>

#include "domstruct/domstruct.hpp"
#include "oracles.hpp"

namespace {

using namespace domstruct;

CampaignConfig named_only(std::vector<std::string> names) {
  CampaignConfig cfg;
  cfg.named = std::move(names);
  return cfg;
}

TEST(TheoremT2, K4Holds) {
  const Graph g = generate_named("K4");
  const auto cfg = named_only({});
  const auto t2 = check_theorem_t2(g, analyze_structures(g, cfg), cfg);
  EXPECT_TRUE(t2.ok);
  EXPECT_EQ(t2.evidence["family"], 0);
}

TEST(TheoremT2, FailureCarriesEvidence) {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  const auto cfg = named_only({});
  const auto t2 = check_theorem_t2(g, analyze_structures(g, cfg), cfg);
  EXPECT_FALSE(t2.ok);
  EXPECT_EQ(t2.evidence["largest_component"], 2);
  EXPECT_EQ(t2.evidence["components"], json::parse("[[3,4]]"));

  const auto none = check_theorem_t2(oracle::cycle_graph(5), analyze_structures(oracle::cycle_graph(5), cfg), cfg);
  EXPECT_FALSE(none.ok);
  EXPECT_EQ(none.evidence["reason"], "no families");
}

TEST(FamilyBound, K4AndTruncation) {
  const Graph k4 = generate_named("K4");
  auto cfg = named_only({});
  const auto check = check_family_bound(k4, analyze_structures(k4, cfg));
  EXPECT_EQ(check.ok, std::optional<bool>(true));
  EXPECT_EQ(check.count, 1U);
  EXPECT_EQ(check.bound, 5U);

  cfg.budget.max_count = 5;
  const Graph k5 = generate_named("K5");
  EXPECT_FALSE(check_family_bound(k5, analyze_structures(k5, cfg)).ok.has_value());
}

TEST(Optimality, K4AndPetersen) {
  const auto cfg = named_only({});
  const Graph k4 = generate_named("K4");
  const auto a = check_optimality(k4, analyze_structures(k4, cfg), cfg);
  EXPECT_EQ(a.ok, std::optional<bool>(true));
  EXPECT_EQ(a.oracle, std::optional<std::size_t>(1));
  EXPECT_EQ(a.structure, std::optional<std::size_t>(1));

  const Graph petersen = generate_named("petersen");
  const auto b = check_optimality(petersen, analyze_structures(petersen, cfg), cfg);
  EXPECT_EQ(b.oracle, std::optional<std::size_t>(3));
  ASSERT_TRUE(b.structure.has_value());
  EXPECT_GE(*b.structure, 3U);
  EXPECT_EQ(b.ok, std::optional<bool>(*b.structure == 3));
}

TEST(Optimality, StructureFailureIsAFailAndLargeGraphsAreInconclusive) {
  auto cfg = named_only({});
  const Graph cube = generate_named("cube_q3");
  const auto failed = check_optimality(cube, analyze_structures(cube, cfg), cfg);
  EXPECT_EQ(failed.ok, std::optional<bool>(false));
  EXPECT_EQ(failed.failure, std::optional<std::string>("structure method failed"));
  EXPECT_EQ(failed.oracle, std::optional<std::size_t>(2));

  cfg.oracle_limit = 6;
  const auto skipped = check_optimality(cube, analyze_structures(cube, cfg), cfg);
  EXPECT_FALSE(skipped.ok.has_value());
  EXPECT_FALSE(skipped.oracle.has_value());
}

TEST(Campaign, K4PassesEveryClaim) {
  const auto reports = run_campaign(named_only({"K4"}));
  ASSERT_EQ(reports.size(), 1U);
  for (const auto& [name, flag] : reports[0].claim_flags()) EXPECT_EQ(flag, std::optional<bool>(true)) << name;
  EXPECT_FALSE(reports[0].counterexample.has_value());
  const auto j = to_json(reports[0], false);
  EXPECT_FALSE(j.contains("runtime_ms"));
  EXPECT_TRUE(to_json(reports[0], true).contains("runtime_ms"));
  EXPECT_EQ(j["semantics"], "greedy-closure");
}

TEST(Campaign, EmptyRandomCorpus) {
  CampaignConfig cfg;
  cfg.random = RandomCorpus{0, 6, 8, 1, 100};
  const auto reports = run_campaign(cfg);
  EXPECT_TRUE(reports.empty());
  const auto summary = json::parse(to_jsonl(reports, false));
  EXPECT_EQ(summary["summary"]["graphs"], 0);
}

TEST(Campaign, DeterministicAcrossRunsAndJobCounts) {
  CampaignConfig cfg;
  cfg.named = {"K4", "prism3", "wheel(5)"};
  cfg.random = RandomCorpus{12, 6, 10, 7, 10000};
  const auto first = to_jsonl(run_campaign(cfg), false);
  EXPECT_EQ(first, to_jsonl(run_campaign(cfg), false));
  cfg.jobs = 4;
  EXPECT_EQ(first, to_jsonl(run_campaign(cfg), false));
}

TEST(Campaign, NonThreeConnectedInputsLeaveClaimsNull) {
  const auto r = verify_graph("c6", oracle::cycle_graph(6), named_only({}));
  EXPECT_FALSE(r.is_3_connected);
  for (const auto& [name, flag] : r.claim_flags()) EXPECT_FALSE(flag.has_value()) << name;
  EXPECT_EQ(r.oracle_gamma, std::optional<std::size_t>(2));
}

TEST(Config, ParsingAndErrors) {
  const auto cfg = config_from_json(json::parse(R"({"named":"all","random":{"count":3,"seed":9},"jobs":2})"));
  EXPECT_EQ(cfg.named, default_named_corpus());
  ASSERT_TRUE(cfg.random.has_value());
  EXPECT_EQ(cfg.random->count, 3U);
  EXPECT_EQ(cfg.random->seed, 9U);
  EXPECT_EQ(cfg.jobs, 2U);

  EXPECT_THROW((void)config_from_json(json::parse(R"({"random":{"count":3}})")), ConfigError);
  EXPECT_THROW((void)config_from_json(json::parse(R"({"max_cycles":0})")), ConfigError);
  EXPECT_THROW((void)config_from_json(json::parse(R"({"max_cycle_len":0})")), ConfigError);
  EXPECT_THROW((void)config_from_json(json::parse(R"({"named":["K9"]})")), ConfigError);
  EXPECT_THROW((void)config_from_json(json::parse(R"({"random":{"seed":1,"n_min":9,"n_max":8}})")), ConfigError);
  EXPECT_THROW((void)config_from_json(json::parse(R"({"jobs":"many"})")), ConfigError);
}

TEST(Corpus, IdsAndDeterminism) {
  CampaignConfig cfg;
  cfg.named = {"K4"};
  cfg.random = RandomCorpus{5, 6, 9, 3, 10000};
  const auto a = build_corpus(cfg);
  const auto b = build_corpus(cfg);
  ASSERT_EQ(a.size(), 6U);
  EXPECT_EQ(a[0].id, "K4");
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].graph, b[i].graph);
  }
  EXPECT_EQ(a[1].id.rfind("random-0-n", 0), 0U);
}

TEST(Counterexample, ReloadReproducesFailures) {
  const auto r = verify_graph("cube_q3", generate_named("cube_q3"), named_only({}));
  ASSERT_TRUE(r.counterexample.has_value());
  const auto& ce = *r.counterexample;
  const Graph back = load_graph(ce["graph"].get<std::string>());
  EXPECT_EQ(back, generate_named("cube_q3"));
  const auto again = verify_graph("reloaded", back, named_only({}));
  ASSERT_TRUE(again.counterexample.has_value());
  EXPECT_EQ((*again.counterexample)["failed"], ce["failed"]);
  EXPECT_NE(ce["failed"].dump().find("optimality_ok"), std::string::npos);
  EXPECT_TRUE(ce["evidence"].contains("optimality_ok"));
}

TEST(Report, SelfConsistent) {
  CampaignConfig cfg;
  cfg.random = RandomCorpus{15, 6, 12, 5, 10000};
  for (const auto& r : run_campaign(cfg)) {
    EXPECT_TRUE(r.is_3_connected);
    EXPECT_EQ(r.family_bound, static_cast<std::size_t>(r.n) + 1);
    EXPECT_EQ(r.exhaustive, !r.cg_truncated && !r.structures_truncated && !r.families_truncated);
    bool any_false = false;
    for (const auto& [name, flag] : r.claim_flags()) any_false |= flag == false;
    EXPECT_EQ(any_false, r.counterexample.has_value());
    ASSERT_TRUE(r.oracle_gamma.has_value());
    EXPECT_GE(r.greedy_gamma, *r.oracle_gamma);
    if (r.structure_gamma) {
      EXPECT_GE(*r.structure_gamma, *r.oracle_gamma);
      EXPECT_EQ(r.structure_witness->size(), *r.structure_gamma);
      EXPECT_FALSE(r.structure_failure.has_value());
    } else {
      EXPECT_EQ(r.optimality_ok, std::optional<bool>(false));
    }
  }
}

}  // namespace
