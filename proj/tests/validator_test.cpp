#include "coincide/error.hpp"
#include "coincide/hypothesis.hpp"
#include "coincide/oracle.hpp"
#include "coincide/problem_io.hpp"
#include "coincide/validator.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace coincide;

TEST(Generator, DeterministicPerIndex) {
  const GeneratorConfig cfg{.seed = 42};
  for (std::uint64_t i = 0; i < 20; ++i)
    EXPECT_EQ(problem_to_json(gen_instance(cfg, i)), problem_to_json(gen_instance(cfg, i))) << i;
  EXPECT_NE(problem_to_json(gen_instance(cfg, 0)), problem_to_json(gen_instance(cfg, 1)));
  const GeneratorConfig other{.seed = 43};
  EXPECT_NE(problem_to_json(gen_instance(cfg, 0)), problem_to_json(gen_instance(other, 0)));
}

TEST(Generator, InstancesAreWellFormed) {
  const GeneratorConfig cfg{.seed = 7, .max_points = 6};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const ProblemInstance inst = gen_instance(cfg, i);
    ASSERT_GE(inst.size(), 1u);
    ASSERT_LE(inst.size(), 6u);
    EXPECT_FALSE(inst.relation.edges().empty());
    // Survives a round trip through the validating parser.
    EXPECT_NO_THROW(parse_problem(problem_to_json(inst))) << i;
  }
}

TEST(Generator, SinglePointInstances) {
  const GeneratorConfig cfg{.seed = 3, .max_points = 1};
  for (std::uint64_t i = 0; i < 10; ++i) {
    const ProblemInstance inst = gen_instance(cfg, i);
    EXPECT_EQ(inst.size(), 1u);
    EXPECT_TRUE(inst.relation.contains(0, 0));
  }
}

TEST(Generator, ConfigValidation) {
  EXPECT_THROW((GeneratorConfig{.max_points = 0}.validate()), InputError);
  EXPECT_THROW((GeneratorConfig{.edge_density = 1.5}.validate()), InputError);
  EXPECT_THROW((GeneratorConfig{.map_bias = -0.1}.validate()), InputError);
  EXPECT_NO_THROW(GeneratorConfig{}.validate());
}

TEST(Conformance, KnownInstancesAreConformant) {
  ConformanceStats stats;
  check_conformance(fixtures::t3(), 0, stats);
  check_conformance(fixtures::example2_finite(), 1, stats);
  EXPECT_TRUE(stats.conformant()) << stats.counterexample->theorem << ": " << stats.counterexample->observed;
  EXPECT_EQ(stats.instances, 2u);
  EXPECT_EQ(stats.theorem2_hits, 2u);
  EXPECT_EQ(stats.theorem3_hits, 2u);
  EXPECT_GE(stats.solver_runs, 3u);
  EXPECT_EQ(stats.solver_failures, 0u);
}

TEST(Conformance, UnderstatedAlphaDoesNotMakeTheoremsApply) {
  // f swaps two points at distance 1: the true ratio is 1, no coincidence.
  std::vector<std::vector<double>> d = {{0, 1}, {1, 0}};
  const ProblemInstance inst =
      make_instance(validate_metric(d), universal_relation(2), {1, 0}, {0, 1}, std::nullopt, 0.5);
  EXPECT_EQ(full_report(inst).at(ConditionId::d).verdict, Verdict::fails);
  EXPECT_FALSE(full_report(inst).theorem2_applicable);
  ConformanceStats stats;
  check_conformance(inst, 5, stats);
  EXPECT_TRUE(stats.conformant());
  EXPECT_EQ(stats.theorem2_hits, 0u);
}

TEST(Conformance, SmallRunHitsEveryTheorem) {
  const ConformanceStats stats = run_conformance({.seed = 42, .instances = 500});
  EXPECT_TRUE(stats.conformant());
  EXPECT_EQ(stats.instances, 500u);
  EXPECT_GT(stats.theorem2_hits, 0u);
  EXPECT_GT(stats.theorem3_hits, 0u);
  EXPECT_GT(stats.theorem4_hits, 0u);
  EXPECT_GT(stats.theorem5_hits, 0u);
  EXPECT_EQ(stats.solver_failures, 0u);
  EXPECT_EQ(stats.bound_violations, 0u);
  EXPECT_EQ(stats.lemma2_violations, 0u);
  EXPECT_EQ(stats.compatibility_mismatches, 0u);
  EXPECT_EQ(stats.uniqueness_implication_violations, 0u);
}

TEST(Propositions, SuiteHolds) {
  const PropositionSuite s = run_proposition_suite(6, 1, 300);
  EXPECT_TRUE(s.holds());
  EXPECT_EQ(s.prop2_exhaustive.cases, 527u);  // 1 + 15 + 511 nonempty relations
  EXPECT_EQ(s.prop2_random.cases, 300u);
  EXPECT_EQ(s.prop1.cases, 300u);
  EXPECT_EQ(s.prop3.cases, 300u);
  EXPECT_GT(s.prop1.premise_hits, 0u);
  EXPECT_GT(s.prop3.premise_hits, 0u);
}
