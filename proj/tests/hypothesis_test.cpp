#include "coincide/hypothesis.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace coincide;

namespace {

std::vector<std::string> labels(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST(Strings, RoundTrip) {
  for (int i = 0; i <= static_cast<int>(ConditionId::e_prime3); ++i) {
    const auto id = static_cast<ConditionId>(i);
    EXPECT_EQ(condition_from_string(to_string(id)), id);
  }
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::holds_degenerately})
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  EXPECT_EQ(to_string(ConditionId::e_prime1), "(e'1)");
  EXPECT_EQ(to_string(Verdict::holds_degenerately), "holds-degenerately");
  EXPECT_FALSE(condition_from_string("(z)"));
}

TEST(T3, EveryConditionButCompletenessHolds) {
  const HypothesisReport r = full_report(fixtures::t3());
  for (const auto& c : r.conditions)
    if (c.id != ConditionId::u1_prime)
      EXPECT_TRUE(c.satisfied()) << to_string(c.id) << " " << c.note;
  // R on f(X) = {p0, p1} lacks the loop at p1, so it is not complete.
  EXPECT_EQ(r.at(ConditionId::u1_prime).verdict, Verdict::fails);
  EXPECT_EQ(r.at(ConditionId::u1_prime).witness, labels({"p1", "p1"}));
  EXPECT_DOUBLE_EQ(r.alpha_hat, 0.5);
  EXPECT_EQ(r.alpha, std::optional<double>(0.5));
  EXPECT_EQ(r.starting_points, labels({"p0"}));
  EXPECT_TRUE(r.theorem2_applicable);
  EXPECT_TRUE(r.theorem3_applicable);
  EXPECT_TRUE(r.theorem4_applicable);
  EXPECT_TRUE(r.theorem5_applicable);
}

TEST(T3, SequentialConditionsAreDegenerate) {
  const HypothesisReport r = full_report(fixtures::t3());
  for (ConditionId id : {ConditionId::e2, ConditionId::e3, ConditionId::e_prime2}) {
    EXPECT_EQ(r.at(id).verdict, Verdict::holds_degenerately);
    EXPECT_FALSE(r.at(id).note.empty());
  }
  EXPECT_EQ(r.at(ConditionId::e1).verdict, Verdict::holds);
}

TEST(ExampleTwoFinite, Verdicts) {
  const ProblemInstance inst = fixtures::example2_finite();
  const HypothesisReport r = full_report(inst);
  EXPECT_TRUE(r.at(ConditionId::a).satisfied());
  EXPECT_TRUE(r.at(ConditionId::b).satisfied());
  EXPECT_TRUE(r.at(ConditionId::c).satisfied());
  EXPECT_TRUE(r.at(ConditionId::d).satisfied());
  EXPECT_EQ(r.alpha_hat, 0.0);

  const ConditionResult& e1 = r.at(ConditionId::e1);
  EXPECT_EQ(e1.verdict, Verdict::fails);
  EXPECT_EQ(e1.witness, labels({"-2"}));

  EXPECT_TRUE(r.at(ConditionId::e_prime1).satisfied());
  EXPECT_TRUE(r.at(ConditionId::e_prime2).satisfied());
  EXPECT_TRUE(r.at(ConditionId::u1).satisfied());
  EXPECT_FALSE(r.at(ConditionId::u2).satisfied());
  EXPECT_FALSE(r.at(ConditionId::e_prime3).satisfied());

  EXPECT_TRUE(r.theorem2_applicable);
  EXPECT_TRUE(r.theorem3_applicable);
  EXPECT_FALSE(r.theorem4_applicable);
  EXPECT_FALSE(r.theorem5_applicable);
  EXPECT_EQ(r.starting_points, labels({"-2", "2"}));
}

TEST(ExampleTwoFinite, WeakCompatibilityWitness) {
  const ProblemInstance inst = fixtures::example2_finite();
  EXPECT_EQ(weak_compatibility_violation(inst), std::optional<PointId>(0));
  EXPECT_EQ(r_compatibility_violation(inst), std::optional<PointId>(0));
  const CommutationLadder l = check_commutation_ladder(inst);
  EXPECT_FALSE(l.commuting);
  EXPECT_FALSE(l.weakly_commuting);
  EXPECT_FALSE(l.compatible);
  EXPECT_FALSE(l.r_compatible);
  EXPECT_FALSE(l.weakly_compatible);
}

TEST(RangeInclusion, FailureNamesThePoint) {
  // f(X) = {1} but g(X) = {0}.
  const ProblemInstance inst =
      make_instance(fixtures::line({0, 1}), FiniteRelation(2, {{0, 0}}), {1, 1}, {0, 0});
  const ConditionResult a = check_range_inclusion(inst);
  EXPECT_EQ(a.verdict, Verdict::fails);
  EXPECT_EQ(a.witness, labels({"p0"}));
}

TEST(RangeInclusion, RespectsSubspaceY) {
  const ProblemInstance inst =
      make_instance(fixtures::line({0, 1}), FiniteRelation(2, {{0, 0}}), {1, 1}, {0, 1}, PointSet{0});
  EXPECT_EQ(check_range_inclusion(inst).verdict, Verdict::fails);
}

TEST(StartingPoints, EmptyMeansTheoremTwoDoesNotApply) {
  // (g x, f x) = (x, 1 - x) never lies in R = {(0,0)}.
  const ProblemInstance inst = make_instance(fixtures::line({0, 1}), FiniteRelation(2, {{0, 0}}), {1, 0}, {0, 1});
  EXPECT_TRUE(find_starting_points(inst).empty());
  EXPECT_EQ(check_starting_points(inst).verdict, Verdict::fails);
  EXPECT_FALSE(full_report(inst).theorem2_applicable);
}

TEST(Contraction, DeclaredAlphaOutOfRangeFails) {
  ProblemInstance inst = fixtures::t3();
  inst.alpha = 1.0;
  EXPECT_EQ(check_contraction_condition(inst).verdict, Verdict::fails);
  inst.alpha = 0.4;
  EXPECT_EQ(check_contraction_condition(inst).verdict, Verdict::fails);
  inst.alpha = std::nullopt;
  EXPECT_EQ(check_contraction_condition(inst).verdict, Verdict::holds);
}

TEST(Ladder, IdentityMapsSatisfyEverything) {
  const ProblemInstance inst =
      make_instance(fixtures::line({0, 1, 3}), FiniteRelation(3, {{0, 1}}), {0, 1, 2}, {0, 1, 2});
  const CommutationLadder l = check_commutation_ladder(inst);
  EXPECT_TRUE(l.commuting && l.weakly_commuting && l.compatible && l.r_compatible && l.weakly_compatible);
}

TEST(Ladder, RCompatibilityDoesNotImplyWeakCompatibility) {
  // The only coincidence point x = 0 has common value 1, and (1,1) is not in
  // R, so R-compatibility holds vacuously while g f 0 = 0 != 1 = f g 0.
  const ProblemInstance inst = make_instance(fixtures::line({0, 1}), FiniteRelation(2, {{0, 1}}), {1, 1}, {1, 0});
  const CommutationLadder l = check_commutation_ladder(inst);
  EXPECT_TRUE(l.r_compatible);
  EXPECT_FALSE(l.weakly_compatible);
  EXPECT_FALSE(l.compatible);
}

TEST(Assess, Conjunctions) {
  std::vector<ConditionResult> cs;
  for (int i = 0; i <= static_cast<int>(ConditionId::e_prime3); ++i)
    cs.push_back({static_cast<ConditionId>(i), Verdict::holds, {}, {}});
  Applicability a = assess(cs);
  EXPECT_TRUE(a.theorem2 && a.theorem3 && a.theorem4 && a.theorem5);

  cs[static_cast<int>(ConditionId::e_prime1)].verdict = Verdict::fails;
  a = assess(cs);
  EXPECT_TRUE(a.theorem2);
  EXPECT_TRUE(a.theorem4);
  EXPECT_FALSE(a.theorem5);

  cs[static_cast<int>(ConditionId::e1)].verdict = Verdict::fails;
  a = assess(cs);
  EXPECT_FALSE(a.theorem2);
  EXPECT_FALSE(a.theorem3);

  cs.pop_back();
  cs[static_cast<int>(ConditionId::e1)].verdict = Verdict::holds;
  EXPECT_FALSE(assess(cs).theorem5);
}

TEST(Uniqueness, U1FailsWhenFImageLeavesGImage) {
  const ProblemInstance inst = make_instance(fixtures::line({0, 1}), FiniteRelation(2, {{0, 0}}), {1, 1}, {0, 0});
  const auto u = check_uniqueness_conditions(inst);
  EXPECT_EQ(u[0].id, ConditionId::u1);
  EXPECT_EQ(u[0].verdict, Verdict::fails);
}

TEST(Uniqueness, T3PathBetweenFImagePoints) {
  const auto u = check_uniqueness_conditions(fixtures::t3());
  EXPECT_EQ(u[0].verdict, Verdict::holds);
  EXPECT_EQ(u[3].id, ConditionId::u2);
  EXPECT_EQ(u[3].verdict, Verdict::holds);
}
