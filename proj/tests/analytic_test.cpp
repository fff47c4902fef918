#include "coincide/analytic.hpp"
#include "coincide/error.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace coincide;

namespace {

Real r(std::int64_t n, std::int64_t d = 1) { return Real(Rational(n, d)); }

std::vector<Real> ints(int lo, int hi) {
  std::vector<Real> out;
  for (int x = lo; x <= hi; ++x)
    out.push_back(r(x));
  return out;
}

const DemoCheck* find_check(const DemoReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

} // namespace

TEST(Quadratic, RootsAreExactWhenPossible) {
  const auto roots = real_roots({Rational(1), Rational(0), Rational(-4)});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(*roots[0].exact, Rational(-2));
  EXPECT_EQ(*roots[1].exact, Rational(2));

  const auto irrational = real_roots({Rational(1), Rational(0), Rational(-2)});
  ASSERT_EQ(irrational.size(), 2u);
  EXPECT_FALSE(irrational[1].is_rational());
  EXPECT_NEAR(irrational[1].value, std::sqrt(2.0), 1e-15);

  EXPECT_EQ(real_roots({Rational(1, 6), Rational(0), Rational(0)}).size(), 1u);
  EXPECT_TRUE(real_roots({Rational(1), Rational(0), Rational(1)}).empty());
  EXPECT_EQ(*real_roots({Rational(0), Rational(-1), Rational(1)})[0].exact, Rational(1));
  EXPECT_THROW(real_roots({}), DomainError);
}

TEST(Quadratic, RangeMinimum) {
  EXPECT_EQ(*range_minimum({Rational(1), Rational(0), Rational(-3)})->exact, Rational(-3));
  EXPECT_EQ(*range_minimum({Rational(1), Rational(2), Rational(0)})->exact, Rational(-1));
  EXPECT_FALSE(range_minimum({Rational(0), Rational(1), Rational(0)}));
}

TEST(ExampleOne, RelationPredicate) {
  const AnalyticProblem p = example1();
  EXPECT_TRUE(p.related(r(9, 2), r(3)));
  EXPECT_FALSE(p.related(r(3), r(9, 2)));
}

TEST(ExampleOne, SampledContractionIsTwoThirdsExactly) {
  const SampledContraction est = sampled_contraction(example1(), ints(-2, 2));
  ASSERT_TRUE(est.exact);
  EXPECT_EQ(*est.exact, Rational(2, 3));
  EXPECT_FALSE(est.violation);
}

TEST(ExampleOne, SampledRelationIsAPreorderButNotAntisymmetric) {
  const SampledRelation s = sample_relation(example1(), ints(-2, 2));
  const RelationClass c = classify(s.relation);
  EXPECT_TRUE(c.reflexive);
  EXPECT_TRUE(c.transitive);
  EXPECT_TRUE(c.preorder);
  EXPECT_FALSE(c.antisymmetric);
}

TEST(ExampleOne, RestrictionToSampledGImage) {
  const AnalyticProblem p = example1();
  const SampledRelation s = sample_relation(p, {r(-2), r(-1), r(0), r(1, 2), r(1), r(2)});
  const PointSet g_image = {2, 3, 5};  // 0, 1/2, 2
  const Restriction res = restrict(s.relation, g_image);
  for (PointId i = 0; i < 3; ++i)
    for (PointId j = 0; j < 3; ++j) {
      const Real u = s.points[g_image[i]], v = s.points[g_image[j]];
      EXPECT_EQ(res.relation.contains(i, j), std::abs(u.value) >= std::abs(v.value));
    }
}

TEST(ExampleOne, SolverTraceFollowsTheGeometricLaw) {
  const AnalyticProblem p = example1();
  const auto res = joint_picard(AnalyticAdapter(p), r(3));
  EXPECT_EQ(res.outcome.status, SolveStatus::converged);
  EXPECT_LE(res.outcome.residual, 1e-9);
  EXPECT_LE(res.outcome.iterations, 60u);
  for (std::size_t n = 0; n < res.trace.g_images.size(); ++n) {
    const double expected = 4.5 * std::pow(2.0 / 3.0, static_cast<double>(n));
    EXPECT_NEAR(res.trace.g_images[n].value / expected, 1.0, 1e-9) << n;
  }
}

TEST(ExampleOne, DemoMatches) {
  const DemoReport rep = run_demo("example1");
  for (const auto& c : rep.checks)
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  EXPECT_EQ(rep.coincidence_points, std::vector<std::string>{"0"});
  EXPECT_EQ(rep.points_of_coincidence, std::vector<std::string>{"0"});
  EXPECT_EQ(rep.common_fixed_points, std::vector<std::string>{"0"});
  EXPECT_TRUE(rep.hypotheses.theorem2_applicable);
  EXPECT_TRUE(rep.hypotheses.theorem3_applicable);
  EXPECT_TRUE(rep.hypotheses.theorem5_applicable);
  EXPECT_FALSE(rep.hypotheses.theorem4_applicable);
  EXPECT_DOUBLE_EQ(rep.hypotheses.alpha_hat, 2.0 / 3.0);
}

TEST(ExampleTwo, CoincidenceAndFixedPointEquations) {
  const AnalyticProblem p = example2();
  EXPECT_EQ(p.g(r(2)), p.f(r(2)));
  EXPECT_EQ(p.g(r(-2)), p.f(r(-2)));
  EXPECT_EQ(*p.g(r(1)).exact, Rational(-2));
  EXPECT_THROW(p.preimage(r(-4)), DomainError);
  EXPECT_FALSE(AnalyticAdapter(p).preimage(r(-4)));
}

TEST(ExampleTwo, RationalityIsOnlyKnownForTaggedValues) {
  const AnalyticProblem p = example2();
  EXPECT_TRUE(p.related(r(0), r(1, 3)));
  EXPECT_FALSE(p.related(r(0), Real::approx(1.0 / 3.0)));
  EXPECT_FALSE(p.related(r(-1), r(1)));
}

TEST(ExampleTwo, WitnessSequenceKeepsAGapOfThree) {
  const AnalyticProblem p = example2();
  const WitnessDemo w = evaluate_witness(p, *p.e1_witness);
  EXPECT_TRUE(w.premises_ok);
  EXPECT_EQ(w.limit_gap, 3.0);
  for (const auto& [n, gap] : w.gaps)
    EXPECT_EQ(gap, 3.0) << n;
}

TEST(ExampleTwo, RelationOnIntegersIsOnlyTransitive) {
  const RelationClass c = classify(sample_relation(example2(), ints(-3, 3)).relation);
  EXPECT_TRUE(c.transitive);
  EXPECT_FALSE(c.reflexive);
  EXPECT_FALSE(c.irreflexive);
  EXPECT_FALSE(c.symmetric);
  EXPECT_FALSE(c.antisymmetric);
}

TEST(ExampleTwo, OneStepFromRationalStarts) {
  const AnalyticProblem p = example2();
  const AnalyticAdapter a(p);
  for (const Real& x0 : {r(3), r(-3), r(2), r(-5, 2), r(7, 4), r(-7, 4)}) {
    const auto res = joint_picard(a, x0);
    EXPECT_EQ(res.outcome.status, SolveStatus::converged) << x0.str();
    EXPECT_LE(res.outcome.iterations, 1u) << x0.str();
    EXPECT_EQ(*res.outcome.point.exact, Rational(2));
  }
}

TEST(ExampleTwo, DemoMatches) {
  const DemoReport rep = run_demo("example2");
  for (const auto& c : rep.checks)
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  EXPECT_EQ(rep.coincidence_points, (std::vector<std::string>{"-2", "2"}));
  EXPECT_EQ(rep.points_of_coincidence, std::vector<std::string>{"1"});
  EXPECT_TRUE(rep.common_fixed_points.empty());
  EXPECT_EQ(rep.hypotheses.at(ConditionId::e1).verdict, Verdict::fails);
  EXPECT_TRUE(rep.hypotheses.at(ConditionId::e_prime1).satisfied());
  EXPECT_TRUE(rep.hypotheses.theorem2_applicable);
  EXPECT_FALSE(rep.hypotheses.theorem4_applicable);
  EXPECT_FALSE(rep.hypotheses.theorem5_applicable);
}

TEST(BanachUniversal, DemoMatches) {
  const DemoReport rep = run_demo("banach-universal");
  for (const auto& c : rep.checks)
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  EXPECT_EQ(rep.common_fixed_points, std::vector<std::string>{"0"});
  ASSERT_NE(find_check(rep, "theorems 2-5 applicable"), nullptr);
  EXPECT_EQ(rep.runs.size(), 4u);
}

TEST(RunDemo, UnknownName) {
  EXPECT_THROW(run_demo("example3"), InputError);
  EXPECT_EQ(demo_names().size(), 3u);
}

TEST(RunDemo, WrongExpectationIsReportedAsMismatch) {
  AnalyticProblem p = example2();
  p.expected.points_of_coincidence = {r(2)};
  const DemoReport rep = run_analytic_demo(p);
  EXPECT_FALSE(rep.all_match());
  EXPECT_FALSE(find_check(rep, "points of coincidence")->passed);
}

TEST(RunDemo, WrongVerdictIsReportedAsMismatch) {
  AnalyticProblem p = example2();
  p.known_verdicts.emplace_back(ConditionId::e1, true);
  EXPECT_FALSE(run_analytic_demo(p).all_match());
}
