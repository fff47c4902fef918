#pragma once

// Built-in problems on the real line. Points are doubles carrying an exact
// rational tag where one is known; relation predicates that need to know
// whether a value is rational only answer true for tagged values.

#include "coincide/hypothesis.hpp"
#include "coincide/rational.hpp"
#include "coincide/solver.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coincide {

/// a x^2 + b x + c with rational coefficients.
struct Quadratic {
  Rational a, b, c;

  [[nodiscard]] Real operator()(const Real& x) const;
  [[nodiscard]] bool is_zero() const noexcept { return a == 0 && b == 0 && c == 0; }
};

Quadratic operator-(const Quadratic& p, const Quadratic& q);

/// Distinct real roots in increasing order, exact when the discriminant is a
/// rational square. Throws DomainError for the zero polynomial.
std::vector<Real> real_roots(const Quadratic& q);

/// Lower end of the range of q over the reals, or empty when unbounded below.
std::optional<Real> range_minimum(const Quadratic& q);

struct ExpectedSummary {
  std::vector<Real> coincidence_points;
  std::vector<Real> points_of_coincidence;
  std::vector<Real> common_fixed_points;
};

/// A hand-built sequence demonstrating the R-compatibility verdict: it is
/// meant to have R-preserving f- and g-images converging to `limit`.
struct WitnessSequence {
  std::string description;
  std::function<Real(std::size_t)> term;
  Real limit;
};

struct AnalyticProblem {
  std::string name;
  std::function<Real(const Real&)> f;
  std::function<Real(const Real&)> g;
  /// A g-preimage; throws DomainError for values outside g(X).
  std::function<Real(const Real&)> preimage;
  std::function<bool(const Real&, const Real&)> related;
  /// Y = [y_lower, inf), or the whole line when empty.
  std::optional<Rational> y_lower;
  /// The same maps as coefficient lists, used for independent root solving.
  Quadratic f_poly;
  Quadratic g_poly;
  Rational alpha;
  ExpectedSummary expected;
  /// Points on which sampled relation and contraction checks run.
  std::vector<Real> sample;
  std::vector<Real> starts;
  std::optional<WitnessSequence> e1_witness;
  /// Verdicts the problem is known to have; run_demo compares against them.
  std::vector<std::pair<ConditionId, bool>> known_verdicts;

  [[nodiscard]] bool in_y(const Real& x) const { return !y_lower || less_equal(Real(*y_lower), x); }
};

AnalyticProblem example1();
AnalyticProblem example2();

/// Joint-iteration view of an AnalyticProblem.
class AnalyticAdapter {
public:
  using Point = Real;

  explicit AnalyticAdapter(const AnalyticProblem& p) : p_(&p) {}

  [[nodiscard]] Real f(const Real& x) const { return p_->f(x); }
  [[nodiscard]] Real g(const Real& x) const { return p_->g(x); }
  [[nodiscard]] double distance(const Real& x, const Real& y) const { return abs(x - y).value; }
  [[nodiscard]] bool related(const Real& x, const Real& y) const { return p_->related(x, y); }
  [[nodiscard]] std::optional<Real> preimage(const Real& v) const;
  [[nodiscard]] bool is_coincidence(const Real& x, double tol) const;
  [[nodiscard]] std::optional<double> alpha() const { return p_->alpha.to_double(); }

private:
  const AnalyticProblem* p_;
};

/// R on a finite list of points.
struct SampledRelation {
  std::vector<Real> points;
  FiniteRelation relation;
};

/// Throws InputError when no pair of points is related.
SampledRelation sample_relation(const AnalyticProblem& p, std::vector<Real> points);

struct SampledContraction {
  double alpha_hat = 0.0;
  /// Exact value when every ratio was computed in rationals.
  std::optional<Rational> exact;
  /// First pair with g x = g y but f x != f y.
  std::optional<std::pair<Real, Real>> violation;
};

/// max d(fx, fy) / d(gx, gy) over sample pairs with (gx, gy) in R.
SampledContraction sampled_contraction(const AnalyticProblem& p, const std::vector<Real>& sample);

struct WitnessDemo {
  std::string description;
  /// Consecutive g- and f-images related, both converging to the limit.
  bool premises_ok = false;
  /// (n, d(g f x_n, f g x_n)) at the evaluated indices.
  std::vector<std::pair<std::size_t, double>> gaps;
  double limit_gap = 0.0;
};

WitnessDemo evaluate_witness(const AnalyticProblem& p, const WitnessSequence& w);

/// Hypotheses of the coincidence theorems for an analytic problem: range and
/// injectivity conditions from the coefficient forms, relation conditions on
/// the sample, R-compatibility from the witness sequence, and continuity and
/// completeness conditions from the fact that the maps are polynomials and Y
/// is a closed half-line.
HypothesisReport analytic_report(const AnalyticProblem& p);

struct DemoCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DemoRun {
  std::string x0;
  SolveStatus status = SolveStatus::stalled;
  std::size_t iterations = 0;
  std::string endpoint;
  std::string point_of_coincidence;
  double residual = 0.0;
  std::optional<double> bound;
};

struct DemoReport {
  std::string name;
  HypothesisReport hypotheses;
  std::vector<std::string> coincidence_points;
  std::vector<std::string> points_of_coincidence;
  std::vector<std::string> common_fixed_points;
  std::vector<WitnessDemo> witnesses;
  std::vector<DemoRun> runs;
  std::vector<DemoCheck> checks;

  [[nodiscard]] bool all_match() const;
};

std::vector<std::string_view> demo_names();

/// Hypothesis narrative, root solving and solver runs for one problem,
/// compared against its expected summary and known verdicts.
DemoReport run_analytic_demo(const AnalyticProblem& p, const SolverConfig& cfg = {});

/// Throws InputError for an unknown name.
DemoReport run_demo(std::string_view name, const SolverConfig& cfg = {});

/// Points 0, 1, 3, 7 on the line, g the identity, f stepping to the previous
/// point, R = X x X.
ProblemInstance banach_universal_instance();

} // namespace coincide
