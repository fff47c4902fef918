#include "coincide/analytic.hpp"

#include "coincide/error.hpp"
#include "coincide/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace coincide {

namespace {

constexpr double kAnalyticTolerance = 1e-9;

bool close(const Real& a, const Real& b) {
  if (a.exact && b.exact)
    return *a.exact == *b.exact;
  return std::abs(a.value - b.value) <= kAnalyticTolerance * std::max(1.0, std::abs(a.value));
}

void push_unique(std::vector<Real>& set, const Real& v) {
  if (std::none_of(set.begin(), set.end(), [&](const Real& u) { return close(u, v); }))
    set.push_back(v);
}

bool same_set(const std::vector<Real>& a, const std::vector<Real>& b) {
  if (a.size() != b.size())
    return false;
  return std::all_of(a.begin(), a.end(), [&](const Real& u) {
    return std::any_of(b.begin(), b.end(), [&](const Real& v) { return close(u, v); });
  });
}

std::string show(const std::vector<Real>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i)
    out += (i ? ", " : "") + set[i].str();
  return out + "}";
}

std::vector<std::string> labels(const std::vector<Real>& set) {
  std::vector<std::string> out;
  for (const auto& v : set)
    out.push_back(v.str());
  return out;
}

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Closed interval with possibly infinite ends.
struct Interval {
  std::optional<Real> lo;
  std::optional<Real> hi;
};

Interval range_of(const Quadratic& p) {
  if (p.a == 0) {
    if (p.b == 0)
      return {Real(p.c), Real(p.c)};
    return {};
  }
  // c - b^2 / (4a) at the vertex.
  const Real vertex = Real(p.c) - Real(p.b) * Real(p.b) / (Real(q(4)) * Real(p.a));
  if (p.a > 0)
    return {vertex, std::nullopt};
  return {std::nullopt, vertex};
}

bool contains(const Interval& outer, const Interval& inner) {
  const bool lo_ok = !outer.lo || (inner.lo && less_equal(*outer.lo, *inner.lo));
  const bool hi_ok = !outer.hi || (inner.hi && less_equal(*inner.hi, *outer.hi));
  return lo_ok && hi_ok;
}

bool one_one(const Quadratic& p) { return p.a == 0 && p.b != 0; }

// Two points with the same value under p, for a map that is not one-one.
std::pair<Real, Real> collision(const Quadratic& p) {
  if (p.a == 0)
    return {Real(q(0)), Real(q(1))};
  const Real vertex = Real(q(0)) - Real(p.b) / (Real(q(2)) * Real(p.a));
  return {vertex - Real(q(1)), vertex + Real(q(1))};
}

ConditionResult result(ConditionId id, bool ok, std::vector<std::string> witness, std::string note) {
  return ConditionResult{id, ok ? Verdict::holds : Verdict::fails, std::move(witness), std::move(note)};
}

std::vector<Real> coincidence_roots(const AnalyticProblem& p) { return real_roots(p.g_poly - p.f_poly); }

} // namespace

Real Quadratic::operator()(const Real& x) const { return Real(a) * x * x + Real(b) * x + Real(c); }

Quadratic operator-(const Quadratic& p, const Quadratic& r) {
  auto diff = [](const Rational& u, const Rational& v) {
    auto d = sub(u, v);
    if (!d)
      throw DomainError("coefficient overflow");
    return *d;
  };
  return {diff(p.a, r.a), diff(p.b, r.b), diff(p.c, r.c)};
}

std::vector<Real> real_roots(const Quadratic& p) {
  if (p.is_zero())
    throw DomainError("every point is a root of the zero polynomial");
  std::vector<Real> roots;
  if (p.a == 0) {
    if (p.b != 0)
      roots.push_back((Real(q(0)) - Real(p.c)) / Real(p.b));
    return roots;
  }
  const Real disc = Real(p.b) * Real(p.b) - Real(q(4)) * Real(p.a) * Real(p.c);
  if (disc.value < 0.0)
    return roots;
  const Real s = sqrt(disc);
  const Real two_a = Real(q(2)) * Real(p.a);
  push_unique(roots, (Real(q(0)) - Real(p.b) - s) / two_a);
  push_unique(roots, (Real(q(0)) - Real(p.b) + s) / two_a);
  std::sort(roots.begin(), roots.end(), [](const Real& u, const Real& v) { return u.value < v.value; });
  return roots;
}

std::optional<Real> range_minimum(const Quadratic& p) { return range_of(p).lo; }

AnalyticProblem example1() {
  AnalyticProblem p;
  p.name = "example1";
  p.f = [](const Real& x) { return x * x / Real(q(3)); };
  p.g = [](const Real& x) { return x * x / Real(q(2)); };
  p.preimage = [](const Real& v) {
    if (v.value < 0.0)
      throw DomainError("no g-preimage below 0");
    return sqrt(Real(q(2)) * v);
  };
  p.related = [](const Real& x, const Real& y) { return less_equal(abs(y), abs(x)); };
  p.y_lower = q(0);
  p.f_poly = {q(1, 3), q(0), q(0)};
  p.g_poly = {q(1, 2), q(0), q(0)};
  p.alpha = q(3, 4);
  p.expected = {{Real(q(0))}, {Real(q(0))}, {Real(q(0))}};
  for (int x = -2; x <= 2; ++x)
    p.sample.emplace_back(q(x));
  p.starts = {Real(q(3)), Real(q(-3)), Real(q(1, 2)), Real(q(10))};
  p.e1_witness = WitnessSequence{"x_n = 1/(n+1)", [](std::size_t n) { return Real(q(1, static_cast<std::int64_t>(n) + 1)); },
                                 Real(q(0))};
  p.known_verdicts = {{ConditionId::a, true},        {ConditionId::b, true},  {ConditionId::c, true},
                      {ConditionId::d, true},        {ConditionId::e1, true}, {ConditionId::e_prime1, true},
                      {ConditionId::u1, true},       {ConditionId::u2, false}, {ConditionId::e_prime3, true}};
  return p;
}

AnalyticProblem example2() {
  AnalyticProblem p;
  p.name = "example2";
  p.f = [](const Real&) { return Real(q(1)); };
  p.g = [](const Real& x) { return x * x - Real(q(3)); };
  p.preimage = [](const Real& v) {
    if (v.value < -3.0)
      throw DomainError("no g-preimage below -3");
    return sqrt(v + Real(q(3)));
  };
  p.related = [](const Real& x, const Real& y) { return x.value >= 0.0 && y.is_rational(); };
  p.y_lower = q(-3);
  p.f_poly = {q(0), q(0), q(1)};
  p.g_poly = {q(1), q(0), q(-3)};
  p.alpha = q(1, 2);
  p.expected = {{Real(q(-2)), Real(q(2))}, {Real(q(1))}, {}};
  for (int x = -3; x <= 3; ++x)
    p.sample.emplace_back(q(x));
  p.starts = {Real(q(3)), Real(q(-3)), Real(q(2)), Real(q(-5, 2)), Real(q(7, 4))};
  p.e1_witness = WitnessSequence{
      "x_n = 2 + 1/(n+1)",
      [](std::size_t n) { return Real(q(2)) + Real(q(1, static_cast<std::int64_t>(n) + 1)); }, Real(q(1))};
  p.known_verdicts = {{ConditionId::a, true},  {ConditionId::b, true},        {ConditionId::c, true},
                      {ConditionId::d, true},  {ConditionId::e1, false},      {ConditionId::e_prime1, true},
                      {ConditionId::e_prime2, true}, {ConditionId::u2, false}, {ConditionId::e_prime3, false}};
  return p;
}

std::optional<Real> AnalyticAdapter::preimage(const Real& v) const {
  try {
    return p_->preimage(v);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

bool AnalyticAdapter::is_coincidence(const Real& x, double tol) const {
  const Real gx = g(x), fx = f(x);
  if (gx.exact && fx.exact)
    return *gx.exact == *fx.exact;
  return std::abs(gx.value - fx.value) <= tol;
}

SampledRelation sample_relation(const AnalyticProblem& p, std::vector<Real> points) {
  std::vector<Edge> edges;
  for (PointId i = 0; i < points.size(); ++i)
    for (PointId j = 0; j < points.size(); ++j)
      if (p.related(points[i], points[j]))
        edges.emplace_back(i, j);
  FiniteRelation r(points.size(), edges);
  return {std::move(points), std::move(r)};
}

SampledContraction sampled_contraction(const AnalyticProblem& p, const std::vector<Real>& sample) {
  SampledContraction out;
  std::optional<Real> best;
  bool exact = true;
  for (const auto& x : sample) {
    for (const auto& y : sample) {
      const Real gx = p.g(x), gy = p.g(y);
      if (!p.related(gx, gy))
        continue;
      const Real fx = p.f(x), fy = p.f(y);
      if (gx == gy) {
        if (!(fx == fy) && !out.violation)
          out.violation = std::make_pair(x, y);
        continue;
      }
      const Real ratio = abs(fx - fy) / abs(gx - gy);
      exact = exact && ratio.is_rational();
      if (!best || !less_equal(ratio, *best))
        best = ratio;
    }
  }
  if (best) {
    out.alpha_hat = best->value;
    if (exact)
      out.exact = best->exact;
  } else {
    out.exact = q(0);
  }
  return out;
}

WitnessDemo evaluate_witness(const AnalyticProblem& p, const WitnessSequence& w) {
  WitnessDemo demo;
  demo.description = w.description;
  demo.premises_ok = true;
  double g_dist = 0.0, f_dist = 0.0;
  for (std::size_t k = 0; k <= 20; ++k) {
    const std::size_t n = (std::size_t{1} << k) - 1;
    const Real x = w.term(n), next = w.term(n + 1);
    const Real gx = p.g(x), fx = p.f(x);
    if (!p.related(gx, p.g(next)) || !p.related(fx, p.f(next)))
      demo.premises_ok = false;
    demo.gaps.emplace_back(n, abs(p.g(fx) - p.f(gx)).value);
    g_dist = abs(gx - w.limit).value;
    f_dist = abs(fx - w.limit).value;
  }
  // Both image sequences must have reached the limit to within 1e-5 at
  // n = 2^20 - 1.
  if (g_dist > 1e-5 || f_dist > 1e-5)
    demo.premises_ok = false;
  demo.limit_gap = demo.gaps.back().second;
  return demo;
}

HypothesisReport analytic_report(const AnalyticProblem& p) {
  HypothesisReport report;
  auto& out = report.conditions;
  const Interval f_range = range_of(p.f_poly);
  const Interval g_range = range_of(p.g_poly);
  Interval y_range;
  if (p.y_lower)
    y_range.lo = Real(*p.y_lower);

  // (a): f(X) inside g(X) and inside Y.
  {
    Interval target = g_range;
    if (y_range.lo && (!target.lo || less_equal(*target.lo, *y_range.lo)))
      target.lo = y_range.lo;
    const bool ok = contains(target, f_range);
    std::vector<std::string> witness;
    if (!ok)
      witness.push_back(f_range.lo ? f_range.lo->str() : "-inf");
    out.push_back(result(ConditionId::a, ok, witness, "ranges of the coefficient forms"));
  }

  // (b): (f,g)-closedness on sample pairs.
  {
    std::vector<std::string> witness;
    for (const auto& x : p.sample) {
      for (const auto& y : p.sample) {
        if (witness.empty() && p.related(p.g(x), p.g(y)) && !p.related(p.f(x), p.f(y)))
          witness = {x.str(), y.str()};
      }
    }
    out.push_back(result(ConditionId::b, witness.empty(), witness, "checked on the sample points"));
  }

  // (c): admissible starting points among the sample and configured starts.
  {
    std::vector<Real> candidates = p.sample;
    for (const auto& s : p.starts)
      push_unique(candidates, s);
    for (const auto& x : candidates)
      if (p.related(p.g(x), p.f(x)))
        report.starting_points.push_back(x.str());
    out.push_back(result(ConditionId::c, !report.starting_points.empty(), report.starting_points,
                         "searched among the sample points and configured starts"));
  }

  // (d): declared alpha against the sampled ratio.
  {
    const SampledContraction est = sampled_contraction(p, p.sample);
    report.alpha_hat = est.exact ? est.exact->to_double() : est.alpha_hat;
    report.contraction_feasible = !est.violation;
    report.alpha = p.alpha.to_double();
    const bool in_range = p.alpha >= 0 && p.alpha < 1;
    const bool covers = est.exact ? *est.exact <= p.alpha : est.alpha_hat <= p.alpha.to_double();
    std::vector<std::string> witness;
    if (est.violation)
      witness = {est.violation->first.str(), est.violation->second.str()};
    out.push_back(result(ConditionId::d, in_range && covers && !est.violation, witness,
                         "sampled alpha_hat " + (est.exact ? est.exact->str() : std::to_string(est.alpha_hat)) +
                             ", declared alpha " + p.alpha.str()));
  }

  // (e1) from the witness sequence; (e2), (e3) since f and g are polynomials.
  if (p.e1_witness) {
    const WitnessDemo demo = evaluate_witness(p, *p.e1_witness);
    const bool fails = demo.premises_ok && demo.limit_gap > 1e-6;
    std::vector<std::string> witness;
    if (fails)
      witness = {p.e1_witness->description};
    out.push_back(result(ConditionId::e1, !fails, witness,
                         p.e1_witness->description + ": d(gf x_n, fg x_n) -> " + Real::approx(demo.limit_gap).str()));
  } else {
    out.push_back(result(ConditionId::e1, true, {}, "no witness sequence registered"));
  }
  out.push_back(result(ConditionId::e2, true, {}, "g is a polynomial, hence continuous"));
  out.push_back(result(ConditionId::e3, true, {}, "f is a polynomial, hence continuous"));

  // (e'1) Y inside g(X); (e'2) Y is a closed half-line (or the line) and the
  // maps are continuous.
  {
    const bool ok = contains(g_range, y_range);
    std::vector<std::string> witness;
    if (!ok)
      witness.push_back(y_range.lo ? y_range.lo->str() : "-inf");
    out.push_back(result(ConditionId::e_prime1, ok, witness, "Y against the range of g"));
    out.push_back(result(ConditionId::e_prime2, true, {}, "Y is closed and g, f are continuous"));
  }

  // u1, u1', u1'' on the sampled images; f(X) inside g(X) is already (a).
  {
    std::vector<Real> nodes;
    std::vector<Real> f_values;
    for (const auto& x : p.sample) {
      push_unique(nodes, p.g(x));
      push_unique(f_values, p.f(x));
    }
    for (const auto& v : f_values)
      push_unique(nodes, v);
    std::vector<PointId> f_local;
    for (const auto& v : f_values)
      for (PointId i = 0; i < nodes.size(); ++i)
        if (close(nodes[i], v))
          f_local.push_back(i);
    std::sort(f_local.begin(), f_local.end());

    const SampledRelation sampled = sample_relation(p, nodes);
    const FiniteRelation sym = symmetric_closure(sampled.relation);
    if (auto v = connectivity_violation(sym, f_local))
      out.push_back(result(ConditionId::u1, false, {nodes[v->first].str(), nodes[v->second].str()},
                           "no R^s path on the sampled g-image"));
    else
      out.push_back(result(ConditionId::u1, true, {}, "checked on the sampled images"));

    const Restriction on_f = restrict(sampled.relation, f_local);
    out.push_back(result(ConditionId::u1_prime, classify(on_f.relation).complete, {},
                         "completeness of R on the sampled f-image"));
    if (auto v = directedness_violation(sym, f_local))
      out.push_back(result(ConditionId::u1_double_prime, false,
                           {nodes[v->first].str(), nodes[v->second].str()}, "no common bound on the sample"));
    else
      out.push_back(result(ConditionId::u1_double_prime, true, {}, "checked on the sampled images"));
  }

  // u2 from the coefficient forms.
  if (one_one(p.f_poly)) {
    out.push_back(result(ConditionId::u2, true, {}, "f is one-one"));
  } else if (one_one(p.g_poly)) {
    out.push_back(result(ConditionId::u2, true, {}, "g is one-one"));
  } else {
    const auto [f1, f2] = collision(p.f_poly);
    const auto [g1, g2] = collision(p.g_poly);
    out.push_back(result(ConditionId::u2, false, {f1.str(), f2.str(), g1.str(), g2.str()},
                         "neither f nor g is one-one"));
  }

  // (e'3) at the coincidence points found by root solving.
  {
    std::vector<std::string> witness;
    for (const auto& x : coincidence_roots(p))
      if (witness.empty() && !close(p.g(p.f(x)), p.f(p.g(x))))
        witness.push_back(x.str());
    out.push_back(result(ConditionId::e_prime3, witness.empty(), witness,
                         witness.empty() ? "g f x = f g x at every coincidence point"
                                         : "g f x != f g x at " + witness.front()));
  }

  const Applicability app = assess(out);
  report.theorem2_applicable = app.theorem2;
  report.theorem3_applicable = app.theorem3;
  report.theorem4_applicable = app.theorem4;
  report.theorem5_applicable = app.theorem5;
  return report;
}

bool DemoReport::all_match() const {
  return std::all_of(checks.begin(), checks.end(), [](const DemoCheck& c) { return c.passed; });
}

std::vector<std::string_view> demo_names() { return {"example1", "example2", "banach-universal"}; }

namespace {

void check(DemoReport& r, std::string name, bool passed, std::string detail = {}) {
  r.checks.push_back({std::move(name), passed, std::move(detail)});
}

void check_applicability(DemoReport& r, std::size_t c, std::size_t cbar, std::size_t fixed) {
  const auto& h = r.hypotheses;
  check(r, "theorem 2 conclusion", !h.theorem2_applicable || c > 0);
  check(r, "theorem 3 conclusion", !h.theorem3_applicable || cbar == 1);
  check(r, "theorem 4 conclusion", !h.theorem4_applicable || c == 1);
  check(r, "theorem 5 conclusion", !h.theorem5_applicable || fixed == 1);
}

} // namespace

DemoReport run_analytic_demo(const AnalyticProblem& p, const SolverConfig& cfg) {
  DemoReport r;
  r.name = p.name;
  r.hypotheses = analytic_report(p);

  const std::vector<Real> c = coincidence_roots(p);
  std::vector<Real> cbar;
  for (const auto& x : c) {
    check(r, "g x = f x at " + x.str(), close(p.g(x), p.f(x)));
    push_unique(cbar, p.g(x));
  }
  std::vector<Real> fixed;
  for (const auto& x : real_roots(p.f_poly - Quadratic{q(0), q(1), q(0)}))
    if (close(p.g(x), x))
      push_unique(fixed, x);
  r.coincidence_points = labels(c);
  r.points_of_coincidence = labels(cbar);
  r.common_fixed_points = labels(fixed);

  const ExpectedSummary& e = p.expected;
  check(r, "coincidence points", same_set(c, e.coincidence_points), show(c) + " vs " + show(e.coincidence_points));
  check(r, "points of coincidence", same_set(cbar, e.points_of_coincidence),
        show(cbar) + " vs " + show(e.points_of_coincidence));
  check(r, "common fixed points", same_set(fixed, e.common_fixed_points),
        show(fixed) + " vs " + show(e.common_fixed_points));
  {
    std::vector<Real> images;
    for (const auto& x : e.coincidence_points)
      push_unique(images, p.g(x));
    const bool fixed_ok = std::all_of(e.common_fixed_points.begin(), e.common_fixed_points.end(), [&](const Real& x) {
      return std::any_of(e.coincidence_points.begin(), e.coincidence_points.end(),
                         [&](const Real& y) { return close(x, y); });
    });
    check(r, "expected summary closure", same_set(images, e.points_of_coincidence) && fixed_ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& x : p.sample) {
      const Real v = p.f(x);
      const Real back = p.g(p.preimage(v));
      if (std::abs(back.value - v.value) > cfg.tol) {
        ok = false;
        detail = "g(preimage(" + v.str() + ")) = " + back.str();
      }
    }
    check(r, "preimage round trip", ok, detail);
  }

  for (const auto& [id, expected] : p.known_verdicts) {
    const bool got = r.hypotheses.at(id).satisfied();
    check(r, "verdict " + std::string(to_string(id)), got == expected,
          std::string(expected ? "expected to hold" : "expected to fail") + ", got " +
              std::string(to_string(r.hypotheses.at(id).verdict)));
  }
  check_applicability(r, c.size(), cbar.size(), fixed.size());

  if (p.e1_witness)
    r.witnesses.push_back(evaluate_witness(p, *p.e1_witness));

  const AnalyticAdapter adapter(p);
  for (const auto& x0 : p.starts) {
    const auto res = joint_picard(adapter, x0, cfg);
    const auto& o = res.outcome;
    const Real gx = p.g(o.point);
    DemoRun run{x0.str(), o.status, o.iterations, o.point.str(), gx.str(), o.residual, o.bound};
    const double reach = o.bound.value_or(0.0) + cfg.tol;
    bool ok = o.status == SolveStatus::converged &&
              std::any_of(e.points_of_coincidence.begin(), e.points_of_coincidence.end(),
                          [&](const Real& v) { return std::abs(gx.value - v.value) <= reach; });
    if (o.point.is_rational())
      ok = ok && std::any_of(e.coincidence_points.begin(), e.coincidence_points.end(),
                             [&](const Real& v) { return close(o.point, v); });
    check(r, "solve from " + x0.str(), ok,
          std::string(to_string(o.status)) + " after " + std::to_string(o.iterations) + " steps, g x = " + gx.str());
    r.runs.push_back(std::move(run));
  }
  return r;
}

namespace {

std::vector<std::string> point_labels(const ProblemInstance& inst, const PointSet& set) {
  std::vector<std::string> out;
  for (PointId x : set)
    out.push_back(inst.label(x));
  return out;
}

DemoReport run_banach_universal(const SolverConfig& cfg) {
  const ProblemInstance inst = banach_universal_instance();
  DemoReport r;
  r.name = "banach-universal";
  r.hypotheses = full_report(inst);
  const CoincidenceSummary s = enumerate(inst);
  r.coincidence_points = point_labels(inst, s.coincidence_points);
  r.points_of_coincidence = point_labels(inst, s.points_of_coincidence);
  r.common_fixed_points = point_labels(inst, s.common_fixed_points);

  const auto& h = r.hypotheses;
  check(r, "theorems 2-5 applicable",
        h.theorem2_applicable && h.theorem3_applicable && h.theorem4_applicable && h.theorem5_applicable);

  const RelationClass cls = classify(inst.relation);
  check(r, "R is a complete equivalence", cls.equivalence && cls.complete);
  check(r, "every map pair is (f,g)-closed", is_fg_closed(inst.relation, inst.f, inst.g));

  const CommutationLadder ladder = check_commutation_ladder(inst);
  check(r, "R-compatible equals compatible", ladder.r_compatible == ladder.compatible);

  // With R = X x X the relation-restricted contraction is the classical one.
  double classical = 0.0;
  for (PointId x = 0; x < inst.size(); ++x)
    for (PointId y = 0; y < inst.size(); ++y)
      if (x != y)
        classical = std::max(classical, inst.space.distance(inst.f[x], inst.f[y]) / inst.space.distance(x, y));
  check(r, "alpha_hat equals the classical Lipschitz constant", h.alpha_hat == classical,
        std::to_string(h.alpha_hat) + " vs " + std::to_string(classical));

  check(r, "unique common fixed point", s.common_fixed_points.size() == 1 && s.coincidence_points.size() == 1);
  check_applicability(r, s.coincidence_points.size(), s.points_of_coincidence.size(), s.common_fixed_points.size());

  for (PointId x0 = 0; x0 < inst.size(); ++x0) {
    const auto res = joint_picard(inst, x0, cfg);
    const auto& o = res.outcome;
    r.runs.push_back({inst.label(x0), o.status, o.iterations, inst.label(o.point), inst.label(inst.g[o.point]),
                      o.residual, o.bound});
    check(r, "solve from " + inst.label(x0),
          o.status == SolveStatus::converged && s.common_fixed_points.size() == 1 &&
              o.point == s.common_fixed_points.front(),
          std::string(to_string(o.status)) + " at " + inst.label(o.point));
  }
  return r;
}

} // namespace

DemoReport run_demo(std::string_view name, const SolverConfig& cfg) {
  if (name == "example1")
    return run_analytic_demo(example1(), cfg);
  if (name == "example2")
    return run_analytic_demo(example2(), cfg);
  if (name == "banach-universal")
    return run_banach_universal(cfg);
  throw InputError("unknown demo '" + std::string(name) + "'");
}

ProblemInstance banach_universal_instance() {
  const std::vector<double> xs = {0, 1, 3, 7};
  std::vector<std::vector<double>> d(xs.size(), std::vector<double>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      d[i][j] = std::abs(xs[i] - xs[j]);
  return make_instance(validate_metric(d, {"0", "1", "3", "7"}), universal_relation(xs.size()), {0, 0, 1, 2},
                       {0, 1, 2, 3});
}

} // namespace coincide
