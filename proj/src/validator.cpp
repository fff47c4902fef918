#include "coincide/validator.hpp"

#include "coincide/error.hpp"
#include "coincide/hypothesis.hpp"
#include "coincide/oracle.hpp"
#include "coincide/problem_io.hpp"
#include "coincide/rng.hpp"
#include "coincide/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace coincide {

void GeneratorConfig::validate() const {
  if (max_points == 0)
    throw InputError("max_points must be at least 1");
  if (!(edge_density >= 0.0 && edge_density <= 1.0))
    throw InputError("edge_density must lie in [0, 1]");
  if (!(map_bias >= 0.0 && map_bias <= 1.0))
    throw InputError("map_bias must lie in [0, 1]");
}

namespace {

FiniteMetricSpace grid_space(SplitMix64& rng, std::size_t n) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> pts;
  while (pts.size() < n) {
    const int x = static_cast<int>(rng.below(101));
    const int y = static_cast<int>(rng.below(101));
    if (seen.emplace(x, y).second)
      pts.emplace_back(x, y);
  }
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = std::hypot(static_cast<double>(pts[i].first - pts[j].first),
                           static_cast<double>(pts[i].second - pts[j].second));
  return validate_metric(d);
}

std::vector<Edge> random_edges(SplitMix64& rng, std::size_t n, double density) {
  std::vector<Edge> edges;
  for (PointId i = 0; i < n; ++i)
    for (PointId j = 0; j < n; ++j)
      if (rng.chance(density))
        edges.emplace_back(i, j);
  if (edges.empty())
    edges.emplace_back(rng.below(n), rng.below(n));
  return edges;
}

MapTable random_map(SplitMix64& rng, std::size_t n) {
  MapTable m(n);
  for (auto& v : m)
    v = rng.below(n);
  return m;
}

MapTable random_permutation(SplitMix64& rng, std::size_t n) {
  MapTable m(n);
  std::iota(m.begin(), m.end(), PointId{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(m[i - 1], m[rng.below(i)]);
  return m;
}

// c on g(X): either constantly b, or one step toward b (the point of g(X)
// nearest to b among those strictly nearer than v, farthest such first).
PointId step_toward(const FiniteMetricSpace& space, const PointSet& g_image, PointId b, PointId v) {
  const double dv = space.distance(v, b);
  std::optional<PointId> best;
  for (PointId u : g_image) {
    const double du = space.distance(u, b);
    if (du < dv && (!best || du > space.distance(*best, b)))
      best = u;
  }
  return best.value_or(b);
}

} // namespace

ProblemInstance gen_instance(const GeneratorConfig& cfg, std::uint64_t index) {
  cfg.validate();
  SplitMix64 rng = stream_for(cfg.seed, index);
  const std::size_t n = 1 + rng.below(cfg.max_points);
  FiniteMetricSpace space = grid_space(rng, n);
  std::vector<Edge> edges = random_edges(rng, n, cfg.edge_density);

  const MapTable g = rng.chance(0.25) ? random_permutation(rng, n) : random_map(rng, n);
  const PointSet g_image = image(g);
  MapTable f(n);
  if (rng.chance(cfg.map_bias)) {
    const PointId b = g_image[rng.below(g_image.size())];
    const bool constant = rng.chance(0.5);
    for (PointId x = 0; x < n; ++x)
      f[x] = constant ? b : step_toward(space, g_image, b, g[x]);
    edges.emplace_back(b, b);
  } else {
    for (auto& v : f)
      v = g[rng.below(n)];
  }
  std::optional<PointSet> y;
  if (rng.chance(0.5))
    y = g_image;
  return make_instance(std::move(space), FiniteRelation(n, edges), f, g, std::move(y));
}

namespace {

std::string show(const ProblemInstance& inst, const PointSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i)
    out += (i ? ", " : "") + inst.label(set[i]);
  return out + "}";
}

void report(ConformanceStats& stats, const ProblemInstance& inst, std::uint64_t index, std::string theorem,
            std::string expected, std::string observed) {
  if (stats.counterexample)
    return;
  stats.counterexample =
      CounterexampleReport{std::move(theorem), index, problem_to_json(inst), std::move(expected), std::move(observed)};
}

// a^n / (1 - a) d(g x0, g x1) >= d(g x_n, g x_m) for all recorded n < m.
void check_bound(const FiniteSolveResult& res, const ProblemInstance& inst, double alpha, std::uint64_t index,
                 ConformanceStats& stats) {
  const auto& gs = res.trace.g_images;
  if (gs.size() < 2)
    return;
  const double d01 = inst.space.distance(gs[0], gs[1]);
  for (std::size_t n = 0; n < gs.size(); ++n) {
    const double bound = error_bound(alpha, d01, n);
    for (std::size_t m = n + 1; m < gs.size(); ++m) {
      ++stats.bound_checks;
      const double gap = inst.space.distance(gs[n], gs[m]);
      if (gap > bound * (1.0 + 1e-12)) {
        ++stats.bound_violations;
        report(stats, inst, index, "error bound", "d(g x_" + std::to_string(n) + ", g x_" + std::to_string(m) +
                                                      ") <= " + std::to_string(bound),
               std::to_string(gap));
      }
    }
  }
}

} // namespace

void check_conformance(const ProblemInstance& inst, std::uint64_t index, ConformanceStats& stats) {
  ++stats.instances;
  const HypothesisReport h = full_report(inst);
  const CoincidenceSummary s = enumerate(inst);
  const Applicability app = assess(h.conditions);
  stats.branch_e_hits += app.branch_e;
  stats.branch_e_prime_hits += app.branch_e_prime;

  if (h.theorem2_applicable) {
    ++stats.theorem2_hits;
    if (s.coincidence_points.empty())
      report(stats, inst, index, "theorem 2", "C(f,g) nonempty", "C(f,g) = {}");
  }
  if (h.theorem3_applicable) {
    ++stats.theorem3_hits;
    if (s.points_of_coincidence.size() != 1)
      report(stats, inst, index, "theorem 3", "exactly one point of coincidence",
             "points of coincidence " + show(inst, s.points_of_coincidence));
  }
  if (h.theorem4_applicable) {
    ++stats.theorem4_hits;
    if (s.coincidence_points.size() != 1)
      report(stats, inst, index, "theorem 4", "exactly one coincidence point",
             "C(f,g) = " + show(inst, s.coincidence_points));
  }
  if (h.theorem5_applicable) {
    ++stats.theorem5_hits;
    if (s.common_fixed_points.size() != 1)
      report(stats, inst, index, "theorem 5", "exactly one common fixed point",
             "common fixed points " + show(inst, s.common_fixed_points));
  }

  if (h.theorem2_applicable) {
    const FiniteProblem problem(inst);
    for (PointId x0 : find_starting_points(inst)) {
      ++stats.solver_runs;
      const FiniteSolveResult res = joint_picard(problem, x0);
      const bool in_c = std::binary_search(s.coincidence_points.begin(), s.coincidence_points.end(),
                                           res.outcome.point);
      if (res.outcome.status != SolveStatus::converged || !in_c) {
        ++stats.solver_failures;
        report(stats, inst, index, "joint iteration from " + inst.label(x0), "converged in C(f,g)",
               std::string(to_string(res.outcome.status)) + " at " + inst.label(res.outcome.point));
      }
      if (problem.alpha())
        check_bound(res, inst, *problem.alpha(), index, stats);
    }
  }

  const CommutationLadder ladder = check_commutation_ladder(inst);
  const bool chain[5] = {ladder.commuting, ladder.weakly_commuting, ladder.compatible, ladder.r_compatible,
                         ladder.weakly_compatible};
  for (std::size_t k = 0; k < 4; ++k)
    if (chain[k] && !chain[k + 1])
      ++stats.ladder_violations[k];
  if (ladder.compatible != ladder.weakly_compatible)
    ++stats.compatibility_mismatches;

  const Lemma2Check lemma = verify_lemma2(inst);
  if (!lemma.holds()) {
    ++stats.lemma2_violations;
    report(stats, inst, index, "weak-compatibility closure", "every point of coincidence is a coincidence point",
           inst.label(*lemma.witness) + " is not");
  }

  const PointSet f_image = image(inst.f);
  const PointSet g_image = image(inst.g);
  if (std::includes(g_image.begin(), g_image.end(), f_image.begin(), f_image.end())) {
    const bool u1 = h.at(ConditionId::u1).satisfied();
    if (!u1 && (h.at(ConditionId::u1_prime).satisfied() || h.at(ConditionId::u1_double_prime).satisfied()))
      ++stats.uniqueness_implication_violations;
  }
}

ConformanceStats run_conformance(const GeneratorConfig& cfg) {
  cfg.validate();
  ConformanceStats stats;
  for (std::uint64_t i = 0; i < cfg.instances; ++i)
    check_conformance(gen_instance(cfg, i), i, stats);
  return stats;
}

namespace {

void violation(PropositionVerdict& v, std::string what) {
  ++v.violations;
  if (!v.first_violation)
    v.first_violation = std::move(what);
}

bool listed(const FiniteRelation& r, PointId x, PointId y) {
  const auto& e = r.edges();
  return std::find(e.begin(), e.end(), Edge{x, y}) != e.end();
}

void check_prop2(const FiniteRelation& r, PropositionVerdict& v) {
  ++v.cases;
  const FiniteRelation s = symmetric_closure(r);
  for (PointId x = 0; x < r.ground_size(); ++x) {
    for (PointId y = 0; y < r.ground_size(); ++y) {
      const bool in_closure = s.contains(x, y);
      const bool comparative_pair = listed(r, x, y) || listed(r, y, x);
      v.premise_hits += in_closure;
      if (in_closure != comparative_pair)
        violation(v, "n=" + std::to_string(r.ground_size()) + " pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
}

// d(fx,fy) <= alpha d(gx,gy) over pairs selected by `include`.
template <class Include>
bool contraction_over(const FiniteMetricSpace& space, const MapTable& f, const MapTable& g, double alpha,
                      Include include) {
  for (PointId x = 0; x < f.size(); ++x)
    for (PointId y = 0; y < f.size(); ++y)
      if (include(g[x], g[y]) && space.distance(f[x], f[y]) > alpha * space.distance(g[x], g[y]))
        return false;
  return true;
}

struct Triple {
  FiniteMetricSpace space;
  FiniteRelation relation;
  MapTable f;
  MapTable g;
};

Triple random_triple(SplitMix64& rng, std::size_t n_max) {
  const std::size_t n = 1 + rng.below(n_max);
  FiniteMetricSpace space = grid_space(rng, n);
  FiniteRelation relation(n, random_edges(rng, n, 0.2 + 0.4 * rng.uniform()));
  MapTable g = random_map(rng, n);
  MapTable f;
  switch (rng.below(3)) {
  case 0: f = g; break;
  case 1: f = MapTable(n, rng.below(n)); break;
  default: f = random_map(rng, n); break;
  }
  return {std::move(space), std::move(relation), std::move(f), std::move(g)};
}

} // namespace

PropositionSuite run_proposition_suite(std::size_t n_max, std::uint64_t seed, std::size_t trials) {
  if (n_max == 0)
    throw InputError("n_max must be at least 1");
  PropositionSuite suite;
  suite.prop1.name = "contraction over R-related pairs <=> over comparative pairs";
  suite.prop2_exhaustive.name = "symmetric closure <=> comparative (exhaustive, n <= 3)";
  suite.prop2_random.name = "symmetric closure <=> comparative (random, n <= " + std::to_string(n_max) + ")";
  suite.prop3.name = "R (f,g)-closed => symmetric closure (f,g)-closed";

  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t cells = n * n;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t c = 0; c < cells; ++c)
        if (mask >> c & 1)
          edges.emplace_back(c / n, c % n);
      check_prop2(FiniteRelation(n, edges), suite.prop2_exhaustive);
    }
  }

  SplitMix64 rng2 = stream_for(seed, 2);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + rng2.below(n_max);
    check_prop2(FiniteRelation(n, random_edges(rng2, n, 0.2 + 0.4 * rng2.uniform())), suite.prop2_random);
  }

  SplitMix64 rng1 = stream_for(seed, 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const Triple tr = random_triple(rng1, n_max);
    double alpha = rng1.uniform();
    if (rng1.chance(0.5)) {
      const auto est = estimate_contraction(tr.space, tr.relation, tr.f, tr.g);
      if (est.satisfiable())
        alpha = est.alpha_hat;
    }
    ++suite.prop1.cases;
    const bool lhs = contraction_over(tr.space, tr.f, tr.g, alpha,
                                      [&](PointId u, PointId v) { return listed(tr.relation, u, v); });
    const bool rhs = contraction_over(tr.space, tr.f, tr.g, alpha, [&](PointId u, PointId v) {
      return listed(tr.relation, u, v) || listed(tr.relation, v, u);
    });
    suite.prop1.premise_hits += lhs;
    if (lhs != rhs || lhs != check_contraction(tr.space, tr.relation, tr.f, tr.g, alpha) ||
        rhs != check_contraction_symmetrized(tr.space, tr.relation, tr.f, tr.g, alpha))
      violation(suite.prop1, "trial " + std::to_string(t));
  }

  SplitMix64 rng3 = stream_for(seed, 3);
  for (std::size_t t = 0; t < trials; ++t) {
    const Triple tr = random_triple(rng3, n_max);
    ++suite.prop3.cases;
    const bool premise = is_fg_closed(tr.relation, tr.f, tr.g);
    const FiniteRelation s = symmetric_closure(tr.relation);
    bool conclusion = true;
    for (PointId x = 0; x < tr.f.size(); ++x)
      for (PointId y = 0; y < tr.f.size(); ++y)
        if (s.contains(tr.g[x], tr.g[y]) && !s.contains(tr.f[x], tr.f[y]))
          conclusion = false;
    suite.prop3.premise_hits += premise;
    if (premise && !conclusion)
      violation(suite.prop3, "trial " + std::to_string(t));
  }
  return suite;
}

} // namespace coincide
