#pragma once

// Joint Picard iteration g(x_{n+1}) = f(x_n) and the path-contraction
// certificate behind uniqueness of the point of coincidence.

#include "coincide/instance.hpp"

#include <cmath>
#include <concepts>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace coincide {

struct SolverConfig {
  double tol = 1e-9;
  std::size_t max_iter = 1000;
};

enum class SolveStatus { converged, stalled, no_start, preimage_missing };

std::string_view to_string(SolveStatus s);

template <class Point>
struct IterationTrace {
  std::vector<Point> iterates;
  std::vector<Point> g_images;
  std::vector<Point> f_images;
  /// d(g x_n, f x_n), one per iterate.
  std::vector<double> residuals;
  /// d(g x_n, g x_{n+1}), one per completed step.
  std::vector<double> step_gaps;
  /// (g x_n, g x_{n+1}) in R, one per completed step.
  std::vector<bool> preserving_ok;

  [[nodiscard]] std::size_t steps() const noexcept { return step_gaps.size(); }
};

template <class Point>
struct SolveOutcome {
  SolveStatus status = SolveStatus::stalled;
  Point point{};
  double residual = 0.0;
  std::size_t iterations = 0;
  /// alpha^N / (1 - alpha) * d(g x_0, g x_1) at termination, when a
  /// contraction constant is known.
  std::optional<double> bound;
};

template <class Point>
struct SolveResult {
  SolveOutcome<Point> outcome;
  IterationTrace<Point> trace;
};

/// What joint_picard needs from a problem: the maps, the metric, the
/// relation, a choice of g-preimage and a coincidence test.
template <class P>
concept JointIterationProblem = requires(const P& p, const typename P::Point& x, double tol) {
  { p.f(x) } -> std::convertible_to<typename P::Point>;
  { p.g(x) } -> std::convertible_to<typename P::Point>;
  { p.distance(x, x) } -> std::convertible_to<double>;
  { p.related(x, x) } -> std::convertible_to<bool>;
  { p.preimage(x) } -> std::convertible_to<std::optional<typename P::Point>>;
  { p.is_coincidence(x, tol) } -> std::convertible_to<bool>;
  { p.alpha() } -> std::convertible_to<std::optional<double>>;
};

/// alpha^n / (1 - alpha) * d01. Throws DomainError("not a contraction") for
/// alpha outside [0, 1) and DomainError for negative d01.
double error_bound(double alpha, double d01, std::size_t n);

template <JointIterationProblem P>
SolveResult<typename P::Point> joint_picard(const P& problem, const typename P::Point& x0,
                                            const SolverConfig& cfg = {}) {
  using Point = typename P::Point;
  SolveResult<Point> result;
  auto& trace = result.trace;
  auto& out = result.outcome;

  auto record = [&](const Point& x) {
    trace.iterates.push_back(x);
    trace.g_images.push_back(problem.g(x));
    trace.f_images.push_back(problem.f(x));
    trace.residuals.push_back(problem.distance(trace.g_images.back(), trace.f_images.back()));
  };
  auto finish = [&](SolveStatus status) {
    out.status = status;
    out.point = trace.iterates.back();
    out.residual = trace.residuals.back();
    out.iterations = trace.steps();
    if (auto alpha = problem.alpha(); alpha && *alpha >= 0.0 && *alpha < 1.0) {
      const double d01 = trace.step_gaps.empty() ? 0.0 : trace.step_gaps.front();
      out.bound = error_bound(*alpha, d01, out.iterations);
    }
    return result;
  };

  record(x0);
  if (!problem.related(trace.g_images.back(), trace.f_images.back()))
    return finish(SolveStatus::no_start);

  while (true) {
    const Point& x = trace.iterates.back();
    if (problem.is_coincidence(x, cfg.tol))
      return finish(SolveStatus::converged);
    if (trace.steps() >= cfg.max_iter)
      return finish(SolveStatus::stalled);
    const std::optional<Point> next = problem.preimage(trace.f_images.back());
    if (!next)
      return finish(SolveStatus::preimage_missing);
    const Point g_prev = trace.g_images.back();
    record(*next);
    trace.step_gaps.push_back(problem.distance(g_prev, trace.g_images.back()));
    trace.preserving_ok.push_back(problem.related(g_prev, trace.g_images.back()));
  }
}

/// g-preimages of a finite map, smallest index first.
class FinitePreimageOracle {
public:
  explicit FinitePreimageOracle(const MapTable& g);

  [[nodiscard]] std::span<const PointId> preimages(PointId v) const { return table_.at(v); }
  /// Smallest-index preimage of v, if any.
  [[nodiscard]] std::optional<PointId> choose(PointId v) const;

private:
  std::vector<std::vector<PointId>> table_;
};

/// ProblemInstance viewed as a joint-iteration problem. The contraction
/// constant is the declared alpha, or alpha_hat when that is below 1.
class FiniteProblem {
public:
  using Point = PointId;

  explicit FiniteProblem(const ProblemInstance& inst);

  [[nodiscard]] PointId f(PointId x) const { return inst_->f.at(x); }
  [[nodiscard]] PointId g(PointId x) const { return inst_->g.at(x); }
  [[nodiscard]] double distance(PointId x, PointId y) const { return inst_->space.distance(x, y); }
  [[nodiscard]] bool related(PointId x, PointId y) const { return inst_->relation.contains(x, y); }
  [[nodiscard]] std::optional<PointId> preimage(PointId v) const { return oracle_.choose(v); }
  /// Exact table equality; the tolerance is not used on finite instances.
  [[nodiscard]] bool is_coincidence(PointId x, double /*tol*/) const { return g(x) == f(x); }
  [[nodiscard]] std::optional<double> alpha() const { return alpha_; }

  [[nodiscard]] const ProblemInstance& instance() const noexcept { return *inst_; }
  [[nodiscard]] const FinitePreimageOracle& oracle() const noexcept { return oracle_; }

private:
  const ProblemInstance* inst_;
  FinitePreimageOracle oracle_;
  std::optional<double> alpha_;
};

using FiniteSolveResult = SolveResult<PointId>;

inline FiniteSolveResult joint_picard(const ProblemInstance& inst, PointId x0, const SolverConfig& cfg = {}) {
  return joint_picard(FiniteProblem(inst), x0, cfg);
}

/// Record of the path-contraction argument between two coincidence points.
struct PathContraction {
  PointId point_x = 0;  // g x = f x
  PointId point_y = 0;  // g y = f y
  std::optional<double> alpha;
  /// t[n][i] = d(g z_n^i, g z_n^{i+1}).
  std::vector<std::vector<double>> t;
  /// sum_i t[n][i], an upper bound on d(point_x, point_y) for every n.
  std::vector<double> sums;
  /// t[n+1][i] <= alpha * t[n][i] throughout (false when alpha is unknown).
  bool envelope_ok = false;
  /// d(point_x, point_y) <= sums[n] for every n.
  bool triangle_ok = false;
  /// The sums reached zero (finite instances) or tol.
  bool certified_equal = false;
};

/// Runs the joint iteration along every node of `nodes`, a chain in the
/// symmetric closure of R|g(X) from f(x) to f(y). A single node is accepted
/// when f(x) = f(y). Throws DomainError naming the first bad link for an
/// invalid chain, or when x, y are not coincidence points.
PathContraction contract_path(const ProblemInstance& inst, PointId x, PointId y, std::span<const PointId> nodes,
                              const SolverConfig& cfg = {});

/// Shortest chain from f(x) to f(y) in the symmetric closure of R|g(X), in
/// original indices. When f(x) = f(y) and no cycle passes through it, the
/// single-node chain is returned.
std::optional<Path> certificate_path(const ProblemInstance& inst, PointId x, PointId y);

} // namespace coincide
