#include "coincide/solver.hpp"

#include "coincide/error.hpp"
#include "coincide/metric.hpp"

#include <algorithm>
#include <numeric>

namespace coincide {

std::string_view to_string(SolveStatus s) {
  switch (s) {
  case SolveStatus::converged: return "converged";
  case SolveStatus::stalled: return "stalled";
  case SolveStatus::no_start: return "no-start";
  case SolveStatus::preimage_missing: return "preimage-missing";
  }
  return "?";
}

double error_bound(double alpha, double d01, std::size_t n) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw DomainError("not a contraction: alpha must lie in [0, 1)");
  if (!(d01 >= 0.0))
    throw DomainError("d(g x0, g x1) must be nonnegative");
  return std::pow(alpha, static_cast<double>(n)) / (1.0 - alpha) * d01;
}

FinitePreimageOracle::FinitePreimageOracle(const MapTable& g) : table_(g.size()) {
  for (PointId x = 0; x < g.size(); ++x)
    table_.at(g[x]).push_back(x);
}

std::optional<PointId> FinitePreimageOracle::choose(PointId v) const {
  const auto& pre = table_.at(v);
  if (pre.empty())
    return std::nullopt;
  return pre.front();
}

FiniteProblem::FiniteProblem(const ProblemInstance& inst) : inst_(&inst), oracle_(inst.g) {
  if (inst.alpha) {
    alpha_ = inst.alpha;
  } else {
    const auto est = estimate_contraction(inst.space, inst.relation, inst.f, inst.g);
    if (est.satisfiable())
      alpha_ = est.alpha_hat;
  }
}

namespace {

void validate_chain(const ProblemInstance& inst, PointId x, PointId y, std::span<const PointId> nodes) {
  const std::size_t n = inst.size();
  if (x >= n || y >= n)
    throw DomainError("point out of range");
  if (inst.g[x] != inst.f[x])
    throw DomainError(inst.label(x) + " is not a coincidence point");
  if (inst.g[y] != inst.f[y])
    throw DomainError(inst.label(y) + " is not a coincidence point");
  if (nodes.empty())
    throw DomainError("empty path");
  for (PointId v : nodes)
    if (v >= n)
      throw DomainError("path node out of range");
  if (nodes.front() != inst.f[x])
    throw DomainError("path starts at " + inst.label(nodes.front()) + ", expected f(" + inst.label(x) +
                      ") = " + inst.label(inst.f[x]));
  if (nodes.back() != inst.f[y])
    throw DomainError("path ends at " + inst.label(nodes.back()) + ", expected f(" + inst.label(y) +
                      ") = " + inst.label(inst.f[y]));
  const PointSet g_image = image(inst.g);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!std::binary_search(g_image.begin(), g_image.end(), nodes[i]))
      throw DomainError("path node " + std::to_string(i) + " (" + inst.label(nodes[i]) + ") is not in g(X)");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!comparative(inst.relation, nodes[i], nodes[i + 1]))
      throw DomainError("bad link " + std::to_string(i) + ": " + inst.label(nodes[i]) + " and " +
                        inst.label(nodes[i + 1]) + " are not R-comparative");
}

} // namespace

PathContraction contract_path(const ProblemInstance& inst, PointId x, PointId y, std::span<const PointId> nodes,
                              const SolverConfig& cfg) {
  validate_chain(inst, x, y, nodes);
  const FiniteProblem problem(inst);

  PathContraction pc;
  pc.point_x = inst.g[x];
  pc.point_y = inst.g[y];
  pc.alpha = problem.alpha();

  // z^0 and z^k stay at the coincidence points; the interior nodes start at
  // preimages of the chain and follow the joint iteration.
  std::vector<PointId> z(nodes.size());
  z.front() = x;
  z.back() = y;
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
    z[i] = *problem.preimage(nodes[i]);

  const double target = inst.space.distance(pc.point_x, pc.point_y);
  const double slack = 1.0 + 1e-12;
  pc.envelope_ok = pc.alpha.has_value();
  pc.triangle_ok = true;

  for (std::size_t round = 0;; ++round) {
    std::vector<double> t;
    for (std::size_t i = 0; i + 1 < z.size(); ++i)
      t.push_back(inst.space.distance(problem.g(z[i]), problem.g(z[i + 1])));
    const double sum = std::accumulate(t.begin(), t.end(), 0.0);
    if (target > sum * slack + kMetricTolerance)
      pc.triangle_ok = false;
    if (pc.alpha && !pc.t.empty()) {
      const auto& prev = pc.t.back();
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] > *pc.alpha * prev[i] * slack)
          pc.envelope_ok = false;
    }
    pc.t.push_back(std::move(t));
    pc.sums.push_back(sum);
    if (sum == 0.0 || sum <= cfg.tol) {
      pc.certified_equal = true;
      break;
    }
    if (round >= cfg.max_iter)
      break;
    for (std::size_t i = 1; i + 1 < z.size(); ++i) {
      const auto next = problem.preimage(problem.f(z[i]));
      if (!next)
        throw DomainError("f(" + inst.label(z[i]) + ") has no g-preimage");
      z[i] = *next;
    }
  }
  return pc;
}

std::optional<Path> certificate_path(const ProblemInstance& inst, PointId x, PointId y) {
  const Restriction on_g = restrict(inst.relation, image(inst.g));
  const auto from = on_g.local_index(inst.f.at(x));
  const auto to = on_g.local_index(inst.f.at(y));
  if (!from || !to)
    return std::nullopt;
  auto local = find_path(symmetric_closure(on_g.relation), *from, *to);
  if (!local && *from == *to)
    return Path{{inst.f[x]}};
  if (!local)
    return std::nullopt;
  for (auto& v : local->nodes)
    v = on_g.members[v];
  return local;
}

} // namespace coincide
