#include "coincide/metric.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace coincide {

const char* to_string(MetricAxiom axiom) {
  switch (axiom) {
  case MetricAxiom::not_square: return "distance table is not square";
  case MetricAxiom::non_finite: return "non-finite distance";
  case MetricAxiom::negative_entry: return "negative distance";
  case MetricAxiom::nonzero_diagonal: return "nonzero self-distance";
  case MetricAxiom::asymmetry: return "asymmetric distance";
  case MetricAxiom::zero_off_diagonal: return "zero distance between distinct points";
  case MetricAxiom::triangle: return "triangle inequality violated";
  }
  return "unknown metric axiom";
}

namespace {

std::string describe(MetricAxiom axiom, std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << to_string(axiom);
  if (axiom == MetricAxiom::triangle)
    os << " at (" << i << "," << j << "," << k << "): d(" << i << "," << k << ") > d(" << i << "," << j
       << ") + d(" << j << "," << k << ")";
  else if (axiom != MetricAxiom::not_square)
    os << " at (" << i << "," << j << ")";
  return os.str();
}

} // namespace

MetricAxiomError::MetricAxiomError(MetricAxiom axiom, std::size_t i, std::size_t j, std::size_t k)
    : InputError(describe(axiom, i, j, k)), axiom(axiom), i(i), j(j), k(k) {}

std::optional<PointId> FiniteMetricSpace::index_of(const std::string& label) const {
  for (PointId x = 0; x < labels_.size(); ++x)
    if (labels_[x] == label)
      return x;
  return std::nullopt;
}

std::vector<std::vector<double>> FiniteMetricSpace::table() const {
  std::vector<std::vector<double>> out(size(), std::vector<double>(size()));
  for (PointId x = 0; x < size(); ++x)
    for (PointId y = 0; y < size(); ++y)
      out[x][y] = distance(x, y);
  return out;
}

FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& dist, std::vector<std::string> labels) {
  const std::size_t n = dist.size();
  if (n == 0)
    throw MetricAxiomError(MetricAxiom::not_square, 0, 0, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (dist[i].size() != n)
      throw MetricAxiomError(MetricAxiom::not_square, i, 0, 0);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(dist[i][j]))
        throw MetricAxiomError(MetricAxiom::non_finite, i, j, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dist[i][j] < 0.0)
        throw MetricAxiomError(MetricAxiom::negative_entry, i, j, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (dist[i][i] > kMetricTolerance)
      throw MetricAxiomError(MetricAxiom::nonzero_diagonal, i, i, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(dist[i][j] - dist[j][i]) > kMetricTolerance)
        throw MetricAxiomError(MetricAxiom::asymmetry, i, j, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && dist[i][j] <= kMetricTolerance)
        throw MetricAxiomError(MetricAxiom::zero_off_diagonal, i, j, 0);

  FiniteMetricSpace space;
  space.dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      space.dist_[i * n + j] = dist[i][j];
      space.dist_[j * n + i] = dist[i][j];
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back("p" + std::to_string(i));
  }
  if (labels.size() != n)
    throw InputError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw InputError("duplicate point label \"" + l + "\"");
  space.labels_ = std::move(labels);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (space.distance(i, k) > space.distance(i, j) + space.distance(j, k) + kMetricTolerance)
          throw MetricAxiomError(MetricAxiom::triangle, i, j, k);
  return space;
}

namespace {

void check_maps(const FiniteMetricSpace& space, const FiniteRelation& r, const MapTable& f, const MapTable& g) {
  const std::size_t n = space.size();
  if (r.ground_size() != n || f.size() != n || g.size() != n)
    throw DomainError("space, relation and maps disagree on the number of points");
}

} // namespace

ContractionEstimate estimate_contraction(const FiniteMetricSpace& space, const FiniteRelation& r,
                                         const MapTable& f, const MapTable& g) {
  check_maps(space, r, f, g);
  ContractionEstimate est;
  const std::size_t n = space.size();
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (!r.contains(g[x], g[y]))
        continue;
      if (g[x] == g[y]) {
        if (f[x] != f[y])
          est.violations.emplace_back(x, y);
        continue;
      }
      const double ratio = space.distance(f[x], f[y]) / space.distance(g[x], g[y]);
      if (!est.witness || ratio > est.alpha_hat) {
        est.alpha_hat = ratio;
        est.witness = Edge{x, y};
      }
    }
  }
  return est;
}

bool check_contraction(const FiniteMetricSpace& space, const FiniteRelation& r, const MapTable& f,
                       const MapTable& g, double alpha) {
  check_maps(space, r, f, g);
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y)
      if (r.contains(g[x], g[y]) && space.distance(f[x], f[y]) > alpha * space.distance(g[x], g[y]))
        return false;
  return true;
}

bool check_contraction_symmetrized(const FiniteMetricSpace& space, const FiniteRelation& r,
                                   const MapTable& f, const MapTable& g, double alpha) {
  check_maps(space, r, f, g);
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y)
      if (comparative(r, g[x], g[y]) && space.distance(f[x], f[y]) > alpha * space.distance(g[x], g[y]))
        return false;
  return true;
}

} // namespace coincide
