#pragma once

#include "coincide/error.hpp"
#include "coincide/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coincide {

/// Absolute tolerance used when validating metric axioms.
inline constexpr double kMetricTolerance = 1e-9;

enum class MetricAxiom {
  not_square,
  non_finite,
  negative_entry,
  nonzero_diagonal,
  asymmetry,
  zero_off_diagonal,
  triangle,
};

const char* to_string(MetricAxiom axiom);

/// Thrown by validate_metric; (i, j, k) name the offending entries. For a
/// triangle violation d(i,k) > d(i,j) + d(j,k).
class MetricAxiomError : public InputError {
public:
  MetricAxiomError(MetricAxiom axiom, std::size_t i, std::size_t j, std::size_t k);

  MetricAxiom axiom;
  std::size_t i, j, k;
};

class FiniteMetricSpace {
public:
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] double distance(PointId x, PointId y) const { return dist_[x * size() + y]; }
  [[nodiscard]] const std::string& label(PointId x) const { return labels_.at(x); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] std::optional<PointId> index_of(const std::string& label) const;
  /// Row-major copy of the distance table.
  [[nodiscard]] std::vector<std::vector<double>> table() const;

private:
  friend FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& dist,
                                           std::vector<std::string> labels);
  FiniteMetricSpace() = default;

  std::vector<std::string> labels_;
  std::vector<double> dist_;
};

/// Checks the metric axioms within kMetricTolerance and returns the space.
/// Entries within tolerance of symmetric are stored symmetrised (upper
/// triangle wins) and the diagonal is stored as exact zeros. Empty `labels`
/// default to "p0", "p1", ...; duplicate labels are an InputError.
FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& dist,
                                  std::vector<std::string> labels = {});

/// Largest ratio d(fx,fy)/d(gx,gy) over pairs with (gx,gy) in R and gx != gy.
struct ContractionEstimate {
  double alpha_hat = 0.0;
  /// First pair attaining alpha_hat, absent when no pair qualifies.
  std::optional<Edge> witness;
  /// Pairs with (gx,gy) in R, gx == gy but fx != fy: no alpha can work.
  std::vector<Edge> violations;

  [[nodiscard]] bool infeasible() const noexcept { return !violations.empty(); }
  [[nodiscard]] bool satisfies(double alpha) const noexcept { return !infeasible() && alpha_hat <= alpha; }
  [[nodiscard]] bool satisfiable() const noexcept { return !infeasible() && alpha_hat < 1.0; }
};

ContractionEstimate estimate_contraction(const FiniteMetricSpace& space, const FiniteRelation& r,
                                         const MapTable& f, const MapTable& g);

/// d(fx,fy) <= alpha d(gx,gy) for all x, y with (gx,gy) in R.
bool check_contraction(const FiniteMetricSpace& space, const FiniteRelation& r, const MapTable& f,
                       const MapTable& g, double alpha);

/// Same inequality quantified over comparative pairs [gx,gy] in R.
bool check_contraction_symmetrized(const FiniteMetricSpace& space, const FiniteRelation& r,
                                   const MapTable& f, const MapTable& g, double alpha);

} // namespace coincide
