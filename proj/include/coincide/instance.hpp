#pragma once

#include "coincide/metric.hpp"
#include "coincide/relation.hpp"

#include <optional>

namespace coincide {

/// A finite metric space with a relation, a map pair (f, g), a subspace Y and
/// an optional declared contraction constant.
struct ProblemInstance {
  FiniteMetricSpace space;
  FiniteRelation relation;
  MapTable f;
  MapTable g;
  PointSet y;
  std::optional<double> alpha;

  [[nodiscard]] std::size_t size() const noexcept { return space.size(); }
  [[nodiscard]] const std::string& label(PointId x) const { return space.label(x); }
};

/// Validates sizes and ranges; `y` defaults to the whole ground set.
/// Throws InputError on any inconsistency.
ProblemInstance make_instance(FiniteMetricSpace space, FiniteRelation relation, MapTable f, MapTable g,
                              std::optional<PointSet> y = std::nullopt,
                              std::optional<double> alpha = std::nullopt);

/// The image m(X) as a sorted set.
PointSet image(const MapTable& m);

/// m1 after m2, i.e. x -> m1(m2(x)).
MapTable compose(const MapTable& m1, const MapTable& m2);

} // namespace coincide
