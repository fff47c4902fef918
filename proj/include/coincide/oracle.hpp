#pragma once

// Brute-force ground truth on finite instances. Nothing here looks at the
// relation, the metric or any solver state: every set is obtained by a full
// scan of the map tables.

#include "coincide/instance.hpp"

#include <map>
#include <optional>

namespace coincide {

struct CoincidenceSummary {
  /// C(f,g) = {x : g x = f x}.
  PointSet coincidence_points;
  /// Common values g x = f x over C(f,g).
  PointSet points_of_coincidence;
  /// {x : x = g x = f x}.
  PointSet common_fixed_points;
  /// Common value a -> {x : g x = f x = a}.
  std::map<PointId, PointSet> value_classes;
};

CoincidenceSummary enumerate(const ProblemInstance& inst);

struct Lemma2Check {
  bool premise = false;     // f and g weakly compatible
  bool conclusion = false;  // every point of coincidence is a coincidence point
  /// A point of coincidence that is not a coincidence point, when the
  /// implication fails.
  std::optional<PointId> witness;

  [[nodiscard]] bool holds() const noexcept { return !premise || conclusion; }
};

Lemma2Check verify_lemma2(const ProblemInstance& inst);

} // namespace coincide
