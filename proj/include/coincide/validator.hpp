#pragma once

// Seeded random instances and conformance of the coincidence theorems
// against the brute-force oracle.

#include "coincide/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace coincide {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t instances = 1000;
  std::size_t max_points = 8;
  double edge_density = 0.3;
  /// Probability that f is built as a contraction of g toward a basepoint.
  double map_bias = 0.5;

  /// Throws InputError for max_points == 0 or probabilities outside [0, 1].
  void validate() const;
};

/// Deterministic in (cfg.seed, index). Points are distinct integer grid
/// points in [0,100]^2 with Euclidean distances.
ProblemInstance gen_instance(const GeneratorConfig& cfg, std::uint64_t index);

struct CounterexampleReport {
  std::string theorem;
  std::uint64_t index = 0;
  std::string instance_json;
  std::string expected;
  std::string observed;
};

struct ConformanceStats {
  std::size_t instances = 0;
  std::size_t theorem2_hits = 0;
  std::size_t theorem3_hits = 0;
  std::size_t theorem4_hits = 0;
  std::size_t theorem5_hits = 0;
  std::size_t branch_e_hits = 0;
  std::size_t branch_e_prime_hits = 0;
  /// Joint iterations started from admissible points of applicable instances.
  std::size_t solver_runs = 0;
  std::size_t solver_failures = 0;
  /// Pairs n < m checked against the a-priori error bound.
  std::size_t bound_checks = 0;
  std::size_t bound_violations = 0;
  /// Broken links in commuting => weakly commuting => compatible =>
  /// R-compatible => weakly compatible, per link.
  std::size_t ladder_violations[4] = {0, 0, 0, 0};
  /// Instances where compatible and weakly compatible disagree.
  std::size_t compatibility_mismatches = 0;
  std::size_t lemma2_violations = 0;
  /// u1' or u1'' holding without u1 on instances with f(X) inside g(X).
  std::size_t uniqueness_implication_violations = 0;
  std::optional<CounterexampleReport> counterexample;

  [[nodiscard]] bool conformant() const noexcept { return !counterexample; }
  [[nodiscard]] std::size_t total_ladder_violations() const noexcept {
    return ladder_violations[0] + ladder_violations[1] + ladder_violations[2] + ladder_violations[3];
  }
};

/// Checks one instance and folds the result into `stats`. The first failing
/// theorem conclusion, solver run, error bound or weak-compatibility closure
/// check becomes the counterexample, unless one is already recorded.
void check_conformance(const ProblemInstance& inst, std::uint64_t index, ConformanceStats& stats);

ConformanceStats run_conformance(const GeneratorConfig& cfg);

struct PropositionVerdict {
  std::string name;
  std::size_t cases = 0;
  /// Cases where the premise held (for implications) or the left side held
  /// (for equivalences).
  std::size_t premise_hits = 0;
  std::size_t violations = 0;
  std::optional<std::string> first_violation;

  [[nodiscard]] bool holds() const noexcept { return violations == 0; }
};

struct PropositionSuite {
  PropositionVerdict prop1;
  PropositionVerdict prop2_exhaustive;
  PropositionVerdict prop2_random;
  PropositionVerdict prop3;

  [[nodiscard]] bool holds() const noexcept {
    return prop1.holds() && prop2_exhaustive.holds() && prop2_random.holds() && prop3.holds();
  }
};

/// Symmetric-closure membership against comparativity over every nonempty
/// relation on n <= 3 points and `trials` random relations on n <= n_max;
/// relation-restricted contraction against its comparative form, and
/// (f,g)-closedness of R against that of its symmetric closure, on `trials`
/// seeded triples each.
PropositionSuite run_proposition_suite(std::size_t n_max, std::uint64_t seed = 1, std::size_t trials = 1000);

} // namespace coincide
