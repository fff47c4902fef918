#pragma once

// Mechanical verification of the hypotheses of the relation-theoretic
// coincidence theorems on finite instances.
//
// Finite-space reduction: in a finite metric space every convergent sequence
// is eventually constant. Consequently every space and subspace is R-complete
// and R-closed, every map is R-continuous and (g,R)-continuous, and every
// relation is d-self-closed and (g,d)-self-closed. Conditions that only
// assert such sequential properties are reported as holds-degenerately.
//
// The same argument characterises the compatibility notions exactly:
//   compatible    <=> g(f x) = f(g x) for every x with g x = f x
//   R-compatible  <=> the same, restricted to common values a = g x = f x
//                     with (a, a) in R (an eventually constant R-preserving
//                     tail must contain the loop (a, a)).

#include "coincide/instance.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coincide {

enum class ConditionId {
  a,      // f(X) in g(X) and Y
  b,      // R is (f,g)-closed
  c,      // X(f,g,R) nonempty
  d,      // contraction on R-related g-images
  e1,     // R-compatibility
  e2,     // g R-continuous
  e3,     // f R-continuous or R (g,d)-self-closed
  e_prime1,
  e_prime2,
  u1,
  u1_prime,
  u1_double_prime,
  u2,
  e_prime3,
};

std::string_view to_string(ConditionId id);
std::optional<ConditionId> condition_from_string(std::string_view text);

enum class Verdict { holds, fails, holds_degenerately };

std::string_view to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view text);

struct ConditionResult {
  ConditionId id;
  Verdict verdict;
  /// Point labels substantiating the verdict; always present on failure.
  std::vector<std::string> witness;
  std::string note;

  [[nodiscard]] bool satisfied() const noexcept { return verdict != Verdict::fails; }
  friend bool operator==(const ConditionResult&, const ConditionResult&) = default;
};

struct Applicability {
  bool branch_e = false;
  bool branch_e_prime = false;
  bool theorem2 = false;
  bool theorem3 = false;
  bool theorem4 = false;
  bool theorem5 = false;
};

/// Theorem applicability from a condition list; a missing condition counts as
/// failed.
///   theorem2 = (a) (b) (c) (d) and [(e1)(e2)(e3) or (e'1)(e'2)]
///   theorem3 = theorem2 and u1
///   theorem4 = theorem3 and u2
///   theorem5 = theorem3 through the (e') branch and (e'3)
Applicability assess(std::span<const ConditionResult> conditions);

struct HypothesisReport {
  std::vector<ConditionResult> conditions;
  double alpha_hat = 0.0;
  bool contraction_feasible = true;
  std::optional<double> alpha;
  std::vector<std::string> starting_points;
  bool theorem2_applicable = false;
  bool theorem3_applicable = false;
  bool theorem4_applicable = false;
  bool theorem5_applicable = false;

  [[nodiscard]] const ConditionResult& at(ConditionId id) const;
  friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

/// Note attached to every holds-degenerately verdict.
extern const char* const kFiniteReductionNote;

PointSet find_starting_points(const ProblemInstance& inst);

ConditionResult check_range_inclusion(const ProblemInstance& inst);
ConditionResult check_closedness(const ProblemInstance& inst);
ConditionResult check_starting_points(const ProblemInstance& inst);
/// Uses inst.alpha when declared, otherwise requires alpha_hat < 1.
ConditionResult check_contraction_condition(const ProblemInstance& inst);
/// (e1), (e2), (e3).
std::vector<ConditionResult> check_part_e(const ProblemInstance& inst);
/// (e'1), (e'2).
std::vector<ConditionResult> check_part_e_prime(const ProblemInstance& inst);
/// u1, u1', u1'', u2, (e'3).
std::vector<ConditionResult> check_uniqueness_conditions(const ProblemInstance& inst);

struct CommutationLadder {
  bool commuting = false;
  bool weakly_commuting = false;
  bool compatible = false;
  bool r_compatible = false;
  bool weakly_compatible = false;
};

CommutationLadder check_commutation_ladder(const ProblemInstance& inst);

/// First coincidence point x (g x = f x = a, (a,a) in R) where g f x != f g x.
std::optional<PointId> r_compatibility_violation(const ProblemInstance& inst);
/// First coincidence point x where g f x != f g x.
std::optional<PointId> weak_compatibility_violation(const ProblemInstance& inst);

HypothesisReport full_report(const ProblemInstance& inst);

} // namespace coincide
