#pragma once

// JSON problem files and machine-readable reports.
//
// Problem file:
//   { "space": {"labels": [...], "distances": [[...], ...]},
//     "relation": {"edges": [[i, j], ...]},
//     "maps": {"f": [...], "g": [...]},
//     "subspace_y": [...],      optional, defaults to every point
//     "alpha": 0.5 }            optional

#include "coincide/hypothesis.hpp"
#include "coincide/instance.hpp"

#include <string>
#include <string_view>

namespace coincide {

/// Throws InputError (or MetricAxiomError) naming the offending key, index
/// or metric witness.
ProblemInstance parse_problem(std::string_view text);

std::string problem_to_json(const ProblemInstance& inst, int indent = -1);

std::string report_to_json(const HypothesisReport& report, int indent = -1);

/// Inverse of report_to_json. Throws InputError on malformed input.
HypothesisReport report_from_json(std::string_view text);

} // namespace coincide
