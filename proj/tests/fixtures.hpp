#pragma once

#include "coincide/instance.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fixtures {

using namespace coincide;

// Points on the real line with d = |x - y|.
inline FiniteMetricSpace line(const std::vector<double>& xs, std::vector<std::string> labels = {}) {
  std::vector<std::vector<double>> d(xs.size(), std::vector<double>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      d[i][j] = std::abs(xs[i] - xs[j]);
  return validate_metric(d, std::move(labels));
}

// X = {0, 1, 3} on the line, R = {(0,0), (0,1), (1,2)}, f = [0,0,1],
// g = identity, alpha = 1/2.
inline ProblemInstance t3() {
  return make_instance(line({0, 1, 3}), FiniteRelation(3, {{0, 0}, {0, 1}, {1, 2}}), {0, 0, 1}, {0, 1, 2},
                       std::nullopt, 0.5);
}

// X = {-2, -1, 1, 2}, f = 1, g(x) = x^2 - 3, R = {(x, y) : x >= 0},
// Y = g(X) = {-2, 1}.
inline ProblemInstance example2_finite() {
  std::vector<Edge> edges;
  for (PointId x : {2, 3})
    for (PointId y = 0; y < 4; ++y)
      edges.emplace_back(x, y);
  return make_instance(line({-2, -1, 1, 2}, {"-2", "-1", "1", "2"}), FiniteRelation(4, edges), {2, 2, 2, 2},
                       {2, 0, 0, 2}, PointSet{0, 2});
}

} // namespace fixtures
