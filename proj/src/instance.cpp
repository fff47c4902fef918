#include "coincide/instance.hpp"

#include "coincide/error.hpp"

#include <cmath>
#include <numeric>

namespace coincide {

namespace {

void check_map(const char* name, const MapTable& m, std::size_t n) {
  if (m.size() != n)
    throw InputError(std::string("map ") + name + " has " + std::to_string(m.size()) + " entries, expected " +
                     std::to_string(n));
  for (std::size_t x = 0; x < n; ++x)
    if (m[x] >= n)
      throw InputError(std::string("map ") + name + " sends point " + std::to_string(x) + " to index " +
                       std::to_string(m[x]) + ", out of range");
}

} // namespace

ProblemInstance make_instance(FiniteMetricSpace space, FiniteRelation relation, MapTable f, MapTable g,
                              std::optional<PointSet> y, std::optional<double> alpha) {
  const std::size_t n = space.size();
  if (relation.ground_size() != n)
    throw InputError("relation ground set has " + std::to_string(relation.ground_size()) + " points, space has " +
                     std::to_string(n));
  check_map("f", f, n);
  check_map("g", g, n);

  PointSet members;
  if (y) {
    members = make_point_set(*y);
    if (members.empty())
      throw InputError("subspace Y must be nonempty");
    if (members.back() >= n)
      throw InputError("subspace Y member " + std::to_string(members.back()) + " out of range");
  } else {
    members.resize(n);
    std::iota(members.begin(), members.end(), PointId{0});
  }
  if (alpha && !std::isfinite(*alpha))
    throw InputError("alpha must be a finite number");

  return ProblemInstance{std::move(space), std::move(relation), std::move(f), std::move(g), std::move(members),
                         alpha};
}

PointSet image(const MapTable& m) {
  return make_point_set(m);
}

MapTable compose(const MapTable& m1, const MapTable& m2) {
  MapTable out(m2.size());
  for (std::size_t x = 0; x < m2.size(); ++x)
    out[x] = m1.at(m2[x]);
  return out;
}

} // namespace coincide
