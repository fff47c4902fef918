#include "coincide/oracle.hpp"

#include "coincide/hypothesis.hpp"

#include <algorithm>

namespace coincide {

CoincidenceSummary enumerate(const ProblemInstance& inst) {
  CoincidenceSummary s;
  for (PointId x = 0; x < inst.size(); ++x) {
    if (inst.g[x] != inst.f[x])
      continue;
    s.coincidence_points.push_back(x);
    s.value_classes[inst.g[x]].push_back(x);
    if (inst.g[x] == x)
      s.common_fixed_points.push_back(x);
  }
  for (const auto& [value, members] : s.value_classes)
    s.points_of_coincidence.push_back(value);
  return s;
}

Lemma2Check verify_lemma2(const ProblemInstance& inst) {
  Lemma2Check check;
  check.premise = check_commutation_ladder(inst).weakly_compatible;
  const CoincidenceSummary s = enumerate(inst);
  check.conclusion = true;
  for (PointId v : s.points_of_coincidence) {
    if (!std::binary_search(s.coincidence_points.begin(), s.coincidence_points.end(), v)) {
      check.conclusion = false;
      check.witness = v;
      break;
    }
  }
  return check;
}

} // namespace coincide
