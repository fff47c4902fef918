#include "coincide/hypothesis.hpp"

#include "coincide/error.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace coincide {

const char* const kFiniteReductionNote =
    "finite space: convergent sequences are eventually constant, so this sequential condition holds";

namespace {

constexpr std::array<std::pair<ConditionId, std::string_view>, 14> kConditionNames{{
    {ConditionId::a, "(a)"},
    {ConditionId::b, "(b)"},
    {ConditionId::c, "(c)"},
    {ConditionId::d, "(d)"},
    {ConditionId::e1, "(e1)"},
    {ConditionId::e2, "(e2)"},
    {ConditionId::e3, "(e3)"},
    {ConditionId::e_prime1, "(e'1)"},
    {ConditionId::e_prime2, "(e'2)"},
    {ConditionId::u1, "u1"},
    {ConditionId::u1_prime, "u1'"},
    {ConditionId::u1_double_prime, "u1''"},
    {ConditionId::u2, "u2"},
    {ConditionId::e_prime3, "(e'3)"},
}};

std::vector<std::string> labels_of(const ProblemInstance& inst, std::initializer_list<PointId> points) {
  std::vector<std::string> out;
  for (PointId p : points)
    out.push_back(inst.label(p));
  return out;
}

ConditionResult holds(ConditionId id, std::vector<std::string> witness = {}, std::string note = {}) {
  return {id, Verdict::holds, std::move(witness), std::move(note)};
}

ConditionResult fails(ConditionId id, std::vector<std::string> witness, std::string note) {
  return {id, Verdict::fails, std::move(witness), std::move(note)};
}

ConditionResult degenerate(ConditionId id, std::string note = kFiniteReductionNote) {
  return {id, Verdict::holds_degenerately, {}, std::move(note)};
}

bool contains(const PointSet& s, PointId x) {
  return std::binary_search(s.begin(), s.end(), x);
}

std::optional<Edge> first_collision(const MapTable& m) {
  for (PointId x = 0; x < m.size(); ++x)
    for (PointId y = x + 1; y < m.size(); ++y)
      if (m[x] == m[y])
        return Edge{x, y};
  return std::nullopt;
}

} // namespace

std::string_view to_string(ConditionId id) {
  for (const auto& [cid, name] : kConditionNames)
    if (cid == id)
      return name;
  return "?";
}

std::optional<ConditionId> condition_from_string(std::string_view text) {
  for (const auto& [cid, name] : kConditionNames)
    if (name == text)
      return cid;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::holds: return "holds";
  case Verdict::fails: return "fails";
  case Verdict::holds_degenerately: return "holds-degenerately";
  }
  return "?";
}

std::optional<Verdict> verdict_from_string(std::string_view text) {
  for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::holds_degenerately})
    if (to_string(v) == text)
      return v;
  return std::nullopt;
}

Applicability assess(std::span<const ConditionResult> conditions) {
  auto ok = [&](ConditionId id) {
    return std::any_of(conditions.begin(), conditions.end(),
                       [&](const ConditionResult& c) { return c.id == id && c.satisfied(); });
  };
  Applicability a;
  const bool core = ok(ConditionId::a) && ok(ConditionId::b) && ok(ConditionId::c) && ok(ConditionId::d);
  a.branch_e = ok(ConditionId::e1) && ok(ConditionId::e2) && ok(ConditionId::e3);
  a.branch_e_prime = ok(ConditionId::e_prime1) && ok(ConditionId::e_prime2);
  a.theorem2 = core && (a.branch_e || a.branch_e_prime);
  a.theorem3 = a.theorem2 && ok(ConditionId::u1);
  a.theorem4 = a.theorem3 && ok(ConditionId::u2);
  a.theorem5 = core && a.branch_e_prime && ok(ConditionId::u1) && ok(ConditionId::e_prime3);
  return a;
}

const ConditionResult& HypothesisReport::at(ConditionId id) const {
  for (const auto& c : conditions)
    if (c.id == id)
      return c;
  throw DomainError("report has no condition " + std::string(to_string(id)));
}

PointSet find_starting_points(const ProblemInstance& inst) {
  PointSet out;
  for (PointId x = 0; x < inst.size(); ++x)
    if (inst.relation.contains(inst.g[x], inst.f[x]))
      out.push_back(x);
  return out;
}

ConditionResult check_range_inclusion(const ProblemInstance& inst) {
  const PointSet g_image = image(inst.g);
  for (PointId x = 0; x < inst.size(); ++x) {
    const PointId fx = inst.f[x];
    if (!contains(g_image, fx))
      return fails(ConditionId::a, labels_of(inst, {x}), "f(" + inst.label(x) + ") = " + inst.label(fx) +
                                                              " is not in g(X)");
    if (!contains(inst.y, fx))
      return fails(ConditionId::a, labels_of(inst, {x}), "f(" + inst.label(x) + ") = " + inst.label(fx) +
                                                              " is not in Y");
  }
  return holds(ConditionId::a, {}, "Y is R-complete (finite subspace)");
}

ConditionResult check_closedness(const ProblemInstance& inst) {
  if (auto v = fg_closed_violation(inst.relation, inst.f, inst.g)) {
    const auto [x, y] = *v;
    return fails(ConditionId::b, labels_of(inst, {x, y}),
                 "(g" + inst.label(x) + ", g" + inst.label(y) + ") in R but (f" + inst.label(x) + ", f" +
                     inst.label(y) + ") not in R");
  }
  return holds(ConditionId::b);
}

ConditionResult check_starting_points(const ProblemInstance& inst) {
  const PointSet start = find_starting_points(inst);
  std::vector<std::string> witness;
  for (PointId x : start)
    witness.push_back(inst.label(x));
  if (start.empty()) {
    for (PointId x = 0; x < inst.size(); ++x)
      witness.push_back(inst.label(x));
    return fails(ConditionId::c, std::move(witness), "no point x has (gx, fx) in R");
  }
  return holds(ConditionId::c, std::move(witness));
}

ConditionResult check_contraction_condition(const ProblemInstance& inst) {
  const auto est = estimate_contraction(inst.space, inst.relation, inst.f, inst.g);
  std::ostringstream note;
  note << "alpha_hat = " << est.alpha_hat;
  if (est.infeasible()) {
    const auto [x, y] = est.violations.front();
    note << "; g" << inst.label(x) << " = g" << inst.label(y) << " but f" << inst.label(x) << " != f"
         << inst.label(y);
    return fails(ConditionId::d, labels_of(inst, {x, y}), note.str());
  }
  std::vector<std::string> witness;
  if (est.witness)
    witness = labels_of(inst, {est.witness->first, est.witness->second});

  if (inst.alpha) {
    const double alpha = *inst.alpha;
    note << ", declared alpha = " << alpha;
    if (alpha < 0.0 || alpha >= 1.0)
      return fails(ConditionId::d, witness.empty() ? std::vector<std::string>{inst.label(0)} : witness,
                   note.str() + " outside [0,1)");
    if (!est.satisfies(alpha))
      return fails(ConditionId::d, witness, note.str() + " exceeded");
    return holds(ConditionId::d, witness, note.str());
  }
  if (!est.satisfiable())
    return fails(ConditionId::d, witness, note.str() + " is not below 1");
  return holds(ConditionId::d, witness, note.str());
}

std::optional<PointId> r_compatibility_violation(const ProblemInstance& inst) {
  for (PointId x = 0; x < inst.size(); ++x) {
    const PointId a = inst.g[x];
    if (a != inst.f[x] || !inst.relation.contains(a, a))
      continue;
    if (inst.g[inst.f[x]] != inst.f[inst.g[x]])
      return x;
  }
  return std::nullopt;
}

std::optional<PointId> weak_compatibility_violation(const ProblemInstance& inst) {
  for (PointId x = 0; x < inst.size(); ++x)
    if (inst.g[x] == inst.f[x] && inst.g[inst.f[x]] != inst.f[inst.g[x]])
      return x;
  return std::nullopt;
}

std::vector<ConditionResult> check_part_e(const ProblemInstance& inst) {
  std::vector<ConditionResult> out;
  if (auto x = r_compatibility_violation(inst)) {
    const PointId a = inst.g[*x];
    out.push_back(fails(ConditionId::e1, labels_of(inst, {*x}),
                        "(" + inst.label(a) + ", " + inst.label(a) + ") in R and g" + inst.label(*x) + " = f" +
                            inst.label(*x) + " = " + inst.label(a) + ", but gf" + inst.label(*x) + " = " +
                            inst.label(inst.g[inst.f[*x]]) + " != fg" + inst.label(*x) + " = " +
                            inst.label(inst.f[inst.g[*x]])));
  } else {
    out.push_back(holds(ConditionId::e1, {}, "g f x = f g x on every coincidence class with (a,a) in R"));
  }
  out.push_back(degenerate(ConditionId::e2));
  out.push_back(degenerate(ConditionId::e3, std::string("f R-continuous: holds-degenerately; R (g,d)-self-closed: "
                                                        "holds-degenerately; ") +
                                                kFiniteReductionNote));
  return out;
}

std::vector<ConditionResult> check_part_e_prime(const ProblemInstance& inst) {
  std::vector<ConditionResult> out;
  const PointSet g_image = image(inst.g);
  auto missing = std::find_if(inst.y.begin(), inst.y.end(), [&](PointId p) { return !contains(g_image, p); });
  if (missing != inst.y.end())
    out.push_back(fails(ConditionId::e_prime1, labels_of(inst, {*missing}),
                        inst.label(*missing) + " is in Y but not in g(X)"));
  else
    out.push_back(holds(ConditionId::e_prime1));
  out.push_back(degenerate(ConditionId::e_prime2,
                           std::string("f (g,R)-continuous: holds-degenerately; f and g continuous: "
                                       "holds-degenerately; R|Y d-self-closed: holds-degenerately; ") +
                               kFiniteReductionNote));
  return out;
}

std::vector<ConditionResult> check_uniqueness_conditions(const ProblemInstance& inst) {
  std::vector<ConditionResult> out;
  const PointSet f_image = image(inst.f);
  const PointSet g_image = image(inst.g);

  // u1 and u1'' are posed inside R|g(X); points of f(X) outside g(X) cannot
  // take part in a path there.
  const Restriction on_g = restrict(inst.relation, g_image);
  const FiniteRelation sym_g = symmetric_closure(on_g.relation);
  std::vector<PointId> f_local;
  std::optional<PointId> outside;
  for (PointId u : f_image) {
    if (auto local = on_g.local_index(u))
      f_local.push_back(*local);
    else if (!outside)
      outside = u;
  }

  if (outside) {
    out.push_back(fails(ConditionId::u1, labels_of(inst, {*outside}),
                        inst.label(*outside) + " is in f(X) but not in g(X)"));
  } else if (auto v = connectivity_violation(sym_g, f_local)) {
    const PointId u = on_g.members[v->first], w = on_g.members[v->second];
    out.push_back(fails(ConditionId::u1, labels_of(inst, {u, w}),
                        "no path from " + inst.label(u) + " to " + inst.label(w) + " in the symmetric closure of R|g(X)"));
  } else {
    out.push_back(holds(ConditionId::u1));
  }

  const Restriction on_f = restrict(inst.relation, f_image);
  const RelationClass f_class = classify(on_f.relation);
  if (f_class.complete) {
    out.push_back(holds(ConditionId::u1_prime));
  } else {
    std::optional<ConditionResult> failure;
    for (PointId i = 0; i < f_image.size() && !failure; ++i)
      for (PointId j = 0; j < f_image.size() && !failure; ++j)
        if (!comparative(on_f.relation, i, j))
          failure = fails(ConditionId::u1_prime, labels_of(inst, {f_image[i], f_image[j]}),
                          inst.label(f_image[i]) + " and " + inst.label(f_image[j]) + " are not R-comparative");
    out.push_back(*failure);
  }

  if (outside) {
    out.push_back(fails(ConditionId::u1_double_prime, labels_of(inst, {*outside}),
                        inst.label(*outside) + " is in f(X) but not in g(X)"));
  } else if (auto v = directedness_violation(sym_g, f_local)) {
    const PointId u = on_g.members[v->first], w = on_g.members[v->second];
    out.push_back(fails(ConditionId::u1_double_prime, labels_of(inst, {u, w}),
                        inst.label(u) + " and " + inst.label(w) + " have no common bound in g(X)"));
  } else {
    out.push_back(holds(ConditionId::u1_double_prime));
  }

  const auto f_collision = first_collision(inst.f);
  const auto g_collision = first_collision(inst.g);
  if (!f_collision)
    out.push_back(holds(ConditionId::u2, {}, "f is one-one"));
  else if (!g_collision)
    out.push_back(holds(ConditionId::u2, {}, "g is one-one"));
  else
    out.push_back(fails(ConditionId::u2,
                        labels_of(inst, {f_collision->first, f_collision->second, g_collision->first,
                                         g_collision->second}),
                        "f" + inst.label(f_collision->first) + " = f" + inst.label(f_collision->second) + " and g" +
                            inst.label(g_collision->first) + " = g" + inst.label(g_collision->second)));

  if (auto x = weak_compatibility_violation(inst)) {
    out.push_back(fails(ConditionId::e_prime3, labels_of(inst, {*x}),
                        "gf" + inst.label(*x) + " = " + inst.label(inst.g[inst.f[*x]]) + " != fg" + inst.label(*x) +
                            " = " + inst.label(inst.f[inst.g[*x]])));
  } else {
    out.push_back(holds(ConditionId::e_prime3));
  }
  return out;
}

CommutationLadder check_commutation_ladder(const ProblemInstance& inst) {
  CommutationLadder l;
  l.commuting = true;
  l.weakly_commuting = true;
  for (PointId x = 0; x < inst.size(); ++x) {
    const PointId gfx = inst.g[inst.f[x]];
    const PointId fgx = inst.f[inst.g[x]];
    if (gfx != fgx)
      l.commuting = false;
    if (inst.space.distance(gfx, fgx) > inst.space.distance(inst.g[x], inst.f[x]))
      l.weakly_commuting = false;
  }
  l.weakly_compatible = !weak_compatibility_violation(inst).has_value();
  l.compatible = l.weakly_compatible;
  l.r_compatible = !r_compatibility_violation(inst).has_value();
  return l;
}

HypothesisReport full_report(const ProblemInstance& inst) {
  HypothesisReport r;
  r.conditions.push_back(check_range_inclusion(inst));
  r.conditions.push_back(check_closedness(inst));
  r.conditions.push_back(check_starting_points(inst));
  r.conditions.push_back(check_contraction_condition(inst));
  for (auto& c : check_part_e(inst))
    r.conditions.push_back(std::move(c));
  for (auto& c : check_part_e_prime(inst))
    r.conditions.push_back(std::move(c));
  for (auto& c : check_uniqueness_conditions(inst))
    r.conditions.push_back(std::move(c));

  const auto est = estimate_contraction(inst.space, inst.relation, inst.f, inst.g);
  r.alpha_hat = est.alpha_hat;
  r.contraction_feasible = !est.infeasible();
  r.alpha = inst.alpha;
  for (PointId x : find_starting_points(inst))
    r.starting_points.push_back(inst.label(x));

  const Applicability a = assess(r.conditions);
  r.theorem2_applicable = a.theorem2;
  r.theorem3_applicable = a.theorem3;
  r.theorem4_applicable = a.theorem4;
  r.theorem5_applicable = a.theorem5;
  return r;
}

} // namespace coincide
