#include "coincide/cli.hpp"

#include "coincide/analytic.hpp"
#include "coincide/error.hpp"
#include "coincide/hypothesis.hpp"
#include "coincide/oracle.hpp"
#include "coincide/problem_io.hpp"
#include "coincide/solver.hpp"
#include "coincide/validator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace coincide {

using nlohmann::json;

namespace {

enum class Format { text, json };

ProblemInstance load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

PointId point_by_label(const ProblemInstance& inst, const std::string& label) {
  auto id = inst.space.index_of(label);
  if (!id)
    throw InputError("unknown point label '" + label + "'");
  return *id;
}

std::vector<std::string> labels_of(const ProblemInstance& inst, const PointSet& set) {
  std::vector<std::string> out;
  for (PointId x : set)
    out.push_back(inst.label(x));
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? sep : "") + items[i];
  return out;
}

std::string braces(const std::vector<std::string>& items) { return "{" + join(items) + "}"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json class_json(const RelationClass& c) {
  return {{"reflexive", c.reflexive},         {"irreflexive", c.irreflexive},
          {"symmetric", c.symmetric},         {"antisymmetric", c.antisymmetric},
          {"transitive", c.transitive},       {"complete", c.complete},
          {"weakly_complete", c.weakly_complete}, {"preorder", c.preorder},
          {"partial_order", c.partial_order}, {"equivalence", c.equivalence},
          {"tolerance", c.tolerance},         {"strict_order", c.strict_order},
          {"near_order", c.near_order},       {"pseudo_order", c.pseudo_order},
          {"total_order", c.total_order}};
}

int cmd_classify(const std::string& file, Format fmt, std::ostream& out) {
  const ProblemInstance inst = load(file);
  const RelationClass whole = classify(inst.relation);
  const RelationClass on_g = classify(restrict(inst.relation, image(inst.g)).relation);
  if (fmt == Format::json) {
    out << json{{"relation", class_json(whole)}, {"relation_on_g_image", class_json(on_g)}}.dump(2) << "\n";
    return 0;
  }
  const json j = class_json(whole), k = class_json(on_g);
  out << std::left << std::setw(18) << "property" << std::setw(6) << "R" << "R|g(X)\n";
  for (auto it = j.begin(); it != j.end(); ++it)
    out << std::setw(18) << it.key() << std::setw(6) << yes_no(it.value().get<bool>())
        << yes_no(k.at(it.key()).get<bool>()) << "\n";
  return 0;
}

void print_report(const HypothesisReport& r, std::ostream& out) {
  for (const auto& c : r.conditions) {
    out << std::left << std::setw(6) << to_string(c.id) << std::setw(20) << to_string(c.verdict);
    if (!c.witness.empty())
      out << "witness " << braces(c.witness) << "  ";
    out << c.note << "\n";
  }
  out << "alpha_hat " << r.alpha_hat << (r.contraction_feasible ? "" : " (no alpha works)");
  if (r.alpha)
    out << ", declared alpha " << *r.alpha;
  out << "\nstarting points " << braces(r.starting_points) << "\n";
  out << "theorem 2 applicable: " << yes_no(r.theorem2_applicable) << "\n"
      << "theorem 3 applicable: " << yes_no(r.theorem3_applicable) << "\n"
      << "theorem 4 applicable: " << yes_no(r.theorem4_applicable) << "\n"
      << "theorem 5 applicable: " << yes_no(r.theorem5_applicable) << "\n";
}

int cmd_check(const std::string& file, Format fmt, std::ostream& out) {
  const HypothesisReport r = full_report(load(file));
  if (fmt == Format::json)
    out << report_to_json(r, 2) << "\n";
  else
    print_report(r, out);
  return r.theorem2_applicable ? 0 : 1;
}

int cmd_solve(const std::string& file, const std::string& x0_label, double tol, std::size_t max_iter, Format fmt,
              std::ostream& out) {
  const ProblemInstance inst = load(file);
  const PointId x0 = point_by_label(inst, x0_label);
  const FiniteProblem problem(inst);
  const FiniteSolveResult res = joint_picard(problem, x0, SolverConfig{tol, max_iter});
  const auto& t = res.trace;
  const auto& o = res.outcome;
  const auto alpha = problem.alpha();
  const double d01 = t.step_gaps.empty() ? 0.0 : t.step_gaps.front();

  if (fmt == Format::json) {
    json rows = json::array();
    for (std::size_t n = 0; n < t.iterates.size(); ++n) {
      json row = {{"n", n},
                  {"x", inst.label(t.iterates[n])},
                  {"g_image", inst.label(t.g_images[n])},
                  {"f_image", inst.label(t.f_images[n])},
                  {"residual", t.residuals[n]}};
      row["step_gap"] = n < t.step_gaps.size() ? json(t.step_gaps[n]) : json(nullptr);
      row["preserving_ok"] = n < t.preserving_ok.size() ? json(static_cast<bool>(t.preserving_ok[n])) : json(nullptr);
      row["bound"] = alpha ? json(error_bound(*alpha, d01, n)) : json(nullptr);
      rows.push_back(row);
    }
    json doc = {{"status", to_string(o.status)},
                {"point", inst.label(o.point)},
                {"residual", o.residual},
                {"iterations", o.iterations},
                {"bound", o.bound ? json(*o.bound) : json(nullptr)},
                {"trace", rows}};
    out << doc.dump(2) << "\n";
  } else {
    out << std::left << std::setw(5) << "n" << std::setw(10) << "x_n" << std::setw(10) << "g x_n" << std::setw(10)
        << "f x_n" << std::setw(14) << "residual" << std::setw(14) << "gap" << "bound\n";
    for (std::size_t n = 0; n < t.iterates.size(); ++n) {
      out << std::setw(5) << n << std::setw(10) << inst.label(t.iterates[n]) << std::setw(10)
          << inst.label(t.g_images[n]) << std::setw(10) << inst.label(t.f_images[n]) << std::setw(14)
          << t.residuals[n] << std::setw(14) << (n < t.step_gaps.size() ? std::to_string(t.step_gaps[n]) : "-")
          << (alpha ? std::to_string(error_bound(*alpha, d01, n)) : "-") << "\n";
    }
    out << to_string(o.status) << " at " << inst.label(o.point) << " after " << o.iterations << " steps";
    if (o.bound)
      out << ", bound " << *o.bound;
    out << "\n";
  }
  return o.status == SolveStatus::converged ? 0 : 1;
}

int cmd_enumerate(const std::string& file, Format fmt, std::ostream& out) {
  const ProblemInstance inst = load(file);
  const CoincidenceSummary s = enumerate(inst);
  if (fmt == Format::json) {
    json classes = json::object();
    for (const auto& [v, members] : s.value_classes)
      classes[inst.label(v)] = labels_of(inst, members);
    out << json{{"coincidence_points", labels_of(inst, s.coincidence_points)},
                {"points_of_coincidence", labels_of(inst, s.points_of_coincidence)},
                {"common_fixed_points", labels_of(inst, s.common_fixed_points)},
                {"value_classes", classes}}
                   .dump(2)
        << "\n";
    return 0;
  }
  out << "coincidence points     " << braces(labels_of(inst, s.coincidence_points)) << "\n"
      << "points of coincidence  " << braces(labels_of(inst, s.points_of_coincidence)) << "\n"
      << "common fixed points    " << braces(labels_of(inst, s.common_fixed_points)) << "\n";
  for (const auto& [v, members] : s.value_classes)
    out << "  g x = f x = " << inst.label(v) << " for x in " << braces(labels_of(inst, members)) << "\n";
  return 0;
}

int cmd_path(const std::string& file, const std::string& from, const std::string& to, Format fmt,
             std::ostream& out) {
  const ProblemInstance inst = load(file);
  const auto path = find_path(inst.relation, point_by_label(inst, from), point_by_label(inst, to));
  if (fmt == Format::json) {
    out << json{{"from", from}, {"to", to}, {"path", path ? json(labels_of(inst, path->nodes)) : json(nullptr)}}.dump(2)
        << "\n";
  } else if (path) {
    out << join(labels_of(inst, path->nodes), " -> ") << "  (length " << path->length() << ")\n";
  } else {
    out << "no path from " << from << " to " << to << "\n";
  }
  return path ? 0 : 1;
}

int cmd_fuzz(const GeneratorConfig& cfg, Format fmt, std::ostream& out) {
  const ConformanceStats s = run_conformance(cfg);
  if (fmt == Format::json) {
    json doc = {{"instances", s.instances},
                {"theorem2_hits", s.theorem2_hits},
                {"theorem3_hits", s.theorem3_hits},
                {"theorem4_hits", s.theorem4_hits},
                {"theorem5_hits", s.theorem5_hits},
                {"branch_e_hits", s.branch_e_hits},
                {"branch_e_prime_hits", s.branch_e_prime_hits},
                {"solver_runs", s.solver_runs},
                {"solver_failures", s.solver_failures},
                {"bound_checks", s.bound_checks},
                {"bound_violations", s.bound_violations},
                {"ladder_violations", s.ladder_violations},
                {"compatibility_mismatches", s.compatibility_mismatches},
                {"lemma2_violations", s.lemma2_violations},
                {"uniqueness_implication_violations", s.uniqueness_implication_violations}};
    if (s.counterexample) {
      const auto& c = *s.counterexample;
      doc["counterexample"] = {{"theorem", c.theorem},
                               {"index", c.index},
                               {"instance", json::parse(c.instance_json)},
                               {"expected", c.expected},
                               {"observed", c.observed}};
    } else {
      doc["counterexample"] = nullptr;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "instances            " << s.instances << "\n"
        << "(e) branch holds     " << s.branch_e_hits << "\n"
        << "(e') branch holds    " << s.branch_e_prime_hits << "\n"
        << "theorem 2 applicable " << s.theorem2_hits << "\n"
        << "theorem 3 applicable " << s.theorem3_hits << "\n"
        << "theorem 4 applicable " << s.theorem4_hits << "\n"
        << "theorem 5 applicable " << s.theorem5_hits << "\n"
        << "solver runs          " << s.solver_runs << " (" << s.solver_failures << " failed)\n"
        << "error-bound checks   " << s.bound_checks << " (" << s.bound_violations << " violated)\n"
        << "ladder link breaks   " << s.ladder_violations[0] << " " << s.ladder_violations[1] << " "
        << s.ladder_violations[2] << " " << s.ladder_violations[3] << "\n";
    if (s.counterexample) {
      const auto& c = *s.counterexample;
      out << "COUNTEREXAMPLE to " << c.theorem << " at instance " << c.index << ": expected " << c.expected
          << ", observed " << c.observed << "\n"
          << c.instance_json << "\n";
    } else {
      out << "no counterexamples\n";
    }
  }
  return s.conformant() ? 0 : 1;
}

int cmd_demo(const std::string& name, Format fmt, std::ostream& out) {
  const DemoReport r = run_demo(name);
  if (fmt == Format::json) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json runs = json::array();
    for (const auto& run : r.runs)
      runs.push_back({{"x0", run.x0},
                      {"status", to_string(run.status)},
                      {"iterations", run.iterations},
                      {"endpoint", run.endpoint},
                      {"point_of_coincidence", run.point_of_coincidence},
                      {"residual", run.residual},
                      {"bound", run.bound ? json(*run.bound) : json(nullptr)}});
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
      witnesses.push_back({{"description", w.description}, {"premises_ok", w.premises_ok}, {"limit_gap", w.limit_gap}});
    out << json{{"name", r.name},
                {"hypotheses", json::parse(report_to_json(r.hypotheses))},
                {"coincidence_points", r.coincidence_points},
                {"points_of_coincidence", r.points_of_coincidence},
                {"common_fixed_points", r.common_fixed_points},
                {"witnesses", witnesses},
                {"runs", runs},
                {"checks", checks},
                {"all_match", r.all_match()}}
                   .dump(2)
        << "\n";
  } else {
    out << "demo " << r.name << "\n\n";
    print_report(r.hypotheses, out);
    out << "\ncoincidence points     " << braces(r.coincidence_points) << "\n"
        << "points of coincidence  " << braces(r.points_of_coincidence) << "\n"
        << "common fixed points    " << braces(r.common_fixed_points) << "\n";
    for (const auto& w : r.witnesses)
      out << "witness " << w.description << ": premises " << (w.premises_ok ? "ok" : "broken")
          << ", d(gf x_n, fg x_n) -> " << w.limit_gap << "\n";
    out << "\n";
    for (const auto& run : r.runs)
      out << "x0 = " << run.x0 << ": " << to_string(run.status) << " after " << run.iterations << " steps, x = "
          << run.endpoint << ", g x = " << run.point_of_coincidence << "\n";
    out << "\n";
    for (const auto& c : r.checks)
      out << (c.passed ? "ok    " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    out << (r.all_match() ? "all match" : "MISMATCH") << "\n";
  }
  return r.all_match() ? 0 : 1;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coincidence points of relation-contractive map pairs on finite metric spaces", "coincide"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, label_a, label_b, demo_name;
  double tol = SolverConfig{}.tol;
  std::size_t max_iter = SolverConfig{}.max_iter;
  GeneratorConfig gen;
  gen.instances = 10000;

  auto* classify_cmd = app.add_subcommand("classify", "Relation properties of R and of R on g(X)");
  classify_cmd->add_option("file", file)->required();
  auto* check_cmd = app.add_subcommand("check", "Hypothesis report; exit 0 iff theorem 2 applies");
  check_cmd->add_option("file", file)->required();
  auto* solve_cmd = app.add_subcommand("solve", "Joint Picard iteration from a start point");
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_option("--x0", label_a, "Start point label")->required();
  solve_cmd->add_option("--tol", tol);
  solve_cmd->add_option("--max-iter", max_iter);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Coincidence points by exhaustive scan");
  enumerate_cmd->add_option("file", file)->required();
  auto* path_cmd = app.add_subcommand("path", "Shortest R-path between two points");
  path_cmd->add_option("file", file)->required();
  path_cmd->add_option("--from", label_a)->required();
  path_cmd->add_option("--to", label_b)->required();
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random conformance run against the oracle");
  fuzz_cmd->add_option("--seed", gen.seed);
  fuzz_cmd->add_option("--instances", gen.instances);
  fuzz_cmd->add_option("--max-points", gen.max_points);
  fuzz_cmd->add_option("--density", gen.edge_density);
  fuzz_cmd->add_option("--bias", gen.map_bias);
  auto* demo_cmd = app.add_subcommand("demo", "Built-in examples");
  demo_cmd->add_option("name", demo_name)->required();
  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const Format fmt = format == "json" ? Format::json : Format::text;
  try {
    if (*classify_cmd)
      return cmd_classify(file, fmt, out);
    if (*check_cmd)
      return cmd_check(file, fmt, out);
    if (*solve_cmd)
      return cmd_solve(file, label_a, tol, max_iter, fmt, out);
    if (*enumerate_cmd)
      return cmd_enumerate(file, fmt, out);
    if (*path_cmd)
      return cmd_path(file, label_a, label_b, fmt, out);
    if (*fuzz_cmd)
      return cmd_fuzz(gen, fmt, out);
    if (*demo_cmd)
      return cmd_demo(demo_name, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace coincide
