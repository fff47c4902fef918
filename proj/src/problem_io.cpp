#include "coincide/problem_io.hpp"

#include "coincide/error.hpp"

#include <json.hpp>

namespace coincide {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object())
    throw InputError("\"" + where + "\" must be an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw InputError("missing key \"" + (where.empty() ? std::string(key) : where + "." + key) + "\"");
  return *it;
}

const json& require_array(const json& v, const std::string& where) {
  if (!v.is_array())
    throw InputError("\"" + where + "\" must be an array");
  return v;
}

PointId index_at(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InputError("\"" + where + "\" must be a nonnegative integer index");
  const auto i = v.get<std::uint64_t>();
  if (i >= n)
    throw InputError("\"" + where + "\" index " + std::to_string(i) + " out of range for " + std::to_string(n) +
                     " points");
  return static_cast<PointId>(i);
}

MapTable parse_map(const json& v, std::size_t n, const std::string& where) {
  require_array(v, where);
  if (v.size() != n)
    throw InputError("\"" + where + "\" has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  MapTable m;
  for (std::size_t i = 0; i < v.size(); ++i)
    m.push_back(index_at(v[i], n, where + "[" + std::to_string(i) + "]"));
  return m;
}

} // namespace

ProblemInstance parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object())
    throw InputError("problem document must be an object");

  const json& space = require(doc, "space", "");
  const json& labels_v = require_array(require(space, "labels", "space"), "space.labels");
  const json& dist_v = require_array(require(space, "distances", "space"), "space.distances");
  const json& relation = require(doc, "relation", "");
  const json& edges_v = require_array(require(relation, "edges", "relation"), "relation.edges");
  const json& maps = require(doc, "maps", "");
  const json& f_v = require(maps, "f", "maps");
  const json& g_v = require(maps, "g", "maps");

  std::vector<std::string> labels;
  for (const auto& l : labels_v) {
    if (!l.is_string())
      throw InputError("\"space.labels\" entries must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::vector<double>> dist;
  for (std::size_t i = 0; i < dist_v.size(); ++i) {
    const std::string where = "space.distances[" + std::to_string(i) + "]";
    std::vector<double> row;
    for (const auto& x : require_array(dist_v[i], where)) {
      if (!x.is_number())
        throw InputError("\"" + where + "\" entries must be numbers");
      row.push_back(x.get<double>());
    }
    dist.push_back(std::move(row));
  }
  FiniteMetricSpace metric = validate_metric(dist, std::move(labels));
  const std::size_t n = metric.size();

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < edges_v.size(); ++k) {
    const std::string where = "relation.edges[" + std::to_string(k) + "]";
    const json& e = require_array(edges_v[k], where);
    if (e.size() != 2)
      throw InputError("\"" + where + "\" must be a pair");
    edges.emplace_back(index_at(e[0], n, where), index_at(e[1], n, where));
  }
  FiniteRelation r(n, edges);

  MapTable f = parse_map(f_v, n, "maps.f");
  MapTable g = parse_map(g_v, n, "maps.g");

  std::optional<PointSet> y;
  if (auto it = doc.find("subspace_y"); it != doc.end()) {
    require_array(*it, "subspace_y");
    std::vector<PointId> pts;
    for (std::size_t i = 0; i < it->size(); ++i)
      pts.push_back(index_at((*it)[i], n, "subspace_y[" + std::to_string(i) + "]"));
    y = make_point_set(std::move(pts));
  }
  std::optional<double> alpha;
  if (auto it = doc.find("alpha"); it != doc.end() && !it->is_null()) {
    if (!it->is_number())
      throw InputError("\"alpha\" must be a number");
    alpha = it->get<double>();
  }
  return make_instance(std::move(metric), std::move(r), std::move(f), std::move(g), std::move(y), alpha);
}

std::string problem_to_json(const ProblemInstance& inst, int indent) {
  json edges = json::array();
  for (const auto& [x, y] : inst.relation.edges())
    edges.push_back({x, y});
  json doc = {
      {"space", {{"labels", inst.space.labels()}, {"distances", inst.space.table()}}},
      {"relation", {{"edges", edges}}},
      {"maps", {{"f", inst.f}, {"g", inst.g}}},
      {"subspace_y", inst.y},
  };
  if (inst.alpha)
    doc["alpha"] = *inst.alpha;
  return doc.dump(indent);
}

std::string report_to_json(const HypothesisReport& report, int indent) {
  json conditions = json::array();
  for (const auto& c : report.conditions)
    conditions.push_back({{"id", to_string(c.id)},
                          {"verdict", to_string(c.verdict)},
                          {"witness", c.witness},
                          {"note", c.note}});
  json doc = {
      {"conditions", conditions},
      {"alpha_hat", report.alpha_hat},
      {"contraction_feasible", report.contraction_feasible},
      {"alpha", report.alpha ? json(*report.alpha) : json(nullptr)},
      {"starting_points", report.starting_points},
      {"theorem2_applicable", report.theorem2_applicable},
      {"theorem3_applicable", report.theorem3_applicable},
      {"theorem4_applicable", report.theorem4_applicable},
      {"theorem5_applicable", report.theorem5_applicable},
  };
  return doc.dump(indent);
}

HypothesisReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    HypothesisReport report;
    for (const auto& c : doc.at("conditions")) {
      const auto id = condition_from_string(c.at("id").get<std::string>());
      const auto verdict = verdict_from_string(c.at("verdict").get<std::string>());
      if (!id || !verdict)
        throw InputError("unknown condition id or verdict");
      report.conditions.push_back(
          {*id, *verdict, c.at("witness").get<std::vector<std::string>>(), c.at("note").get<std::string>()});
    }
    report.alpha_hat = doc.at("alpha_hat").get<double>();
    report.contraction_feasible = doc.at("contraction_feasible").get<bool>();
    if (!doc.at("alpha").is_null())
      report.alpha = doc.at("alpha").get<double>();
    report.starting_points = doc.at("starting_points").get<std::vector<std::string>>();
    report.theorem2_applicable = doc.at("theorem2_applicable").get<bool>();
    report.theorem3_applicable = doc.at("theorem3_applicable").get<bool>();
    report.theorem4_applicable = doc.at("theorem4_applicable").get<bool>();
    report.theorem5_applicable = doc.at("theorem5_applicable").get<bool>();
    return report;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

} // namespace coincide
