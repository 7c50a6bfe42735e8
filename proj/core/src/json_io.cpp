#include "tsent/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace tsent {

using json = nlohmann::json;


namespace {

json rational_json(const Rational& r) { return rational_to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  auto r = parse_rational(j.get<std::string>());
  if (!r) throw std::invalid_argument("bad rational: " + j.dump());
  return *r;
}

}  // namespace

std::string distribution_to_json(const JointDistribution& dist) {
  json j;
  j["variables"] = json::array();
  for (const auto& v : dist.variables())
    j["variables"].push_back({{"name", v.name}, {"cardinality", v.cardinality}});
  j["probabilities"] = dist.probabilities();
  if (dist.has_exact()) {
    json ex = json::array();
    for (const auto& p : dist.exact()) ex.push_back(rational_json(p));
    j["exact_probabilities"] = ex;
  }
  return j.dump(2);
}

JointDistribution distribution_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<VariableSpec> vars;
  for (const auto& v : j.at("variables"))
    vars.push_back({v.at("name").get<std::string>(), v.at("cardinality").get<int>()});
  if (j.contains("exact_probabilities")) {
    std::vector<Rational> probs;
    for (const auto& p : j.at("exact_probabilities")) probs.push_back(rational_from_json(p));
    return JointDistribution::from_rationals(std::move(vars), std::move(probs));
  }
  std::vector<double> probs = j.at("probabilities").get<std::vector<double>>();
  return JointDistribution::from_reals(std::move(vars), std::move(probs));
}

std::string dag_to_json(const Dag& dag) {
  json j;
  j["nodes"] = json::array();
  for (const auto& n : dag.nodes())
    j["nodes"].push_back(
        {{"name", n.name}, {"observed", n.observed}, {"cardinality", n.cardinality}});
  j["edges"] = json::array();
  for (int c = 0; c < dag.node_count(); ++c)
    for (int p : dag.parents(c))
      j["edges"].push_back(
          {dag.nodes()[static_cast<size_t>(p)].name, dag.nodes()[static_cast<size_t>(c)].name});
  return j.dump(2);
}

Dag dag_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<DagNode> nodes;
  for (const auto& n : j.at("nodes"))
    nodes.push_back({n.at("name").get<std::string>(),
                     n.value("observed", true),
                     n.value("cardinality", 2)});
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return Dag(std::move(nodes), std::move(edges));
}

std::string entropy_vector_to_json(const EntropyVector& v) {
  json j;
  j["q"] = v.q;
  j["variables"] = v.variables;
  json coords = json::array();
  for (size_t k = 0; k < v.coordinates.size(); ++k) {
    SubsetMask mask = static_cast<SubsetMask>(k + 1);
    auto names = subset_names(v.variables, mask);
    std::sort(names.begin(), names.end());
    coords.push_back({{"subset", names}, {"value", v.coordinates[k]}});
  }
  j["coordinates"] = coords;
  return j.dump(2);
}

std::string inequality_system_to_json(const InequalitySystem& sys) {
  json j;
  j["universe"] = sys.universe;
  json rows = json::array();
  for (const auto& row : sys.rows) {
    json r;
    json coeffs = json::array();
    for (const auto& [mask, c] : row.coeffs) {
      auto names = subset_names(sys.universe, mask);
      std::sort(names.begin(), names.end());
      coeffs.push_back({{"subset", names}, {"value", rational_json(c)}});
    }
    r["coefficients"] = coeffs;
    r["relation"] = row.rel == Relation::Equal ? "=" : ">=";
    r["bound"] = rational_json(row.bound);
    r["exact_bound"] = row.exact_bound;
    r["tag"] = row.tag;
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  return j.dump(2);
}

InequalitySystem inequality_system_from_json(const std::string& text) {
  json j = json::parse(text);
  InequalitySystem sys;
  sys.universe = j.at("universe").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    LinearInequality row;
    for (const auto& c : r.at("coefficients")) {
      auto names = c.at("subset").get<std::vector<std::string>>();
      SubsetMask mask = mask_of(sys.universe, names);
      if (!mask) throw std::invalid_argument("inequality JSON: unknown subset member");
      row.coeffs[mask] = rational_from_json(c.at("value"));
    }
    row.rel = r.at("relation").get<std::string>() == "=" ? Relation::Equal
                                                         : Relation::GreaterEqual;
    row.bound = rational_from_json(r.at("bound"));
    row.exact_bound = r.value("exact_bound", true);
    row.tag = r.value("tag", std::string{});
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::string rational_system_to_json(const RationalSystem& sys) {
  json j;
  j["dimension"] = sys.dimension;
  json rows = json::array();
  for (const auto& row : sys.rows) {
    json coeffs = json::array();
    for (const auto& c : row.coeffs) coeffs.push_back(rational_json(c));
    rows.push_back({{"coeffs", coeffs},
                    {"relation", row.rel == Relation::Equal ? "=" : ">="},
                    {"rhs", rational_json(row.rhs)}});
  }
  j["rows"] = rows;
  return j.dump(2);
}

RationalSystem rational_system_from_json(const std::string& text) {
  json j = json::parse(text);
  RationalSystem sys;
  sys.dimension = j.at("dimension").get<int>();
  for (const auto& r : j.at("rows")) {
    RationalRow row;
    for (const auto& c : r.at("coeffs")) row.coeffs.push_back(rational_from_json(c));
    row.rel = r.at("relation").get<std::string>() == "=" ? Relation::Equal
                                                         : Relation::GreaterEqual;
    row.rhs = rational_from_json(r.at("rhs"));
    if (static_cast<int>(row.coeffs.size()) != sys.dimension)
      throw std::invalid_argument("rational system JSON: row length mismatch");
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::string fm_outcome_to_json(const FmOutcome& out) {
  json j;
  j["completed"] = out.completed;
  j["breach"] = out.breach;
  j["eliminated"] = out.eliminated;
  json steps = json::array();
  for (const auto& s : out.steps)
    steps.push_back({{"coordinate", s.coordinate},
                     {"rows_before", s.rows_before},
                     {"rows_after_combination", s.rows_after_combination},
                     {"rows_after_reduction", s.rows_after_reduction}});
  j["steps"] = steps;
  j["rows"] = out.system.rows.size();
  j["system"] = json::parse(rational_system_to_json(out.system));
  return j.dump(2);
}

std::string scan_report_to_json(const ScanReport& rep) {
  json j;
  j["inequality"] = rep.which;
  j["d_o"] = rep.d_o;
  j["d_u"] = rep.d_u;
  j["min_margin"] = rep.min_margin;
  j["argmin_q"] = rep.argmin_q;
  j["violated"] = rep.violated;
  json grid = json::array();
  for (const auto& p : rep.grid) grid.push_back({{"q", p.q}, {"margin", p.margin}});
  j["grid"] = grid;
  return j.dump(2);
}

std::string search_report_to_json(const SearchReport& rep) {
  json j;
  j["samples"] = rep.samples;
  j["min_margin"] = rep.min_margin;
  j["worst"] = {{"sample", rep.worst.sample_index},
                {"q", rep.worst.q},
                {"inequality", rep.worst.which},
                {"margin", rep.worst.margin}};
  json v = json::array();
  for (const auto& hit : rep.violations)
    v.push_back({{"sample", hit.sample_index},
                 {"q", hit.q},
                 {"inequality", hit.which},
                 {"margin", hit.margin}});
  j["violations"] = v;
  return j.dump(2);
}

std::string evaluation_report_to_json(const EvaluationReport& rep) {
  json j;
  j["violation_count"] = rep.violation_count;
  j["worst_slack"] = rep.worst_slack;
  json rows = json::array();
  for (const auto& s : rep.slacks)
    rows.push_back(
        {{"row", s.row}, {"slack", s.slack}, {"violated", s.violated}, {"tag", s.tag}});
  j["rows"] = rows;
  return j.dump(2);
}

std::string matrix_to_json_value(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index jx = 0; jx < m.cols(); ++jx)
      row.push_back({m(i, jx).real(), m(i, jx).imag()});
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

}  // namespace tsent
