#include "hma/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace hma {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Point& p) { return Json::array({p.x, p.y, p.t}); }

Json to_json(const MeasureEstimate& m) {
  Json j;
  j["value"] = m.value;
  j["error_indicator"] = m.error_indicator;
  j["cells"] = m.cells;
  return j;
}

MeasureEstimate measure_estimate_from_json(const Json& j) {
  MeasureEstimate m;
  m.value = j.at("value").get<double>();
  m.error_indicator = j.at("error_indicator").get<double>();
  m.cells = j.at("cells").get<std::size_t>();
  return m;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["principle"] = r.principle;
  j["instance"] = r.instance;
  j["status"] = to_string(r.status);
  j["pass"] = r.passed();
  j["failed_check"] = r.failed_check;
  Json checks = Json::array();
  for (const NamedCheck& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"kind", c.hypothesis ? "hypothesis" : "conclusion"},
                      {"passed", c.passed},
                      {"worst", c.worst}});
  }
  j["hypothesis_checks"] = checks;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["quadrature_error"] = r.quadrature_error;
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  return j;
}

Json to_json(const ChainReport& r) {
  Json j;
  j["start"] = to_json(r.start);
  j["R"] = r.R;
  j["case"] = to_string(r.chain_case);
  Json steps = Json::array();
  for (const ChainStep& s : r.steps) {
    steps.push_back({{"label", s.label},
                     {"from", to_json(s.from)},
                     {"to", to_json(s.to)},
                     {"lambda", s.lambda},
                     {"lambda_bound", s.lambda_bound},
                     {"alpha", optional_json(s.alpha)},
                     {"beta", optional_json(s.beta)},
                     {"factor", s.factor}});
  }
  j["steps"] = steps;
  j["total_factor"] = r.total_factor;
  j["N"] = r.iterations;
  j["t_levels"] = r.t_levels;
  j["exponent_form_factor"] = optional_json(r.exponent_form_factor);
  j["exponent_form_recursion"] = optional_json(r.exponent_form_recursion);
  j["iteration_log"] = optional_json(r.iteration_log);
  return j;
}

Json to_json(const ConvexityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["min_eigenvalue_seen"] = optional_json(r.min_eigenvalue_seen);
  j["segment_violation"] = optional_json(r.segment_violation);
  j["worst_point"] = to_json(r.worst_point);
  j["evaluated"] = r.evaluated;
  return j;
}

Json to_json(const ConstantEstimate& c) {
  Json j;
  j["tensor"] = to_json(c.tensor);
  j["cylindrical"] = c.cylindrical;
  j["relative_gap"] = c.relative_gap();
  return j;
}

Json to_json(const AlphaConstant& a) {
  Json j;
  j["via_marginal"] = a.via_marginal;
  j["via_polar"] = a.via_polar;
  j["relative_gap"] = a.relative_gap();
  return j;
}

Json to_json(const SuiteRun& run) {
  Json j;
  j["suite"] = run.suite;
  Json cases = Json::array();
  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    Json c = to_json(run.reports[i]);
    c["case"] = run.labels[i];
    cases.push_back(std::move(c));
  }
  j["cases"] = cases;
  j["exit_code"] = exit_code(run.reports);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string summary_csv(const SuiteRun& run) {
  std::ostringstream out;
  out << "case,lhs,rhs,margin,pass\n";
  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    const VerificationReport& r = run.reports[i];
    out << run.labels[i] << ',' << number(r.lhs) << ',' << number(r.rhs) << ','
        << number(r.margin) << ',' << (r.passed() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string field_csv(const ScalarField& u, const std::vector<Point>& points) {
  std::ostringstream out;
  out << "x,y,t,value\n";
  for (const Point& p : points) {
    if (!u.in_domain(p)) continue;
    out << number(p.x) << ',' << number(p.y) << ',' << number(p.t) << ',' << number(u(p)) << '\n';
  }
  return out.str();
}

}  // namespace hma
