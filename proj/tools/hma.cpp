// Command-line front end: suites, chains, single integrals, field export and constants.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hma/barriers.hpp"
#include "hma/catalog.hpp"
#include "hma/chain.hpp"
#include "hma/measure.hpp"
#include "hma/mollified_max.hpp"
#include "hma/serialize.hpp"
#include "hma/suites.hpp"

namespace {

using namespace hma;

constexpr int kUsage = 1;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Point parse_point(const std::string& text) {
  std::stringstream in(text);
  std::vector<double> v;
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(std::stod(item));
  if (v.size() != 3) throw UsageError("expected a point x,y,t but got '" + text + "'");
  return {v[0], v[1], v[2]};
}

/// ball:R[:x,y,t] | annulus:inner:outer[:x,y,t] | box:x0,y0,t0:x1,y1,t1
Region parse_region(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  try {
    if (parts.size() >= 2 && parts[0] == "ball" && parts.size() <= 3) {
      return Region::ball(parts.size() == 3 ? parse_point(parts[2]) : origin, std::stod(parts[1]));
    }
    if (parts.size() >= 3 && parts[0] == "annulus" && parts.size() <= 4) {
      return Region::annulus(parts.size() == 4 ? parse_point(parts[3]) : origin, std::stod(parts[1]),
                             std::stod(parts[2]));
    }
    if (parts.size() == 3 && parts[0] == "box") return Region::box(parse_point(parts[1]), parse_point(parts[2]));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad region '" + text + "': " + e.what());
  }
  throw UsageError("bad region '" + text + "'");
}

/// "volume", "<catalog field>-ma" or "<catalog field>-trace".
MeasureEstimate integrate_named(const std::string& name, const Region& region, const QuadratureSpec& spec) {
  if (name == "volume") return integrate([](const Point&) { return 1.0; }, region, spec);
  const auto dash = name.rfind('-');
  if (dash == std::string::npos) throw UsageError("unknown integrand '" + name + "'");
  const std::string base = name.substr(0, dash);
  const std::string kind = name.substr(dash + 1);
  ScalarField u = gauge_field();
  try {
    u = catalog_entry(base).field;
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (kind == "ma") return h_measure(u, region, spec);
  if (kind == "trace") return trace_integral(u, region, spec);
  throw UsageError("unknown integrand kind '" + kind + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monge-Ampere analysis on the Heisenberg group"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the main output to this file");

  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");

  SuiteOptions suite;
  std::string suite_name;
  std::string csv_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite_name, "Suite name")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--R", suite.R, "Ball radius")->check(CLI::PositiveNumber);
  verify->add_option("--resolution", suite.resolution, "Quadrature nodes per axis (>= 32)");
  verify->add_option("--seed", suite.seed, "Sampling seed");
  verify->add_flag("--broken", suite.broken, "Run the instances with a violated hypothesis");
  verify->add_option("--csv", csv_path, "Also write the case summary as CSV");

  Point start;
  double chain_R = 1.0;
  auto* chain = app.add_subcommand("chain", "Build the descent chain from a point to the center");
  chain->add_option("--x0", start.x)->required();
  chain->add_option("--y0", start.y)->required();
  chain->add_option("--t0", start.t)->required();
  chain->add_option("--R", chain_R)->check(CLI::PositiveNumber);

  std::string integrand;
  std::string region_text = "ball:1";
  double eps = 0.0;
  int resolution = 64;
  auto* integ = app.add_subcommand("integrate", "Integrate a density over a region");
  integ->add_option("--field", integrand, "volume, <field>-ma or <field>-trace")->required();
  integ->add_option("--region", region_text, "ball:R[:x,y,t], annulus:a:b[:x,y,t] or box:p:q");
  integ->add_option("--eps", eps, "Excised gauge radius about the center");
  integ->add_option("--resolution", resolution, "Quadrature nodes per axis (>= 32)");

  std::string export_field;
  std::size_t count = 1000;
  std::uint64_t seed = kDefaultSeed;
  auto* exporter = app.add_subcommand("field-export", "Sample a catalog field as CSV");
  exporter->add_option("--field", export_field, "Catalog field name")->required();
  exporter->add_option("--region", region_text, "Sampling region");
  exporter->add_option("--count", count, "Number of interior samples");
  exporter->add_option("--seed", seed, "Sampling seed");

  auto* constants = app.add_subcommand("constants", "Measured constants with both quadrature routes");
  constants->add_option("--resolution", resolution, "Quadrature nodes per axis (>= 32)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      std::vector<SuiteRun> runs;
      const std::vector<std::string> names =
          suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name};
      std::vector<VerificationReport> all;
      Json j;
      Json list = Json::array();
      std::string csv;
      for (const std::string& n : names) {
        const SuiteRun run = run_suite(n, suite);
        list.push_back(to_json(run));
        all.insert(all.end(), run.reports.begin(), run.reports.end());
        std::string part = summary_csv(run);
        if (!csv.empty()) part = part.substr(part.find('\n') + 1);
        csv += part;
      }
      const int code = exit_code(all);
      if (names.size() == 1) {
        j = list.front();
      } else {
        j["suites"] = list;
        j["exit_code"] = code;
      }
      emit(dump(j), output);
      if (!csv_path.empty()) emit(csv, csv_path);
      return code;
    }
    if (*chain) {
      if (!GaugeBall(origin, chain_R).contains(start)) throw UsageError("start point is outside B_R(0)");
      emit(dump(to_json(build_chain(start, chain_R))), output);
      return 0;
    }
    if (*integ) {
      const Region region = parse_region(region_text);
      const QuadratureSpec spec = QuadratureSpec::from_resolution(resolution, eps);
      Json j = to_json(integrate_named(integrand, region, spec));
      emit(dump(j), output);
      return 0;
    }
    if (*exporter) {
      const Region region = parse_region(region_text);
      ScalarField u = gauge_field();
      try {
        u = catalog_entry(export_field).field;
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
      emit(field_csv(u, interior_samples(region, count, seed)), output);
      return 0;
    }
    if (*constants) {
      const QuadratureSpec spec = QuadratureSpec::from_resolution(resolution);
      Json j;
      j["unit_ball_volume"] = to_json(unit_ball_volume(spec));
      j["c1"] = to_json(cone_constant(spec));
      j["alpha"] = to_json(alpha_constant());
      emit(dump(j), output);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
