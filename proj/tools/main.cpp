#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dispheres/json_io.hpp"
#include "dispheres/planner.hpp"
#include "dispheres/verify.hpp"

namespace {

using dispheres::Error;
using dispheres::ErrorCode;
using dispheres::Json;
using dispheres::Point;

// exit codes: 0 ok / reachable, 1 unreachable or failed checks,
// 2 malformed input, 3 parameter or guardrail errors (verify)
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuardrail = 3;

Point parse_point_arg(const std::string& text) {
  std::vector<dispheres::Rat> coords;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t comma = text.find(',', begin);
    const std::string token =
        comma == std::string::npos ? text.substr(begin) : text.substr(begin, comma - begin);
    const auto value = dispheres::parse_rational(token);
    if (!value) {
      throw Error(ErrorCode::BadInput,
                  "cannot parse coordinate '" + token +
                      "': expected an integer or p/q rational (decimals are rejected)");
    }
    coords.push_back(*value);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return Point(std::move(coords));
}

int emit_error(const Error& error, int exit_code) {
  Json doc;
  doc["schema"] = std::string(dispheres::kSchemaTag);
  doc["error"] = dispheres::error_to_json(error);
  std::cout << doc.dump(2) << "\n";
  std::cerr << "error: " << error.what() << "\n";
  return exit_code;
}

int run_reach(const std::string& xs, const std::string& ys) {
  try {
    const Point x = parse_point_arg(xs);
    const Point y = parse_point_arg(ys);
    const dispheres::ReachDiagnostics diag = dispheres::planner::explain_reachability(x, y);
    Json doc;
    doc["schema"] = std::string(dispheres::kSchemaTag);
    doc["command"] = "reach";
    doc["x"] = dispheres::point_to_json(x);
    doc["y"] = dispheres::point_to_json(y);
    doc["reachable"] = diag.reachable();
    doc["witness"] = dispheres::diagnostics_to_json(diag);
    std::cout << doc.dump(2) << "\n";
    return diag.reachable() ? kExitOk : kExitNegative;
  } catch (const Error& e) {
    return emit_error(e, kExitBadInput);
  }
}

int run_plan(const std::string& xs, const std::string& ys, bool figure) {
  Json doc;
  doc["schema"] = std::string(dispheres::kSchemaTag);
  doc["command"] = "plan";
  try {
    const Point x = parse_point_arg(xs);
    const Point y = parse_point_arg(ys);
    if (figure && x.coordinate_count() != 3) {
      throw Error(ErrorCode::BadInput, "--figure expects 3-coordinate points");
    }
    try {
      const dispheres::planner::PartitionLabel label = dispheres::planner::classify(x, y);
      const dispheres::Dipath route = dispheres::planner::plan(x, y);
      doc["label"] = std::string(dispheres::planner::partition_label_name(label));
      doc["dipath"] = dispheres::dipath_to_json(route);
      if (figure) {
        Json polyline = Json::array();
        for (const Point& w : route.waypoints()) {
          Json vertex = Json::array();
          for (const dispheres::Rat& c : w.coords()) vertex.push_back(dispheres::to_double(c));
          polyline.push_back(std::move(vertex));
        }
        Json fig;
        fig["polyline"] = std::move(polyline);
        doc["figure"] = std::move(fig);
      }
      std::cout << doc.dump(2) << "\n";
      return kExitOk;
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::NotReachable:
        case ErrorCode::NotOnBoundary:
        case ErrorCode::NotOrdered:
          return emit_error(e, kExitNegative);
        default:
          throw;
      }
    }
  } catch (const Error& e) {
    return emit_error(e, kExitBadInput);
  }
}

int run_verify(const dispheres::verify::RunConfig& config) {
  try {
    const dispheres::verify::Report report = dispheres::verify::run_verification(config);
    std::cout << (config.format == dispheres::verify::OutputFormat::Json
                      ? dispheres::verify::render_json(report)
                      : dispheres::verify::render_csv(report));
    return report.all_passed() ? kExitOk : kExitNegative;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::ParameterRange:
      case ErrorCode::CapExceeded:
        return emit_error(e, kExitGuardrail);
      default:
        return emit_error(e, kExitBadInput);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact directed motion planning on the unit-cube boundary"};
  app.require_subcommand(1);

  std::string reach_x, reach_y;
  CLI::App* reach = app.add_subcommand(
      "reach", "decide directed boundary reachability between two points");
  reach->add_option("x", reach_x, "start point: comma-separated rationals, e.g. 0,1/3,1/2")
      ->required();
  reach->add_option("y", reach_y, "end point")->required();

  std::string plan_x, plan_y;
  bool figure = false;
  CLI::App* plan = app.add_subcommand(
      "plan", "emit the partition label and staircase dipath of a reachable pair");
  plan->add_option("x", plan_x, "start point")->required();
  plan->add_option("y", plan_y, "end point")->required();
  plan->add_flag("--figure", figure, "also emit polyline plot data (3-coordinate points only)");

  dispheres::verify::RunConfig config;
  std::string format = "json";
  CLI::App* verify =
      app.add_subcommand("verify", "run the full verification battery for one configuration");
  verify->add_option("--n", config.n, "sphere dimension")->capture_default_str();
  verify->add_option("--m", config.m, "grid resolution")->capture_default_str();
  verify->add_option("--samples", config.samples, "sample count for randomized checks")
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "random seed")->capture_default_str();
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (const char* cap = std::getenv("DISPHERES_GUARDRAIL_PATHS")) {
    const std::string text(cap);
    if (text.empty() ||
        !std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
      std::cerr << "error: DISPHERES_GUARDRAIL_PATHS must be a nonnegative integer\n";
      return kExitBadInput;
    }
    config.path_cap = std::strtoull(text.c_str(), nullptr, 10);
  }

  if (reach->parsed()) return run_reach(reach_x, reach_y);
  if (plan->parsed()) return run_plan(plan_x, plan_y, figure);
  config.format = format == "csv" ? dispheres::verify::OutputFormat::Csv
                                  : dispheres::verify::OutputFormat::Json;
  return run_verify(config);
}
