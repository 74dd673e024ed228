#include "dispheres/verify.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "dispheres/errors.hpp"
#include "dispheres/grid.hpp"
#include "dispheres/json_io.hpp"
#include "dispheres/planner.hpp"
#include "dispheres/sample.hpp"

namespace dispheres::verify {

namespace {

using oracle::GridGraph;
using oracle::VertexId;
using planner::PartitionLabel;
using planner::PlannerOrder;
using sample::Rng;

constexpr std::size_t kOracleAllPairsVertexLimit = 4096;
constexpr std::size_t kRouteCheckVertexLimit = 1024;
constexpr unsigned kMaxDenominator = 16;

std::uint64_t check_seed(const RunConfig& cfg, std::uint64_t salt) {
  return cfg.seed * 0x9E3779B97F4A7C15ULL + salt;
}

void add_counter(CheckResult& r, std::string key, std::string value) {
  r.counters.emplace_back(std::move(key), std::move(value));
}

void add_counter(CheckResult& r, std::string key, std::size_t value) {
  add_counter(r, std::move(key), std::to_string(value));
}

void note_failure(CheckResult& r, const std::string& detail) {
  r.passed = false;
  if (r.detail.empty()) r.detail = detail;
}

Rat abs_difference(const Rat& a, const Rat& b) {
  Rat d = a - b;
  if (d < 0) d = -d;
  return d;
}

// Exact sup-distance of two PL paths: the coordinatewise difference is PL
// with breakpoints in the union of the two stage sets, so the L-infinity sup
// over s is attained at one of those breakpoints.
Rat sup_distance(const Dipath& f, const Dipath& g) {
  Rat best(0);
  const std::size_t dims = f.coordinate_count();
  const auto scan = [&](const std::vector<Rat>& stages) {
    for (const Rat& s : stages) {
      const Point a = f.evaluate(s);
      const Point b = g.evaluate(s);
      for (std::size_t i = 0; i < dims; ++i) {
        const Rat d = abs_difference(a[i], b[i]);
        if (d > best) best = d;
      }
    }
  };
  scan(f.stages());
  scan(g.stages());
  return best;
}

// x = -..-0-..- and y = -..-1-..- with the pinned slot shared.
bool forced_intersection_pattern(const Point& x, const Point& y) {
  const CoordPattern px = pattern_of(x);
  const CoordPattern py = pattern_of(y);
  std::optional<std::size_t> slot;
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (px[i] == CoordClass::Interior && py[i] == CoordClass::Interior) continue;
    if (px[i] == CoordClass::Zero && py[i] == CoordClass::One && !slot) {
      slot = i;
      continue;
    }
    return false;
  }
  return slot.has_value();
}

std::optional<std::vector<int>> lattice_of(const Point& p, int m) {
  std::vector<int> out;
  out.reserve(p.coordinate_count());
  for (const Rat& c : p.coords()) {
    const Rat scaled = c * m;
    if (scaled.get_den() != 1) return std::nullopt;
    out.push_back(static_cast<int>(scaled.get_num().get_si()));
  }
  return out;
}

// Expands the planned dipath into unit lattice steps and checks every step
// is a grid edge. Valid only for plans between grid vertices.
bool lattice_route_valid(const GridGraph& g, const Dipath& path) {
  const int m = g.resolution();
  auto cur = lattice_of(path.waypoint(0), m);
  if (!cur) return false;
  auto cur_id = g.find_vertex(*cur);
  if (!cur_id) return false;
  for (std::size_t j = 0; j + 1 < path.waypoint_count(); ++j) {
    const auto target = lattice_of(path.waypoint(j + 1), m);
    if (!target) return false;
    std::size_t moving = path.coordinate_count();
    for (std::size_t i = 0; i < target->size(); ++i) {
      if ((*cur)[i] == (*target)[i]) continue;
      if (moving != path.coordinate_count()) return false;  // staircase legs move one axis
      moving = i;
    }
    if (moving == path.coordinate_count()) continue;  // degenerate leg
    while ((*cur)[moving] < (*target)[moving]) {
      ++(*cur)[moving];
      const auto next_id = g.find_vertex(*cur);
      if (!next_id) return false;
      const auto& succ = g.successors(*cur_id);
      if (std::find(succ.begin(), succ.end(), *next_id) == succ.end()) return false;
      cur_id = next_id;
    }
  }
  return true;
}

CheckResult check_grid_structure(const RunConfig& cfg) {
  CheckResult r{.name = "grid_structure", .passed = true, .counters = {}, .detail = {}};
  const GridGraph g(cfg.n, cfg.m);
  const std::size_t d = cfg.n + 1;

  std::uint64_t outer = 1, inner = 1;
  for (std::size_t i = 0; i < d; ++i) {
    outer *= cfg.m + 1;
    inner *= cfg.m - 1;
  }
  const std::uint64_t expected = outer - inner;
  if (g.vertex_count() != expected) {
    note_failure(r, "vertex count " + std::to_string(g.vertex_count()) + " != expected " +
                        std::to_string(expected));
  }

  const long two_m = 2 * g.resolution();
  for (std::size_t id = 0; id < g.vertex_count(); ++id) {
    const auto u = g.vertex(static_cast<VertexId>(id));
    long sum_u = 0;
    for (int c : u) sum_u += c;
    for (VertexId vid : g.successors(static_cast<VertexId>(id))) {
      const auto v = g.vertex(vid);
      long sum_v = 0;
      for (int c : v) sum_v += c;
      if (sum_v != sum_u + 1) {
        note_failure(r, "edge does not raise the coordinate sum by one");
      }
      std::vector<Rat> midpoint;
      midpoint.reserve(d);
      for (std::size_t i = 0; i < d; ++i) midpoint.push_back(rat(u[i] + v[i], two_m));
      if (!on_boundary(Point(std::move(midpoint)))) {
        note_failure(r, "edge midpoint leaves the boundary");
      }
    }
  }

  add_counter(r, "vertices", g.vertex_count());
  add_counter(r, "expected_vertices", static_cast<std::size_t>(expected));
  add_counter(r, "edges", g.edge_count());
  return r;
}

CheckResult check_oracle_agreement(const RunConfig& cfg) {
  CheckResult r{.name = "oracle_agreement", .passed = true, .counters = {}, .detail = {}};
  const GridGraph g(cfg.n, cfg.m);
  if (g.vertex_count() > kOracleAllPairsVertexLimit) {
    throw Error(ErrorCode::CapExceeded,
                "oracle agreement guardrail: grid has " + std::to_string(g.vertex_count()) +
                    " vertices, all-pairs limit is " +
                    std::to_string(kOracleAllPairsVertexLimit));
  }
  std::vector<Point> points;
  points.reserve(g.vertex_count());
  for (std::size_t id = 0; id < g.vertex_count(); ++id) {
    points.push_back(g.to_point(static_cast<VertexId>(id)));
  }

  const bool check_routes = g.vertex_count() <= kRouteCheckVertexLimit;
  std::size_t pairs = 0, reachable_pairs = 0, mismatches = 0, routes_checked = 0;
  for (std::size_t src = 0; src < g.vertex_count(); ++src) {
    const std::vector<char> seen = reachable_from(g, static_cast<VertexId>(src));
    for (std::size_t dst = 0; dst < g.vertex_count(); ++dst) {
      ++pairs;
      const bool by_oracle = seen[dst] != 0;
      const bool by_conditions = planner::is_reachable(points[src], points[dst]);
      if (by_oracle != by_conditions) {
        ++mismatches;
        note_failure(r, "oracle and analytic decision disagree on " + points[src].str() +
                            " -> " + points[dst].str());
        continue;
      }
      if (!by_oracle) continue;
      ++reachable_pairs;
      if (check_routes) {
        const Dipath route = planner::plan(points[src], points[dst]);
        if (!stays_on_boundary(route) || !lattice_route_valid(g, route)) {
          note_failure(r, "planned route is not a valid lattice route for " +
                              points[src].str() + " -> " + points[dst].str());
        }
        ++routes_checked;
      }
    }
  }

  add_counter(r, "vertices", g.vertex_count());
  add_counter(r, "pairs", pairs);
  add_counter(r, "reachable_pairs", reachable_pairs);
  add_counter(r, "mismatches", mismatches);
  add_counter(r, "routes_checked", routes_checked);
  return r;
}

CheckResult check_condition_geometry(const RunConfig& cfg) {
  CheckResult r{.name = "condition_geometry", .passed = true, .counters = {}, .detail = {}};
  Rng rng(check_seed(cfg, 3));
  const std::size_t d = cfg.n + 1;
  const PlannerOrder orders[2] = {PlannerOrder::identity(d), PlannerOrder::reversal(d)};
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const auto [x, y] = sample::boundary_ordered_pair(rng, d, kMaxDenominator);
    for (const PlannerOrder& order : orders) {
      const bool by_condition = planner::violates(x, y, order);
      const bool by_geometry = !stays_on_boundary(planner::staircase(x, y, order));
      if (by_condition != by_geometry) {
        ++disagreements;
        note_failure(r, "condition and staircase geometry disagree on " + x.str() + " -> " +
                            y.str());
      }
    }
  }
  add_counter(r, "samples", cfg.samples);
  add_counter(r, "orders", std::size_t{2});
  add_counter(r, "disagreements", disagreements);
  return r;
}

void disjointness_probe(CheckResult& r, const Point& x, const Point& y, std::size_t& both_hold) {
  const ReachDiagnostics diag = planner::explain_reachability(x, y);
  if (!diag.u1.holds || !diag.u2.holds) return;
  ++both_hold;
  if (diag.reachable()) {
    note_failure(r, "pair satisfies both conditions yet is reachable: " + x.str() + " -> " +
                        y.str());
  }
  if (on_boundary(x) && on_boundary(y) && !forced_intersection_pattern(x, y)) {
    note_failure(r, "boundary pair in both conditions without the forced 0/1 pattern: " +
                        x.str() + " -> " + y.str());
  }
}

CheckResult check_condition_disjointness(const RunConfig& cfg) {
  CheckResult r{.name = "condition_disjointness", .passed = true, .counters = {}, .detail = {}};
  Rng rng(check_seed(cfg, 4));
  const std::size_t d = cfg.n + 1;
  std::size_t both_hold = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const auto [x, y] = sample::boundary_ordered_pair(rng, d, kMaxDenominator);
    disjointness_probe(r, x, y, both_hold);
  }

  // exhaustive sweep over the ordered class combinations of every coordinate:
  // 00, 0-, 01, -- (equal), -- (strict), -1, 11
  std::size_t exhaustive_pairs = 0;
  if (cfg.n <= 4) {
    const Rat half = rat(1, 2), third = rat(1, 3), two_thirds = rat(2, 3);
    std::vector<std::size_t> digits(d, 0);
    while (true) {
      std::vector<Rat> xs, ys;
      xs.reserve(d);
      ys.reserve(d);
      for (std::size_t i = 0; i < d; ++i) {
        switch (digits[i]) {
          case 0: xs.push_back(Rat(0)); ys.push_back(Rat(0)); break;
          case 1: xs.push_back(Rat(0)); ys.push_back(half); break;
          case 2: xs.push_back(Rat(0)); ys.push_back(Rat(1)); break;
          case 3: xs.push_back(half); ys.push_back(half); break;
          case 4: xs.push_back(third); ys.push_back(two_thirds); break;
          case 5: xs.push_back(half); ys.push_back(Rat(1)); break;
          default: xs.push_back(Rat(1)); ys.push_back(Rat(1)); break;
        }
      }
      disjointness_probe(r, Point(std::move(xs)), Point(std::move(ys)), both_hold);
      ++exhaustive_pairs;
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (++digits[i] <= 6) break;
        digits[i] = 0;
      }
      if (i == d) break;
    }
  }

  add_counter(r, "samples", cfg.samples);
  add_counter(r, "exhaustive_pairs", exhaustive_pairs);
  add_counter(r, "both_hold_pairs", both_hold);
  return r;
}

CheckResult check_partition_soundness(const RunConfig& cfg) {
  CheckResult r{.name = "partition_soundness", .passed = true, .counters = {}, .detail = {}};
  Rng rng(check_seed(cfg, 5));
  const std::size_t d = cfg.n + 1;
  std::size_t a1 = 0, a2 = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const auto [x, y] = sample::reachable_pair(rng, d, kMaxDenominator);
    const PartitionLabel label = planner::classify(x, y);
    (label == PartitionLabel::A1 ? a1 : a2) += 1;
    const Dipath route = planner::plan(x, y);
    if (!stays_on_boundary(route) || route.start() != x || route.end() != y) {
      note_failure(r, "plan violates its contract on " + x.str() + " -> " + y.str());
    }
    const bool u1 = planner::violates(x, y, PlannerOrder::identity(d));
    if (u1 != (label == PartitionLabel::A2)) {
      note_failure(r, "label disagrees with the identity-order condition on " + x.str() +
                          " -> " + y.str());
    }
  }

  // one staircase order cannot cover everything: the canonical A2 pair
  std::vector<Rat> xs{Rat(0), rat(1, 3)}, ys{Rat(1), Rat(1)};
  for (std::size_t i = 2; i < d; ++i) {
    xs.push_back(rat(1, 2));
    ys.push_back(rat(1, 2));
  }
  const Point fx(std::move(xs)), fy(std::move(ys));
  const bool insufficiency = planner::violates(fx, fy, PlannerOrder::identity(d)) &&
                             planner::is_reachable(fx, fy) &&
                             planner::classify(fx, fy) == PartitionLabel::A2;
  if (!insufficiency) {
    note_failure(r, "expected A2 witness pair failed: " + fx.str() + " -> " + fy.str());
  }

  add_counter(r, "samples", cfg.samples);
  add_counter(r, "a1_pairs", a1);
  add_counter(r, "a2_pairs", a2);
  add_counter(r, "identity_planner_insufficient", std::string(insufficiency ? "yes" : "no"));
  return r;
}

CheckResult check_fiber_classes(const RunConfig& cfg) {
  CheckResult r{.name = "fiber_classes", .passed = true, .counters = {}, .detail = {}};
  const GridGraph g(cfg.n, cfg.m);
  const int m = g.resolution();

  if (cfg.n == 1) {
    const std::vector<int> origin{0, 0};
    const std::vector<int> corner{m, m};
    const std::size_t classes =
        oracle::dihomotopy_classes(g, g.vertex_id(origin), g.vertex_id(corner), cfg.path_cap);
    if (classes != 2) {
      note_failure(r, "corner pair expected 2 classes, got " + std::to_string(classes));
    }
    add_counter(r, "corner_pair_classes", classes);
    if (m >= 2) {
      const std::vector<int> side{m, 1};
      const std::size_t single =
          oracle::dihomotopy_classes(g, g.vertex_id(origin), g.vertex_id(side), cfg.path_cap);
      if (single != 1) {
        note_failure(r, "single-route pair expected 1 class, got " + std::to_string(single));
      }
      add_counter(r, "single_route_classes", single);
    }
  } else if (cfg.n == 2) {
    for (int k = 1; k < m; ++k) {
      const std::vector<int> from{0, 0, k};
      const std::vector<int> to{m, m, k};
      const std::size_t classes =
          oracle::dihomotopy_classes(g, g.vertex_id(from), g.vertex_id(to), cfg.path_cap);
      if (classes != 2) {
        note_failure(r, "slice pair k=" + std::to_string(k) + " expected 2 classes, got " +
                            std::to_string(classes));
      }
      add_counter(r, "slice_classes_k" + std::to_string(k), classes);
    }
  }

  std::vector<int> fixed(cfg.n + 1, 0);
  const VertexId v = g.vertex_id(fixed);
  const std::size_t constant = oracle::dihomotopy_classes(g, v, v, cfg.path_cap);
  if (constant != 1) {
    note_failure(r, "constant pair expected 1 class, got " + std::to_string(constant));
  }
  add_counter(r, "constant_pair_classes", constant);
  return r;
}

CheckResult check_halfsquare(const RunConfig& cfg) {
  CheckResult r{.name = "halfsquare_confinement", .passed = true, .counters = {}, .detail = {}};
  const GridGraph g(cfg.n, cfg.m);
  const int m = g.resolution();
  std::size_t combos = 0;
  for (int t_index = 1; t_index < m; ++t_index) {
    for (int x_index = 1; x_index < m; ++x_index) {
      ++combos;
      if (!oracle::verify_halfsquare_confinement(g, t_index, x_index)) {
        note_failure(r, "confinement failed at t_index=" + std::to_string(t_index) +
                            " x_index=" + std::to_string(x_index));
      }
      const Rat t = rat(t_index, m), xv = rat(x_index, m);
      const Point top_start({Rat(0), t, xv});
      const Point bottom_start({t, Rat(0), xv});
      const Point goal({Rat(1), Rat(1), xv});
      const PlannerOrder id3 = PlannerOrder::identity(3), rev3 = PlannerOrder::reversal(3);
      if (!planner::violates(top_start, goal, id3) ||
          planner::violates(top_start, goal, rev3) ||
          !planner::violates(bottom_start, goal, rev3) ||
          planner::violates(bottom_start, goal, id3) ||
          !planner::is_reachable(top_start, goal) ||
          !planner::is_reachable(bottom_start, goal)) {
        note_failure(r, "half-square pair conditions failed at t_index=" +
                            std::to_string(t_index) + " x_index=" + std::to_string(x_index));
      }
      // the two limit routes disagree: midpoints at squared distance 2
      const Point mid_bottom({Rat(1), Rat(0), xv});
      const Point mid_top({Rat(0), Rat(1), xv});
      Rat sq(0);
      for (std::size_t i = 0; i < 3; ++i) {
        const Rat dlt = mid_bottom[i] - mid_top[i];
        sq += dlt * dlt;
      }
      if (sq != 2) {
        note_failure(r, "limit-route midpoints are not at squared distance 2");
      }
    }
  }
  add_counter(r, "interior_combos", combos);
  add_counter(r, "midpoint_squared_distance", std::string("2/1"));
  return r;
}

CheckResult check_homotopy(const RunConfig& cfg) {
  CheckResult r{.name = "homotopy_contraction", .passed = true, .counters = {}, .detail = {}};
  Rng rng(check_seed(cfg, 8));
  const std::size_t count = std::max<std::size_t>(1, cfg.samples / 10);
  const std::size_t d = cfg.n + 1;
  const PlannerOrder order = PlannerOrder::identity(d);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Dipath gamma = sample::monotone_dipath(rng, d, 5, kMaxDenominator);
    const Dipath section = planner::staircase(gamma.start(), gamma.end(), order);
    if (!(planner::contract_homotopy(gamma, Rat(0), order) == section)) {
      ++failures;
      note_failure(r, "H(gamma,0) is not the staircase section");
    }
    if (!(planner::contract_homotopy(gamma, Rat(1), order) == gamma)) {
      ++failures;
      note_failure(r, "H(gamma,1) is not gamma");
    }
    const Rat lipschitz = planner::contraction_lipschitz_bound(gamma);
    std::optional<Dipath> previous;
    Rat previous_t(0);
    for (int k = 0; k <= 10; ++k) {
      const Rat t = rat(k, 10);
      const Dipath h = planner::contract_homotopy(gamma, t, order);
      if (h.start() != gamma.start() || h.end() != gamma.end()) {
        ++failures;
        note_failure(r, "homotopy endpoints moved");
      }
      if (previous) {
        const Rat sup = sup_distance(*previous, h);
        const Rat allowance = lipschitz * (t - previous_t);
        if (sup > allowance) {
          ++failures;
          note_failure(r, "continuity surrogate exceeded: sup " + to_fraction_string(sup) +
                              " > " + to_fraction_string(allowance));
        }
      }
      previous = h;
      previous_t = t;
    }
  }
  add_counter(r, "dipaths", count);
  add_counter(r, "t_values", std::size_t{11});
  add_counter(r, "failures", failures);
  return r;
}

}  // namespace

void RunConfig::validate() const {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::ParameterRange, "verification requires n >= 1 and m >= 1");
  }
  if (samples > 100'000'000) {
    throw Error(ErrorCode::ParameterRange, "sample count guardrail: at most 1e8 samples");
  }
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

Report run_verification(const RunConfig& config) {
  config.validate();
  Report report{.config = config, .checks = {}};
  report.checks.push_back(check_grid_structure(config));
  report.checks.push_back(check_oracle_agreement(config));
  report.checks.push_back(check_condition_geometry(config));
  report.checks.push_back(check_condition_disjointness(config));
  report.checks.push_back(check_partition_soundness(config));
  if (config.n <= 2) report.checks.push_back(check_fiber_classes(config));
  if (config.n == 2 && config.m >= 2) report.checks.push_back(check_halfsquare(config));
  report.checks.push_back(check_homotopy(config));
  return report;
}

std::string render_json(const Report& report) {
  Json doc;
  doc["schema"] = std::string(kSchemaTag);
  doc["command"] = "verify";
  Json cfg;
  cfg["n"] = report.config.n;
  cfg["m"] = report.config.m;
  cfg["samples"] = report.config.samples;
  cfg["seed"] = report.config.seed;
  cfg["format"] = report.config.format == OutputFormat::Json ? "json" : "csv";
  cfg["path_cap"] = report.config.path_cap;
  doc["config"] = std::move(cfg);
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    Json counters;
    for (const auto& [key, value] : c.counters) counters[key] = value;
    jc["counters"] = std::move(counters);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  doc["passed"] = report.all_passed();
  return doc.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  std::string out = "check,result,counters\n";
  for (const CheckResult& c : report.checks) {
    out += c.name;
    out += c.passed ? ",pass," : ",fail,";
    for (std::size_t i = 0; i < c.counters.size(); ++i) {
      if (i > 0) out += "|";
      out += c.counters[i].first + "=" + c.counters[i].second;
    }
    out += "\n";
  }
  out += std::string("summary,") + (report.all_passed() ? "pass" : "fail") +
         ",checks=" + std::to_string(report.checks.size()) + "\n";
  return out;
}

}  // namespace dispheres::verify
