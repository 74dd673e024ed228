// Release gate for the whole library: every criterion below must hold
// exactly (rational arithmetic, zero tolerance) at the stated scale. Prints
// one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dispheres/grid.hpp"
#include "dispheres/planner.hpp"
#include "dispheres/sample.hpp"
#include "support/reference.hpp"

using dispheres::CoordClass;
using dispheres::Dipath;
using dispheres::pattern_of;
using dispheres::Point;
using dispheres::Rat;
using dispheres::rat;
using dispheres::ReachDiagnostics;
using namespace dispheres::planner;
using namespace dispheres::oracle;
using dispheres::sample::Rng;

namespace {

constexpr std::uint64_t kSeed = 2026;
constexpr std::size_t kPairSamples = 100'000;
constexpr std::size_t kHomotopySamples = 1'000;
constexpr unsigned kMaxDenominator = 16;

bool g_all_passed = true;

class Criterion {
 public:
  Criterion(int id, std::string name) : id_(id), name_(std::move(name)) {
    start_ = std::chrono::steady_clock::now();
  }

  void fail(const std::string& why) {
    ok_ = false;
    if (why_.empty()) why_ = why;
  }
  void require(bool condition, const std::string& why) {
    if (!condition) fail(why);
  }

  void finish(const std::string& info) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << "criterion " << id_ << " (" << name_ << "): " << (ok_ ? "PASS" : "FAIL")
              << " [" << info << ", " << timing << "]";
    if (!ok_) std::cout << " -- " << why_;
    std::cout << "\n";
    if (!ok_) g_all_passed = false;
  }

 private:
  int id_;
  std::string name_;
  bool ok_ = true;
  std::string why_;
  std::chrono::steady_clock::time_point start_;
};

// x = -..-0-..- and y = -..-1-..- with the pin in one shared slot
bool forced_intersection_pattern(const Point& x, const Point& y) {
  const auto px = pattern_of(x);
  const auto py = pattern_of(y);
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

void criterion_1_oracle_agreement() {
  Criterion crit(1, "reachability decision matches the grid oracle");
  std::size_t pairs = 0, grids = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const GridGraph g(n, m);
      ++grids;
      std::vector<Point> points;
      points.reserve(g.vertex_count());
      for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        points.push_back(g.to_point(static_cast<VertexId>(id)));
      }
      for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        const std::vector<char> reach = reachable_from(g, static_cast<VertexId>(a));
        for (std::size_t b = 0; b < g.vertex_count(); ++b) {
          ++pairs;
          if ((reach[b] != 0) != is_reachable(points[a], points[b])) {
            crit.fail("disagreement at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      ": " + points[a].str() + " -> " + points[b].str());
          }
        }
      }
    }
  }
  crit.finish(std::to_string(pairs) + " pairs over " + std::to_string(grids) + " grids");
}

void criterion_2_condition_geometry() {
  Criterion crit(2, "staircase conditions equal the boundary geometry");
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    Rng rng(kSeed + n);
    const std::size_t d = n + 1;
    const PlannerOrder orders[2] = {PlannerOrder::identity(d), PlannerOrder::reversal(d)};
    for (std::size_t i = 0; i < kPairSamples; ++i) {
      const auto [x, y] = dispheres::sample::boundary_ordered_pair(rng, d, kMaxDenominator);
      for (const PlannerOrder& order : orders) {
        ++checked;
        if (violates(x, y, order) != !stays_on_boundary(staircase(x, y, order))) {
          crit.fail("disagreement on " + x.str() + " -> " + y.str());
        }
      }
    }
  }
  crit.finish(std::to_string(checked) + " staircases");
}

void check_disjointness_pair(Criterion& crit, const Point& x, const Point& y,
                             std::size_t& both_hold) {
  const ReachDiagnostics diag = explain_reachability(x, y);
  if (!diag.u1.holds || !diag.u2.holds) return;
  ++both_hold;
  if (diag.reachable()) {
    crit.fail("reachable pair in both conditions: " + x.str() + " -> " + y.str());
  }
  if (dispheres::on_boundary(x) && dispheres::on_boundary(y) &&
      !forced_intersection_pattern(x, y)) {
    crit.fail("boundary pair in both conditions without the forced pattern: " + x.str() +
              " -> " + y.str());
  }
}

void criterion_3_disjointness() {
  Criterion crit(3, "both conditions never meet inside the reachable pairs");
  std::size_t both_hold = 0, sampled = 0, exhaustive = 0;
  // the same seeded streams as criterion 2
  for (std::size_t n = 1; n <= 5; ++n) {
    Rng rng(kSeed + n);
    for (std::size_t i = 0; i < kPairSamples; ++i) {
      const auto [x, y] = dispheres::sample::boundary_ordered_pair(rng, n + 1, kMaxDenominator);
      ++sampled;
      check_disjointness_pair(crit, x, y, both_hold);
    }
  }
  // exhaustive ordered class/strictness combinations per coordinate
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t d = n + 1;
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
      ++exhaustive;
      check_disjointness_pair(crit, Point(std::move(xs)), Point(std::move(ys)), both_hold);
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (++digits[i] <= 6) break;
        digits[i] = 0;
      }
      if (i == d) break;
    }
  }
  crit.finish(std::to_string(sampled) + " sampled + " + std::to_string(exhaustive) +
              " exhaustive pairs, " + std::to_string(both_hold) + " in both conditions");
}

void criterion_4_partition_soundness() {
  Criterion crit(4, "the two-part planner serves every reachable pair");
  std::size_t planned = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    Rng rng(kSeed * 31 + n);
    const std::size_t d = n + 1;
    for (std::size_t i = 0; i < kPairSamples; ++i) {
      const auto [x, y] = dispheres::sample::reachable_pair(rng, d, kMaxDenominator);
      const Dipath route = plan(x, y);
      ++planned;
      if (!stays_on_boundary(route)) {
        crit.fail("route leaves the boundary: " + x.str() + " -> " + y.str());
      }
      if (route.start() != x || route.end() != y) {
        crit.fail("route endpoints moved: " + x.str() + " -> " + y.str());
      }
      for (std::size_t j = 0; j + 1 < route.waypoint_count(); ++j) {
        for (std::size_t c = 0; c < d; ++c) {
          if (route.waypoint(j)[c] > route.waypoint(j + 1)[c]) {
            crit.fail("route is not monotone: " + x.str() + " -> " + y.str());
          }
        }
      }
    }
  }
  crit.finish(std::to_string(planned) + " planned pairs");
}

void criterion_5_single_planner_insufficiency() {
  Criterion crit(5, "one staircase planner cannot cover the reachable pairs");
  const Rat half = rat(1, 2);
  const Point top_start({Rat(0), half, half});     // (0,t,x) with t = x = 1/2
  const Point bottom_start({half, Rat(0), half});  // (t,0,x)
  const Point goal({Rat(1), Rat(1), half});
  const PlannerOrder id3 = PlannerOrder::identity(3);
  const PlannerOrder rev3 = PlannerOrder::reversal(3);

  crit.require(violates(top_start, goal, id3), "identity staircase should fail on (0,t,x)");
  crit.require(!stays_on_boundary(staircase(top_start, goal, id3)),
               "identity staircase should leave the boundary on (0,t,x)");
  crit.require(!violates(top_start, goal, rev3), "(0,t,x) should be served by the reversal");
  crit.require(violates(bottom_start, goal, rev3), "reversal staircase should fail on (t,0,x)");
  crit.require(!stays_on_boundary(staircase(bottom_start, goal, rev3)),
               "reversal staircase should leave the boundary on (t,0,x)");
  crit.require(!violates(bottom_start, goal, id3), "(t,0,x) should be served by the identity");
  crit.require(is_reachable(top_start, goal) && is_reachable(bottom_start, goal),
               "both half-square pairs are reachable");

  for (const std::size_t m : {std::size_t{2}, std::size_t{4}}) {
    const GridGraph g(2, m);
    const int mid = static_cast<int>(m) / 2;
    if (!verify_halfsquare_confinement(g, mid, mid)) {
      crit.fail("confinement failed at m=" + std::to_string(m));
    }
  }

  // the two limit routes disagree: midpoints at exact squared distance 2
  const Point mid_bottom({Rat(1), Rat(0), half});
  const Point mid_top({Rat(0), Rat(1), half});
  Rat sq(0);
  for (std::size_t i = 0; i < 3; ++i) {
    const Rat d = mid_bottom[i] - mid_top[i];
    sq += d * d;
  }
  crit.require(sq == 2, "limit midpoints squared distance must be exactly 2");
  crit.finish("fixed pairs at t=x=1/2, grids m in {2,4}");
}

void criterion_6_fiber_classes() {
  Criterion crit(6, "fibers over the distinguished pairs are disconnected");
  std::size_t queries = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    const GridGraph g(1, m);
    const int mm = static_cast<int>(m);
    const std::vector<int> from{0, 0}, to{mm, mm};
    ++queries;
    if (dihomotopy_classes(g, g.vertex_id(from), g.vertex_id(to), 1'000'000) != 2) {
      crit.fail("square corner pair at m=" + std::to_string(m) + " is not 2 classes");
    }
  }
  for (const std::size_t m : {std::size_t{2}, std::size_t{4}}) {
    const GridGraph g(2, m);
    const int mm = static_cast<int>(m);
    for (int k = 1; k < mm; ++k) {
      const std::vector<int> from{0, 0, k}, to{mm, mm, k};
      ++queries;
      if (dihomotopy_classes(g, g.vertex_id(from), g.vertex_id(to), 1'000'000) != 2) {
        crit.fail("slice pair k=" + std::to_string(k) + " m=" + std::to_string(m) +
                  " is not 2 classes");
      }
    }
    const std::vector<int> fixed{0, 0, mm};
    const VertexId v = g.vertex_id(fixed);
    ++queries;
    if (dihomotopy_classes(g, v, v, 1'000'000) != 1) {
      crit.fail("constant pair is not a single class at m=" + std::to_string(m));
    }
  }
  crit.finish(std::to_string(queries) + " class counts");
}

void criterion_7_contraction_homotopy() {
  Criterion crit(7, "the fiber contraction is exact and continuous");
  Rng rng(kSeed * 101);
  const PlannerOrder order = PlannerOrder::identity(2);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < kHomotopySamples; ++i) {
    const Dipath gamma = dispheres::sample::monotone_dipath(rng, 2, 5, kMaxDenominator);
    if (!(contract_homotopy(gamma, Rat(0), order) ==
          staircase(gamma.start(), gamma.end(), order))) {
      crit.fail("H(gamma,0) is not the staircase section");
    }
    if (!(contract_homotopy(gamma, Rat(1), order) == gamma)) {
      crit.fail("H(gamma,1) is not gamma");
    }
    const Rat bound = contraction_lipschitz_bound(gamma);
    std::optional<Dipath> previous;
    Rat previous_t(0);
    for (int k = 0; k <= 10; ++k) {
      const Rat t = rat(k, 10);
      const Dipath h = contract_homotopy(gamma, t, order);
      ++checked;
      if (h.start() != gamma.start() || h.end() != gamma.end()) {
        crit.fail("homotopy endpoints moved");
      }
      for (std::size_t j = 0; j + 1 < h.waypoint_count(); ++j) {
        for (std::size_t c = 0; c < 2; ++c) {
          if (h.waypoint(j)[c] > h.waypoint(j + 1)[c]) crit.fail("homotopy output not monotone");
        }
      }
      if (previous) {
        const Rat sup = testsupport::sup_distance(*previous, h);
        if (sup > bound * (t - previous_t)) {
          crit.fail("continuity surrogate violated: sup " + dispheres::to_fraction_string(sup) +
                    " over step " + dispheres::to_fraction_string(t - previous_t));
        }
      }
      previous = h;
      previous_t = t;
    }
  }
  crit.finish(std::to_string(kHomotopySamples) + " dipaths, " + std::to_string(checked) +
              " homotopy stops");
}

void criterion_8_structural_counts() {
  Criterion crit(8, "grid counts and acyclicity");
  std::size_t grids = 0, edges = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const GridGraph g(n, m);
      ++grids;
      std::size_t outer = 1, inner = 1;
      for (std::size_t i = 0; i <= n; ++i) {
        outer *= m + 1;
        inner *= m - 1;
      }
      if (g.vertex_count() != outer - inner) {
        crit.fail("vertex count formula failed at n=" + std::to_string(n) +
                  " m=" + std::to_string(m));
      }
      for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        const auto u = g.vertex(static_cast<VertexId>(id));
        long su = 0;
        for (int c : u) su += c;
        for (VertexId vid : g.successors(static_cast<VertexId>(id))) {
          ++edges;
          const auto v = g.vertex(vid);
          long sv = 0;
          for (int c : v) sv += c;
          if (sv != su + 1) crit.fail("edge fails to raise the coordinate sum by one");
        }
      }
    }
  }
  crit.finish(std::to_string(grids) + " grids, " + std::to_string(edges) + " edges");
}

}  // namespace

int main() {
  criterion_1_oracle_agreement();
  criterion_2_condition_geometry();
  criterion_3_disjointness();
  criterion_4_partition_soundness();
  criterion_5_single_planner_insufficiency();
  criterion_6_fiber_classes();
  criterion_7_contraction_homotopy();
  criterion_8_structural_counts();
  std::cout << (g_all_passed ? "ACCEPTANCE: all criteria passed\n"
                             : "ACCEPTANCE: FAILURES above\n");
  return g_all_passed ? 0 : 1;
}
