#include <doctest.h>

#include <vector>

#include "dispheres/grid.hpp"
#include "dispheres/planner.hpp"
#include "support/reference.hpp"

using dispheres::ErrorCode;
using dispheres::Rat;
using dispheres::rat;
using namespace dispheres::oracle;
using testsupport::error_code_of;

namespace {

std::vector<int> v2(int a, int b) { return {a, b}; }
std::vector<int> v3(int a, int b, int c) { return {a, b, c}; }

}  // namespace

TEST_CASE("grid construction") {
  SUBCASE("unit square") {
    const GridGraph g(1, 1);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
  }
  SUBCASE("subdivided square") {
    const GridGraph g(1, 2);
    CHECK(g.vertex_count() == 8);
  }
  SUBCASE("cube surface") {
    const GridGraph g(2, 2);
    CHECK(g.vertex_count() == 26);  // the center cell is the only interior point
  }
  SUBCASE("counts match the closed-form and the brute force") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = 1; m <= 4; ++m) {
        const GridGraph g(n, m);
        std::size_t outer = 1, inner = 1;
        for (std::size_t i = 0; i <= n; ++i) {
          outer *= m + 1;
          inner *= m - 1;
        }
        CHECK(g.vertex_count() == outer - inner);
        CHECK(g.vertex_count() ==
              testsupport::count_boundary_tuples(n + 1, static_cast<int>(m)));
      }
    }
  }
  SUBCASE("parameters are validated") {
    CHECK(error_code_of([] { GridGraph(0, 2); }) == ErrorCode::ParameterRange);
    CHECK(error_code_of([] { GridGraph(2, 0); }) == ErrorCode::ParameterRange);
  }
}

TEST_CASE("grid structure invariants") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const GridGraph g(n, m);
      for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        const auto u = g.vertex(static_cast<VertexId>(id));
        long su = 0;
        for (int c : u) su += c;
        for (VertexId vid : g.successors(static_cast<VertexId>(id))) {
          const auto v = g.vertex(vid);
          long sv = 0;
          for (int c : v) sv += c;
          CHECK(sv == su + 1);  // strictly increasing coordinate sum: acyclic
          std::vector<Rat> midpoint;
          for (std::size_t i = 0; i < u.size(); ++i) {
            midpoint.push_back(rat(u[i] + v[i], 2 * static_cast<long>(m)));
          }
          CHECK(dispheres::on_boundary(dispheres::Point(std::move(midpoint))));
        }
      }
      // no vertex reaches itself through a nonempty path
      for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        for (VertexId s : g.successors(static_cast<VertexId>(id))) {
          const auto reach = reachable_from(g, s);
          CHECK(!reach[id]);
        }
      }
    }
  }
}

TEST_CASE("oracle reachability") {
  const GridGraph g(2, 2);
  SUBCASE("reflexive") {
    const VertexId v = g.vertex_id(v3(0, 1, 1));
    CHECK(oracle_reach(g, v, v));
  }
  SUBCASE("opposite interior facets are not joined") {
    CHECK(!oracle_reach(g, v3(0, 1, 1), v3(2, 1, 1)));
  }
  SUBCASE("the slice pair is joined") { CHECK(oracle_reach(g, v3(0, 0, 1), v3(2, 2, 1))); }
  SUBCASE("interior tuples are not vertices") {
    CHECK(error_code_of([&] { g.vertex_id(v3(1, 1, 1)); }) == ErrorCode::BadInput);
    CHECK(!g.find_vertex(v3(1, 1, 1)).has_value());
    CHECK(error_code_of([&] { oracle_reach(g, v3(1, 1, 1), v3(2, 2, 2)); }) ==
          ErrorCode::BadInput);
  }
}

TEST_CASE("path enumeration") {
  SUBCASE("constant pair has the single empty path") {
    const GridGraph g(1, 2);
    const VertexId v = g.vertex_id(v2(0, 2));
    const auto paths = enumerate_dipaths(g, v, v, 10);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].vertices == std::vector<VertexId>{v});
  }
  SUBCASE("square corner-to-corner has exactly the two side routes") {
    const GridGraph g(1, 2);
    const auto paths = enumerate_dipaths(g, g.vertex_id(v2(0, 0)), g.vertex_id(v2(2, 2)), 10);
    CHECK(paths.size() == 2);
  }
  SUBCASE("slice pair reduces to the square boundary") {
    const GridGraph g(2, 2);
    const auto paths = enumerate_dipaths(g, g.vertex_id(v3(0, 0, 1)), g.vertex_id(v3(2, 2, 1)), 10);
    CHECK(paths.size() == 2);
    for (const LatticeDipath& p : paths) {
      for (VertexId v : p.vertices) CHECK(g.vertex(v)[2] == 1);  // conserved coordinate
    }
  }
  SUBCASE("unordered pairs have no monotone routes") {
    const GridGraph g(1, 2);
    CHECK(enumerate_dipaths(g, g.vertex_id(v2(2, 0)), g.vertex_id(v2(0, 2)), 10).empty());
  }
  SUBCASE("the cap trips an explosion error naming the count") {
    const GridGraph g(1, 2);
    const auto code = error_code_of([&] {
      enumerate_dipaths(g, g.vertex_id(v2(0, 0)), g.vertex_id(v2(2, 2)), 1);
    });
    CHECK(code == ErrorCode::CapExceeded);
    try {
      enumerate_dipaths(g, g.vertex_id(v2(0, 0)), g.vertex_id(v2(2, 2)), 1);
    } catch (const dispheres::Error& e) {
      CHECK(std::string(e.what()).find("more than 1") != std::string::npos);
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
  }
}

TEST_CASE("dihomotopy classes") {
  SUBCASE("constant pair") {
    const GridGraph g(2, 2);
    const VertexId v = g.vertex_id(v3(0, 0, 1));
    CHECK(dihomotopy_classes(g, v, v, 100) == 1);
  }
  SUBCASE("square has two classes at every resolution") {
    for (std::size_t m = 1; m <= 4; ++m) {
      const GridGraph g(1, m);
      const int mm = static_cast<int>(m);
      CHECK(dihomotopy_classes(g, g.vertex_id(v2(0, 0)), g.vertex_id(v2(mm, mm)), 1000) == 2);
    }
  }
  SUBCASE("slice pair has two classes") {
    const GridGraph g(2, 2);
    CHECK(dihomotopy_classes(g, g.vertex_id(v3(0, 0, 1)), g.vertex_id(v3(2, 2, 1)), 100) == 2);
  }
  SUBCASE("single-route pairs have one class") {
    const GridGraph g(1, 2);
    CHECK(dihomotopy_classes(g, g.vertex_id(v2(0, 0)), g.vertex_id(v2(2, 1)), 100) == 1);
  }
  SUBCASE("face routes merge into one class") {
    // routes across the bottom face of the cube can slide over each other
    const GridGraph g(2, 2);
    const std::size_t paths =
        enumerate_dipaths(g, g.vertex_id(v3(0, 0, 0)), g.vertex_id(v3(2, 2, 0)), 100).size();
    CHECK(paths > 1);
    CHECK(dihomotopy_classes(g, g.vertex_id(v3(0, 0, 0)), g.vertex_id(v3(2, 2, 0)), 100) == 1);
  }
  SUBCASE("unreachable pairs have zero classes, reachable at least one") {
    const GridGraph g(2, 2);
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
      const auto reach = reachable_from(g, static_cast<VertexId>(a));
      for (std::size_t b = 0; b < g.vertex_count(); ++b) {
        const std::size_t classes = dihomotopy_classes(
            g, static_cast<VertexId>(a), static_cast<VertexId>(b), 100000);
        CHECK((classes >= 1) == (reach[b] != 0));
        if (reach[b] &&
            enumerate_dipaths(g, static_cast<VertexId>(a), static_cast<VertexId>(b), 100000)
                    .size() == 1) {
          CHECK(classes == 1);
        }
      }
    }
  }
}

TEST_CASE("half-square confinement") {
  SUBCASE("coarse grid") {
    const GridGraph g(2, 2);
    CHECK(verify_halfsquare_confinement(g, 1, 1));
  }
  SUBCASE("finer grid") {
    const GridGraph g(2, 4);
    CHECK(verify_halfsquare_confinement(g, 1, 2));
    for (int t = 1; t < 4; ++t) {
      for (int x = 1; x < 4; ++x) CHECK(verify_halfsquare_confinement(g, t, x));
    }
  }
  SUBCASE("degenerate indices are parameter errors") {
    const GridGraph g(2, 2);
    CHECK(error_code_of([&] { verify_halfsquare_confinement(g, 0, 1); }) ==
          ErrorCode::ParameterRange);
    CHECK(error_code_of([&] { verify_halfsquare_confinement(g, 1, 2); }) ==
          ErrorCode::ParameterRange);
    const GridGraph square(1, 2);
    CHECK(error_code_of([&] { verify_halfsquare_confinement(square, 1, 1); }) ==
          ErrorCode::ParameterRange);
  }
}

TEST_CASE("oracle agrees with the analytic decision on small grids") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const GridGraph g(n, m);
      std::vector<dispheres::Point> points;
      points.reserve(g.vertex_count());
      for (std::size_t id = 0; id < g.vertex_count(); ++id) {
        points.push_back(g.to_point(static_cast<VertexId>(id)));
      }
      for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        const auto reach = reachable_from(g, static_cast<VertexId>(a));
        for (std::size_t b = 0; b < g.vertex_count(); ++b) {
          CHECK((reach[b] != 0) == dispheres::planner::is_reachable(points[a], points[b]));
        }
      }
    }
  }
}

TEST_CASE("planned routes snap onto the grid") {
  const GridGraph g(2, 2);
  const int m = g.resolution();
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    const auto reach = reachable_from(g, static_cast<VertexId>(a));
    for (std::size_t b = 0; b < g.vertex_count(); ++b) {
      if (!reach[b]) continue;
      const dispheres::Dipath route = dispheres::planner::plan(
          g.to_point(static_cast<VertexId>(a)), g.to_point(static_cast<VertexId>(b)));
      // staircase waypoints at grid endpoints are themselves grid points;
      // expand each leg into unit steps and check each one is a grid edge
      std::vector<int> cur(g.vertex(static_cast<VertexId>(a)).begin(),
                           g.vertex(static_cast<VertexId>(a)).end());
      VertexId cur_id = static_cast<VertexId>(a);
      for (std::size_t j = 0; j + 1 < route.waypoint_count(); ++j) {
        std::vector<int> target;
        for (const Rat& c : route.waypoint(j + 1).coords()) {
          const Rat scaled = c * m;
          REQUIRE(scaled.get_den() == 1);
          target.push_back(static_cast<int>(scaled.get_num().get_si()));
        }
        for (std::size_t axis = 0; axis < target.size(); ++axis) {
          while (cur[axis] < target[axis]) {
            ++cur[axis];
            const auto next = g.find_vertex(cur);
            REQUIRE(next.has_value());
            const auto& succ = g.successors(cur_id);
            CHECK(std::find(succ.begin(), succ.end(), *next) != succ.end());
            cur_id = *next;
          }
        }
      }
      CHECK(cur_id == static_cast<VertexId>(b));
    }
  }
}
