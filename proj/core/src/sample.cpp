#include "dispheres/sample.hpp"

#include <algorithm>

#include "dispheres/errors.hpp"
#include "dispheres/planner.hpp"

namespace dispheres::sample {

std::uint64_t Rng::below(std::uint64_t bound) {
  return bound == 0 ? 0 : engine_() % bound;
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

Rat interior_rational(Rng& rng, unsigned max_denominator) {
  const long den = 2 + static_cast<long>(rng.below(max_denominator - 1));
  const long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den) - 1));
  return rat(num, den);
}

Rat unit_rational(Rng& rng, unsigned max_denominator) {
  const long den = 1 + static_cast<long>(rng.below(max_denominator));
  const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(den) + 1));
  return rat(num, den);
}

Point unit_point(Rng& rng, std::size_t coordinate_count, unsigned max_denominator) {
  std::vector<Rat> coords;
  coords.reserve(coordinate_count);
  for (std::size_t i = 0; i < coordinate_count; ++i) {
    coords.push_back(unit_rational(rng, max_denominator));
  }
  return Point(std::move(coords));
}

Point boundary_point(Rng& rng, std::size_t coordinate_count, unsigned max_denominator) {
  std::vector<Rat> coords;
  coords.reserve(coordinate_count);
  const std::size_t pin = rng.below(coordinate_count);
  for (std::size_t i = 0; i < coordinate_count; ++i) {
    if (i == pin) {
      coords.push_back(Rat(rng.chance(1, 2) ? 1 : 0));
      continue;
    }
    switch (rng.below(3)) {
      case 0: coords.push_back(Rat(0)); break;
      case 1: coords.push_back(interior_rational(rng, max_denominator)); break;
      default: coords.push_back(Rat(1)); break;
    }
  }
  return Point(std::move(coords));
}

std::pair<Point, Point> boundary_ordered_pair(Rng& rng, std::size_t coordinate_count,
                                              unsigned max_denominator) {
  while (true) {
    std::vector<Rat> xs, ys;
    xs.reserve(coordinate_count);
    ys.reserve(coordinate_count);
    for (std::size_t i = 0; i < coordinate_count; ++i) {
      // the six ordered class combinations: 00, 0-, 01, --, -1, 11
      switch (rng.below(6)) {
        case 0:
          xs.push_back(Rat(0));
          ys.push_back(Rat(0));
          break;
        case 1:
          xs.push_back(Rat(0));
          ys.push_back(interior_rational(rng, max_denominator));
          break;
        case 2:
          xs.push_back(Rat(0));
          ys.push_back(Rat(1));
          break;
        case 3: {
          Rat a = interior_rational(rng, max_denominator);
          Rat b = interior_rational(rng, max_denominator);
          if (a > b) std::swap(a, b);
          xs.push_back(a);
          ys.push_back(b);
          break;
        }
        case 4:
          xs.push_back(interior_rational(rng, max_denominator));
          ys.push_back(Rat(1));
          break;
        default:
          xs.push_back(Rat(1));
          ys.push_back(Rat(1));
          break;
      }
    }
    Point x(std::move(xs));
    Point y(std::move(ys));
    if (on_boundary(x) && on_boundary(y)) return {std::move(x), std::move(y)};
  }
}

std::pair<Point, Point> reachable_pair(Rng& rng, std::size_t coordinate_count,
                                       unsigned max_denominator) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto pair = boundary_ordered_pair(rng, coordinate_count, max_denominator);
    if (planner::is_reachable(pair.first, pair.second)) return pair;
  }
  throw Error(ErrorCode::BadInput, "reachable-pair sampling failed to converge");
}

Dipath monotone_dipath(Rng& rng, std::size_t coordinate_count, std::size_t max_segments,
                       unsigned max_denominator) {
  const std::size_t segments = 1 + rng.below(max_segments);
  std::vector<std::vector<Rat>> columns(coordinate_count);
  for (std::size_t i = 0; i < coordinate_count; ++i) {
    columns[i].reserve(segments + 1);
    for (std::size_t j = 0; j <= segments; ++j) {
      columns[i].push_back(unit_rational(rng, max_denominator));
    }
    std::sort(columns[i].begin(), columns[i].end());
  }
  std::vector<Point> waypoints;
  waypoints.reserve(segments + 2);
  for (std::size_t j = 0; j <= segments; ++j) {
    std::vector<Rat> coords;
    coords.reserve(coordinate_count);
    for (std::size_t i = 0; i < coordinate_count; ++i) coords.push_back(columns[i][j]);
    waypoints.push_back(Point(std::move(coords)));
  }
  if (segments >= 2 && rng.chance(1, 4)) {
    // repeat one interior waypoint: exercises degenerate segments
    const std::size_t at = 1 + rng.below(segments - 1);
    waypoints.insert(waypoints.begin() + static_cast<std::ptrdiff_t>(at), waypoints[at]);
  }
  return Dipath::through(std::move(waypoints));
}

}  // namespace dispheres::sample
