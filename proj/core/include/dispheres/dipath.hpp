#pragma once

#include <cstddef>
#include <vector>

#include "dispheres/point.hpp"
#include "dispheres/rational.hpp"

namespace dispheres {

/// Piecewise-linear coordinatewise-nondecreasing path, stored as waypoints
/// plus the nondecreasing parameter value of each waypoint
/// (0 = s_0 <= s_1 <= ... <= s_k = 1). A zero-length stage must join equal
/// waypoints so that evaluation stays continuous. A constant path may be
/// stored as a single waypoint with stage list {0}.
class Dipath {
 public:
  Dipath(std::vector<Point> waypoints, std::vector<Rat> stages);

  static Dipath constant(Point at);
  /// Uniform stages over the given waypoints.
  static Dipath through(std::vector<Point> waypoints);

  std::size_t waypoint_count() const { return waypoints_.size(); }
  const Point& waypoint(std::size_t i) const { return waypoints_[i]; }
  const std::vector<Point>& waypoints() const { return waypoints_; }
  const std::vector<Rat>& stages() const { return stages_; }
  std::size_t coordinate_count() const { return waypoints_.front().coordinate_count(); }

  const Point& start() const { return waypoints_.front(); }
  const Point& end() const { return waypoints_.back(); }

  /// Linear interpolation within the stage containing s; agrees from both
  /// sides at shared stage boundaries. s must lie in [0,1].
  Point evaluate(const Rat& s) const;

  bool operator==(const Dipath& other) const {
    return waypoints_ == other.waypoints_ && stages_ == other.stages_;
  }

 private:
  std::vector<Point> waypoints_;
  std::vector<Rat> stages_;
};

/// True iff the whole image lies on the cube boundary. A nondegenerate
/// monotone segment lies on the boundary iff some coordinate is constant
/// along it with value 0 or 1: every varying coordinate takes values strictly
/// between its endpoints, hence in (0,1), so without a pinned coordinate the
/// segment interior sits inside the open cube.
bool stays_on_boundary(const Dipath& path);

/// Largest L-infinity slope over nondegenerate stages; 0 for constant paths.
Rat max_slope(const Dipath& path);

}  // namespace dispheres
