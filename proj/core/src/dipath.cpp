#include "dispheres/dipath.hpp"

#include <algorithm>

#include "dispheres/errors.hpp"

namespace dispheres {

Dipath::Dipath(std::vector<Point> waypoints, std::vector<Rat> stages)
    : waypoints_(std::move(waypoints)), stages_(std::move(stages)) {
  if (waypoints_.empty()) {
    throw Error(ErrorCode::BadInput, "a dipath needs at least one waypoint");
  }
  if (stages_.size() != waypoints_.size()) {
    throw Error(ErrorCode::BadInput, "expected one stage value per waypoint");
  }
  const std::size_t dims = waypoints_.front().coordinate_count();
  for (const Point& w : waypoints_) {
    if (w.coordinate_count() != dims) {
      throw Error(ErrorCode::DimensionMismatch, "waypoints of mixed dimension");
    }
  }
  if (waypoints_.size() == 1) {
    if (stages_.front() != 0) {
      throw Error(ErrorCode::BadInput, "a single-waypoint dipath carries the stage list {0}");
    }
    return;
  }
  if (stages_.front() != 0 || stages_.back() != 1) {
    throw Error(ErrorCode::BadInput, "stages must run from 0 to 1");
  }
  for (std::size_t j = 0; j + 1 < waypoints_.size(); ++j) {
    if (stages_[j] > stages_[j + 1]) {
      throw Error(ErrorCode::BadInput, "stages must be nondecreasing");
    }
    for (std::size_t i = 0; i < dims; ++i) {
      if (waypoints_[j][i] > waypoints_[j + 1][i]) {
        throw Error(ErrorCode::NotOrdered,
                    "waypoints must be coordinatewise nondecreasing (segment " +
                        std::to_string(j) + ", coordinate " + std::to_string(i) + ")");
      }
    }
    if (stages_[j] == stages_[j + 1] && !(waypoints_[j] == waypoints_[j + 1])) {
      throw Error(ErrorCode::BadInput, "zero-length stage joining distinct waypoints");
    }
  }
}

Dipath Dipath::constant(Point at) {
  std::vector<Point> wp;
  wp.push_back(std::move(at));
  return Dipath(std::move(wp), {Rat(0)});
}

Dipath Dipath::through(std::vector<Point> waypoints) {
  if (waypoints.size() == 1) return constant(std::move(waypoints.front()));
  std::vector<Rat> stages;
  stages.reserve(waypoints.size());
  const long segments = static_cast<long>(waypoints.size()) - 1;
  for (long j = 0; j <= segments; ++j) stages.push_back(rat(j, segments));
  return Dipath(std::move(waypoints), std::move(stages));
}

Point Dipath::evaluate(const Rat& s) const {
  if (s < 0 || s > 1) {
    throw Error(ErrorCode::ParameterRange, "path parameter outside [0,1]: " + to_fraction_string(s));
  }
  if (waypoints_.size() == 1) return waypoints_.front();

  // last stage index with stages_[j] <= s
  const auto it = std::upper_bound(stages_.begin(), stages_.end(), s);
  const std::size_t j = static_cast<std::size_t>(it - stages_.begin()) - 1;
  if (j + 1 == waypoints_.size()) return waypoints_.back();  // s == 1

  const Rat len = stages_[j + 1] - stages_[j];
  if (len == 0) return waypoints_[j];  // degenerate stage: equal waypoints
  const Rat u = (s - stages_[j]) / len;

  const std::size_t dims = coordinate_count();
  std::vector<Rat> coords;
  coords.reserve(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    const Rat delta = waypoints_[j + 1][i] - waypoints_[j][i];
    coords.push_back(waypoints_[j][i] + u * delta);
  }
  return Point(std::move(coords));
}

bool stays_on_boundary(const Dipath& path) {
  for (const Point& w : path.waypoints()) {
    if (!on_boundary(w)) return false;
  }
  const std::size_t dims = path.coordinate_count();
  for (std::size_t j = 0; j + 1 < path.waypoint_count(); ++j) {
    const Point& a = path.waypoint(j);
    const Point& b = path.waypoint(j + 1);
    if (a == b) continue;
    bool pinned = false;
    for (std::size_t i = 0; i < dims && !pinned; ++i) {
      pinned = a[i] == b[i] && (a[i] == 0 || a[i] == 1);
    }
    if (!pinned) return false;
  }
  return true;
}

Rat max_slope(const Dipath& path) {
  Rat best(0);
  const std::size_t dims = path.coordinate_count();
  for (std::size_t j = 0; j + 1 < path.waypoint_count(); ++j) {
    const Rat len = path.stages()[j + 1] - path.stages()[j];
    if (len == 0) continue;
    for (std::size_t i = 0; i < dims; ++i) {
      const Rat slope = (path.waypoint(j + 1)[i] - path.waypoint(j)[i]) / len;
      if (slope > best) best = slope;
    }
  }
  return best;
}

}  // namespace dispheres
