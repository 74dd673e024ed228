#include "dispheres/planner.hpp"

#include <numeric>
#include <utility>

namespace dispheres::planner {

PlannerOrder::PlannerOrder(std::vector<std::size_t> permutation)
    : permutation_(std::move(permutation)) {
  if (permutation_.size() < 2) {
    throw Error(ErrorCode::BadInput, "a planner order needs at least two coordinates");
  }
  std::vector<char> seen(permutation_.size(), 0);
  for (std::size_t v : permutation_) {
    if (v >= permutation_.size() || seen[v]) {
      throw Error(ErrorCode::BadInput, "planner order must be a permutation of {0,...,n}");
    }
    seen[v] = 1;
  }
}

PlannerOrder PlannerOrder::identity(std::size_t coordinate_count) {
  std::vector<std::size_t> perm(coordinate_count);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return PlannerOrder(std::move(perm));
}

PlannerOrder PlannerOrder::reversal(std::size_t coordinate_count) {
  std::vector<std::size_t> perm(coordinate_count);
  for (std::size_t i = 0; i < coordinate_count; ++i) perm[i] = coordinate_count - 1 - i;
  return PlannerOrder(std::move(perm));
}

std::string_view partition_label_name(PartitionLabel label) {
  return label == PartitionLabel::A1 ? "A1" : "A2";
}

namespace {

bool is_interior(const Rat& value) { return value > 0 && value < 1; }

void require_same_dimension(const Point& x, const Point& y, const PlannerOrder& order) {
  if (x.coordinate_count() != y.coordinate_count() || order.size() != x.coordinate_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                "points and planner order must agree in coordinate count");
  }
}

// The interior-crossing condition for the staircase in `order`: while
// coordinate j = order[p] is strictly raised, the moving point has the
// already-raised coordinates at their y-values and the not-yet-raised ones at
// their x-values; the leg crosses the open cube iff all of those are
// interior. Returns the first witnessing coordinate.
std::optional<std::size_t> condition_witness(const Point& x, const Point& y,
                                             const PlannerOrder& order) {
  const std::size_t d = order.size();
  for (std::size_t p = 0; p < d; ++p) {
    const std::size_t j = order[p];
    if (!(x[j] < y[j])) continue;
    bool open = true;
    for (std::size_t q = 0; open && q < p; ++q) open = is_interior(y[order[q]]);
    for (std::size_t q = p + 1; open && q < d; ++q) open = is_interior(x[order[q]]);
    if (open) return j;
  }
  return std::nullopt;
}

[[noreturn]] void throw_unreachable(const Point& x, const Point& y,
                                    const ReachDiagnostics& diag) {
  if (!diag.x_on_boundary || !diag.y_on_boundary) {
    const std::string which = !diag.x_on_boundary ? x.str() : y.str();
    throw Error(ErrorCode::NotOnBoundary, "point " + which + " is not on the cube boundary",
                diag);
  }
  if (!diag.ordered) {
    throw Error(ErrorCode::NotOrdered,
                "pair " + x.str() + " -> " + y.str() + " is not coordinatewise ordered", diag);
  }
  throw Error(ErrorCode::NotReachable,
              "no directed boundary path from " + x.str() + " to " + y.str() +
                  ": both staircases cross the cube interior",
              diag);
}

}  // namespace

Dipath staircase(const Point& x, const Point& y, const PlannerOrder& order) {
  require_same_dimension(x, y, order);
  if (!coordinatewise_leq(x, y)) {
    throw Error(ErrorCode::NotOrdered,
                "staircase requires x <= y coordinatewise; " + x.str() + " -> " + y.str() +
                    " is unreachable even in the directed cube");
  }
  const std::size_t d = order.size();
  std::vector<Point> waypoints;
  waypoints.reserve(d + 1);
  waypoints.push_back(x);
  std::vector<Rat> coords = x.coords();
  for (std::size_t p = 0; p < d; ++p) {
    coords[order[p]] = y[order[p]];
    waypoints.push_back(Point(coords));
  }
  return Dipath::through(std::move(waypoints));
}

bool violates(const Point& x, const Point& y, const PlannerOrder& order) {
  require_same_dimension(x, y, order);
  if (!on_boundary(x) || !on_boundary(y)) {
    throw Error(ErrorCode::NotOnBoundary, "staircase conditions apply to boundary points only");
  }
  if (!coordinatewise_leq(x, y)) {
    throw Error(ErrorCode::NotOrdered, "staircase conditions require x <= y coordinatewise");
  }
  return condition_witness(x, y, order).has_value();
}

ReachDiagnostics explain_reachability(const Point& x, const Point& y) {
  if (x.coordinate_count() != y.coordinate_count()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compare points of different dimension");
  }
  ReachDiagnostics diag;
  diag.x_on_boundary = on_boundary(x);
  diag.y_on_boundary = on_boundary(y);
  diag.ordered = coordinatewise_leq(x, y);
  if (diag.ordered) {
    const std::size_t d = x.coordinate_count();
    const auto j = condition_witness(x, y, PlannerOrder::identity(d));
    const auto k = condition_witness(x, y, PlannerOrder::reversal(d));
    diag.u1 = {j.has_value(), j};
    diag.u2 = {k.has_value(), k};
  }
  return diag;
}

bool is_reachable(const Point& x, const Point& y) {
  return explain_reachability(x, y).reachable();
}

PartitionLabel classify(const Point& x, const Point& y) {
  const ReachDiagnostics diag = explain_reachability(x, y);
  if (!diag.reachable()) throw_unreachable(x, y, diag);
  return diag.u1.holds ? PartitionLabel::A2 : PartitionLabel::A1;
}

Dipath plan(const Point& x, const Point& y) {
  const PartitionLabel label = classify(x, y);
  const std::size_t d = x.coordinate_count();
  const PlannerOrder order =
      label == PartitionLabel::A1 ? PlannerOrder::identity(d) : PlannerOrder::reversal(d);
  return staircase(x, y, order);
}

Dipath contract_homotopy(const Dipath& path, const Rat& t, const PlannerOrder& order) {
  if (t < 0 || t > 1) {
    throw Error(ErrorCode::ParameterRange,
                "homotopy parameter outside [0,1]: " + to_fraction_string(t));
  }
  if (order.size() != path.coordinate_count()) {
    throw Error(ErrorCode::DimensionMismatch, "planner order does not match the path dimension");
  }
  if (t == 1) return path;  // outer branches cover [0,1]; the middle piece is empty

  const Rat lower = t / 2;
  const Rat upper = 1 - lower;
  const Point at_lower = path.evaluate(lower);
  const Point at_upper = path.evaluate(upper);
  const Dipath middle = staircase(at_lower, at_upper, order);
  if (t == 0) return middle;

  // A single-waypoint constant path has the degenerate stage list {0}; give
  // it full-span stages so the generic splice below applies.
  std::vector<Point> constant_wp;
  std::vector<Rat> constant_st;
  const std::vector<Point>* wp = &path.waypoints();
  const std::vector<Rat>* st = &path.stages();
  if (path.waypoint_count() == 1) {
    constant_wp = {path.start(), path.start()};
    constant_st = {Rat(0), Rat(1)};
    wp = &constant_wp;
    st = &constant_st;
  }

  std::vector<Point> waypoints;
  std::vector<Rat> stages;
  waypoints.reserve(wp->size() + middle.waypoint_count());
  stages.reserve(wp->size() + middle.waypoint_count());

  for (std::size_t j = 0; j < wp->size() && (*st)[j] < lower; ++j) {
    waypoints.push_back((*wp)[j]);
    stages.push_back((*st)[j]);
  }
  waypoints.push_back(at_lower);
  stages.push_back(lower);
  const Rat span = 1 - t;
  for (std::size_t j = 1; j + 1 < middle.waypoint_count(); ++j) {
    waypoints.push_back(middle.waypoint(j));
    stages.push_back(lower + span * middle.stages()[j]);
  }
  waypoints.push_back(at_upper);
  stages.push_back(upper);
  for (std::size_t j = 0; j < wp->size(); ++j) {
    if ((*st)[j] > upper) {
      waypoints.push_back((*wp)[j]);
      stages.push_back((*st)[j]);
    }
  }
  return Dipath(std::move(waypoints), std::move(stages));
}

Rat contraction_lipschitz_bound(const Dipath& path) {
  const Rat slope = max_slope(path);
  return rat(static_cast<long>(path.coordinate_count()) + 1, 2) * slope;
}

}  // namespace dispheres::planner
