#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dispheres/dipath.hpp"
#include "dispheres/errors.hpp"
#include "dispheres/point.hpp"

namespace dispheres::planner {

/// The order in which a staircase raises coordinates: a permutation of
/// {0,...,n}. Only identity and reversal carry a covering guarantee; other
/// permutations are exposed for experimentation.
class PlannerOrder {
 public:
  explicit PlannerOrder(std::vector<std::size_t> permutation);

  static PlannerOrder identity(std::size_t coordinate_count);
  static PlannerOrder reversal(std::size_t coordinate_count);

  std::size_t size() const { return permutation_.size(); }
  std::size_t operator[](std::size_t position) const { return permutation_[position]; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  bool operator==(const PlannerOrder&) const = default;

 private:
  std::vector<std::size_t> permutation_;
};

/// Part of the two-piece partition of the reachable pairs. A1 pairs are
/// served by the identity-order staircase, A2 pairs by the reversal.
enum class PartitionLabel { A1, A2 };

std::string_view partition_label_name(PartitionLabel label);  // "A1" / "A2"

/// Raises the coordinates of x to those of y one at a time in the given
/// order: waypoints w_0 = x, ..., w_{n+1} = y with uniform stages, where step
/// k updates coordinate order[k]. A global section of the endpoint map on the
/// directed cube, monotone by construction. Requires x <= y coordinatewise
/// (throws NotOrdered otherwise).
Dipath staircase(const Point& x, const Point& y, const PlannerOrder& order);

/// True iff the staircase for this order leaves the cube boundary, decided
/// combinatorially: some coordinate j is strictly raised while every
/// coordinate raised earlier is interior in y and every coordinate raised
/// later is interior in x. Requires both points on the boundary and x <= y.
bool violates(const Point& x, const Point& y, const PlannerOrder& order);

/// Evaluates boundary membership, coordinatewise order, and both staircase
/// conditions. Never throws except on dimension mismatch.
ReachDiagnostics explain_reachability(const Point& x, const Point& y);

/// True iff x and y lie on the cube boundary, x <= y coordinatewise, and at
/// least one of the two staircases stays on the boundary.
bool is_reachable(const Point& x, const Point& y);

/// A2 iff the identity-order staircase leaves the boundary, else A1. Requires
/// a reachable pair; throws with full diagnostics otherwise.
PartitionLabel classify(const Point& x, const Point& y);

/// The motion planner: the staircase dipath of the pair's partition label.
/// Stays on the boundary with exact endpoints x and y. Throws with the failed
/// condition witnesses when the pair is not reachable.
Dipath plan(const Point& x, const Point& y);

/// Fiber contraction toward the staircase section: follows `path` on
/// [0, t/2], then the staircase between path(t/2) and path(1-t/2)
/// reparametrized onto [t/2, 1-t/2], then `path` again. t = 1 returns `path`
/// verbatim (the middle piece is empty in the limit); t = 0 returns the bare
/// staircase. Output waypoints are the exact breakpoints of the three pieces.
Dipath contract_homotopy(const Dipath& path, const Rat& t, const PlannerOrder& order);

/// C such that sup_s |H(path,t)(s) - H(path,t')(s)| <= C * |t - t'| in the
/// L-infinity norm, computed from the path's segment slopes:
/// C = (d + 1) / 2 * max_slope(path) with d coordinates.
Rat contraction_lipschitz_bound(const Dipath& path);

}  // namespace dispheres::planner
