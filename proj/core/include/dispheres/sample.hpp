#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "dispheres/dipath.hpp"
#include "dispheres/point.hpp"

namespace dispheres::sample {

/// Deterministic RNG: the stream for a given seed is fixed by the standard's
/// mt19937_64 specification, so seeded runs reproduce byte-identically on any
/// platform. Bounded draws avoid std::uniform_int_distribution on purpose
/// (its mapping is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound);            // uniform-ish in [0, bound)
  bool chance(std::uint64_t num, std::uint64_t den);   // true with probability num/den

 private:
  std::mt19937_64 engine_;
};

/// Random rational strictly inside (0,1), denominator in [2, max_denominator].
Rat interior_rational(Rng& rng, unsigned max_denominator);

/// Random rational in [0,1].
Rat unit_rational(Rng& rng, unsigned max_denominator);

/// Arbitrary point of the closed cube.
Point unit_point(Rng& rng, std::size_t coordinate_count, unsigned max_denominator);

/// Point with at least one coordinate pinned at 0 or 1.
Point boundary_point(Rng& rng, std::size_t coordinate_count, unsigned max_denominator);

/// Ordered pair (x <= y coordinatewise) with both points on the boundary.
std::pair<Point, Point> boundary_ordered_pair(Rng& rng, std::size_t coordinate_count,
                                              unsigned max_denominator);

/// Boundary ordered pair that is reachable (rejection sampling).
std::pair<Point, Point> reachable_pair(Rng& rng, std::size_t coordinate_count,
                                       unsigned max_denominator);

/// Monotone piecewise-linear dipath inside the cube with uniform stages and
/// up to max_segments segments; occasionally repeats a waypoint so degenerate
/// segments get exercised.
Dipath monotone_dipath(Rng& rng, std::size_t coordinate_count, std::size_t max_segments,
                       unsigned max_denominator);

}  // namespace dispheres::sample
