#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dispheres/rational.hpp"

namespace dispheres {

enum class CoordClass : unsigned char { Zero, Interior, One };

/// '0', '-' or '1'.
char coord_class_char(CoordClass c);

/// The 0/-/1 string classifying each coordinate of a point: pinned at 0,
/// strictly interior, or pinned at 1.
class CoordPattern {
 public:
  explicit CoordPattern(std::vector<CoordClass> classes);

  std::size_t size() const { return classes_.size(); }
  CoordClass operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<CoordClass>& classes() const { return classes_; }

  /// True iff some coordinate is pinned; exactly the patterns realizable on
  /// the cube boundary.
  bool is_boundary() const;

  std::string str() const;

  bool operator==(const CoordPattern&) const = default;

 private:
  std::vector<CoordClass> classes_;
};

/// A point of the closed unit cube [0,1]^{n+1}, n >= 1, with exact rational
/// coordinates. Immutable after construction.
class Point {
 public:
  explicit Point(std::vector<Rat> coords);

  std::size_t coordinate_count() const { return coords_.size(); }      // n + 1
  std::size_t sphere_dimension() const { return coords_.size() - 1; }  // n
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool operator==(const Point& other) const { return coords_ == other.coords_; }
  bool operator!=(const Point& other) const { return !(*this == other); }

  std::string str() const;  // "(0/1, 1/2, 1/1)", for messages

 private:
  std::vector<Rat> coords_;
};

/// True iff at least one coordinate equals 0 or 1 exactly.
bool on_boundary(const Point& p);

CoordPattern pattern_of(const Point& p);

/// x_i <= y_i for every i. Throws DimensionMismatch on unequal lengths.
bool coordinatewise_leq(const Point& x, const Point& y);

}  // namespace dispheres
