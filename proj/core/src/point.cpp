#include "dispheres/point.hpp"

#include "dispheres/errors.hpp"

namespace dispheres {

char coord_class_char(CoordClass c) {
  switch (c) {
    case CoordClass::Zero: return '0';
    case CoordClass::Interior: return '-';
    case CoordClass::One: return '1';
  }
  return '?';
}

CoordPattern::CoordPattern(std::vector<CoordClass> classes) : classes_(std::move(classes)) {
  if (classes_.size() < 2) {
    throw Error(ErrorCode::BadInput, "a coordinate pattern needs at least two classes");
  }
}

bool CoordPattern::is_boundary() const {
  for (CoordClass c : classes_) {
    if (c != CoordClass::Interior) return true;
  }
  return false;
}

std::string CoordPattern::str() const {
  std::string out;
  out.reserve(classes_.size());
  for (CoordClass c : classes_) out.push_back(coord_class_char(c));
  return out;
}

Point::Point(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw Error(ErrorCode::BadInput, "a point needs at least two coordinates");
  }
  for (const Rat& c : coords_) {
    if (c < 0 || c > 1) {
      throw Error(ErrorCode::ParameterRange,
                  "coordinate outside [0,1]: " + to_fraction_string(c));
    }
  }
}

std::string Point::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_fraction_string(coords_[i]);
  }
  out += ")";
  return out;
}

bool on_boundary(const Point& p) {
  for (const Rat& c : p.coords()) {
    if (c == 0 || c == 1) return true;
  }
  return false;
}

CoordPattern pattern_of(const Point& p) {
  std::vector<CoordClass> classes;
  classes.reserve(p.coordinate_count());
  for (const Rat& c : p.coords()) {
    if (c == 0) {
      classes.push_back(CoordClass::Zero);
    } else if (c == 1) {
      classes.push_back(CoordClass::One);
    } else {
      classes.push_back(CoordClass::Interior);
    }
  }
  return CoordPattern(std::move(classes));
}

bool coordinatewise_leq(const Point& x, const Point& y) {
  if (x.coordinate_count() != y.coordinate_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot order points of dimensions " + std::to_string(x.coordinate_count()) +
                    " and " + std::to_string(y.coordinate_count()));
  }
  for (std::size_t i = 0; i < x.coordinate_count(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

}  // namespace dispheres
