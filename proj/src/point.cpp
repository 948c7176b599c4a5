#include "rcert/point.hpp"

#include <sstream>

#include "rcert/errors.hpp"

namespace rcert {

Point Point::symbolic(std::string id) {
  Point p;
  p.symbolic_ = true;
  p.id_ = std::move(id);
  return p;
}

Point Point::line(Rat x) {
  Point p;
  p.coords_ = {std::move(x)};
  return p;
}

Point Point::plane(Rat x, Rat y) {
  Point p;
  p.coords_ = {std::move(x), std::move(y)};
  return p;
}

const std::string& Point::id() const {
  if (!symbolic_) throw InvariantViolation("id() on a numeric point");
  return id_;
}

const Rat& Point::coord(size_t i) const {
  if (symbolic_ || i >= coords_.size())
    throw InvariantViolation("coordinate access out of range");
  return coords_[i];
}

std::string Point::str() const {
  if (symbolic_) return id_;
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << coords_[i].str();
  }
  os << ")";
  return os.str();
}

bool operator==(const Point& a, const Point& b) {
  if (a.symbolic_ != b.symbolic_) return false;
  if (a.symbolic_) return a.id_ == b.id_;
  return a.coords_ == b.coords_;
}

bool operator<(const Point& a, const Point& b) {
  if (a.symbolic_ != b.symbolic_) return a.symbolic_;
  if (a.symbolic_) return a.id_ < b.id_;
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  for (size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] < b.coords_[i]) return true;
    if (b.coords_[i] < a.coords_[i]) return false;
  }
  return false;
}

}  // namespace rcert
