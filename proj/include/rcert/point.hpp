#ifndef RCERT_POINT_HPP
#define RCERT_POINT_HPP

#include <string>
#include <vector>

#include "rcert/rational.hpp"

namespace rcert {

using Label = int;  // 0 or 1

/// A domain point: either a symbolic id (abstract finite domains) or a
/// numeric point with 1 or 2 exact-rational coordinates. Symbolic and
/// numeric points are never mixed within one task.
class Point {
 public:
  Point() = default;

  static Point symbolic(std::string id);
  static Point line(Rat x);
  static Point plane(Rat x, Rat y);

  bool is_symbolic() const { return symbolic_; }
  const std::string& id() const;
  size_t dimension() const { return coords_.size(); }
  const Rat& coord(size_t i) const;
  const std::vector<Rat>& coords() const { return coords_; }

  std::string str() const;

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Strict total order: symbolic points sort before numeric, then by id /
  // lexicographic coordinates. This is the "lexicographically smallest"
  // order used to pick witness representatives.
  friend bool operator<(const Point& a, const Point& b);

 private:
  bool symbolic_ = false;
  std::string id_;
  std::vector<Rat> coords_;
};

}  // namespace rcert

#endif  // RCERT_POINT_HPP
