#ifndef RCERT_GEOMETRY_HPP
#define RCERT_GEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rcert/rational.hpp"

namespace rcert {

// Exact planar geometry for the dual-arrangement game. Everything here is
// rational; there are no floating-point comparisons in this module.

struct Vec2 {
  Rat x, y;
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Oriented line a·u + b·v + c = 0.
struct Line {
  Rat a, b, c;
  Rat eval(const Vec2& p) const { return a * p.x + b * p.y + c; }
};

/// Halfplane a·u + b·v + c {<,<=} 0.
struct Halfplane {
  Rat a, b, c;
  bool strict = false;
};

/// Convex cell: intersection of halfplanes inside the bounding box [-4,4]^2,
/// held as its vertex polygon (counter-clockwise) plus the constraint list
/// for auditing.
class Cell {
 public:
  /// The bounding box [-4,4]^2.
  static Cell bounding_box();

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<Halfplane>& constraints() const { return constraints_; }

  /// Exact polygon area (shoelace); positive for a nondegenerate cell.
  Rat area() const;

  /// Centroid of the vertex polygon; interior for a nondegenerate cell.
  Vec2 centroid() const;

  /// True iff p lies in the closed cell.
  bool contains(const Vec2& p) const;

  /// Exact squared distance from the origin to the closed cell.
  Rat squared_distance_from_origin() const;

  /// A closest point of the closed cell to the origin (the origin itself
  /// when contained).
  Vec2 nearest_point_to_origin() const;

  /// Max squared vertex norm.
  Rat max_vertex_norm2() const;

  friend std::pair<std::optional<Cell>, std::optional<Cell>> split_cell(const Cell& c,
                                                                        const Line& line);

 private:
  std::vector<Vec2> vertices_;
  std::vector<Halfplane> constraints_;
};

/// The dual-plane line induced by querying primal point z = (z1, z2):
/// z1·a + z2·b + 1 = 0 over dual coordinates (a, b). The origin query is
/// degenerate (its "line" is empty) and must be handled by the caller.
Line dual_line(const Vec2& z);

/// Exact halfplane clipping: returns the (<= 0)-side and the (>= 0)-side
/// sub-cells, absent when the side has empty interior.
std::pair<std::optional<Cell>, std::optional<Cell>> split_cell(const Cell& c, const Line& line);

/// True iff the cell's interior contains points of squared norm < 1 and
/// points of squared norm > 1, i.e. the cell crosses the unit circle.
bool straddles_unit_circle(const Cell& c);

}  // namespace rcert

#endif  // RCERT_GEOMETRY_HPP
