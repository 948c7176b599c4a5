#include "rcert/geometry.hpp"

#include <algorithm>

#include "rcert/errors.hpp"

namespace rcert {

Cell Cell::bounding_box() {
  Cell c;
  c.vertices_ = {{Rat(-4), Rat(-4)}, {Rat(4), Rat(-4)}, {Rat(4), Rat(4)}, {Rat(-4), Rat(4)}};
  c.constraints_ = {{Rat(-1), Rat(0), Rat(-4)},   // -u - 4 <= 0
                    {Rat(1), Rat(0), Rat(-4)},    //  u - 4 <= 0
                    {Rat(0), Rat(-1), Rat(-4)},   // -v - 4 <= 0
                    {Rat(0), Rat(1), Rat(-4)}};   //  v - 4 <= 0
  return c;
}

Rat Cell::area() const {
  // shoelace, halved at the end
  Rat twice;
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = vertices_[i];
    const Vec2& q = vertices_[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / Rat(2);
}

Vec2 Cell::centroid() const {
  if (vertices_.empty()) throw InvariantViolation("centroid of an empty cell");
  Vec2 c;
  for (const auto& v : vertices_) {
    c.x += v.x;
    c.y += v.y;
  }
  const Rat n(static_cast<long>(vertices_.size()));
  return {c.x / n, c.y / n};
}

bool Cell::contains(const Vec2& p) const {
  const size_t n = vertices_.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % n];
    // CCW polygon: inside iff p is left of (or on) every edge
    const Rat cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross.sign() < 0) return false;
  }
  return true;
}

namespace {

Rat squared_norm(const Vec2& p) { return p.x * p.x + p.y * p.y; }

// Closest point of segment [a, b] to the origin, exact.
Vec2 segment_nearest_to_origin(const Vec2& a, const Vec2& b) {
  const Vec2 d{b.x - a.x, b.y - a.y};
  const Rat dd = squared_norm(d);
  if (dd.is_zero()) return a;
  Rat t = -(a.x * d.x + a.y * d.y) / dd;
  t = max(Rat(0), min(Rat(1), t));
  return {a.x + t * d.x, a.y + t * d.y};
}

}  // namespace

Vec2 Cell::nearest_point_to_origin() const {
  const Vec2 origin{Rat(0), Rat(0)};
  if (contains(origin)) return origin;
  Vec2 best;
  Rat best_d;
  bool first = true;
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2 q = segment_nearest_to_origin(vertices_[i], vertices_[(i + 1) % n]);
    const Rat d = squared_norm(q);
    if (first || d < best_d) {
      best = q;
      best_d = d;
      first = false;
    }
  }
  return best;
}

Rat Cell::squared_distance_from_origin() const {
  return squared_norm(nearest_point_to_origin());
}

Rat Cell::max_vertex_norm2() const {
  Rat best;
  bool first = true;
  for (const auto& v : vertices_) {
    const Rat d = squared_norm(v);
    if (first || d > best) {
      best = d;
      first = false;
    }
  }
  return best;
}

Line dual_line(const Vec2& z) { return Line{z.x, z.y, Rat(1)}; }

namespace {

std::vector<Vec2> clip(const std::vector<Vec2>& poly, const Line& line, bool keep_nonpositive) {
  std::vector<Vec2> out;
  const size_t n = poly.size();
  auto inside = [&](const Vec2& p) {
    const int s = line.eval(p).sign();
    return keep_nonpositive ? s <= 0 : s >= 0;
  };
  for (size_t i = 0; i < n; ++i) {
    const Vec2& cur = poly[i];
    const Vec2& nxt = poly[(i + 1) % n];
    const bool cin = inside(cur), nin = inside(nxt);
    if (cin) out.push_back(cur);
    if (cin != nin) {
      const Rat lc = line.eval(cur);
      const Rat ln = line.eval(nxt);
      const Rat t = lc / (lc - ln);  // lc != ln since the signs differ across the line
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  // drop consecutive duplicates (vertices exactly on the line produce them)
  std::vector<Vec2> dedup;
  for (const auto& v : out)
    if (dedup.empty() || !(dedup.back() == v)) dedup.push_back(v);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

Rat polygon_area(const std::vector<Vec2>& poly) {
  Rat twice;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / Rat(2);
}

}  // namespace

std::pair<std::optional<Cell>, std::optional<Cell>> split_cell(const Cell& c, const Line& line) {
  std::pair<std::optional<Cell>, std::optional<Cell>> result;
  for (const bool nonpositive : {true, false}) {
    auto poly = clip(c.vertices_, line, nonpositive);
    if (poly.size() < 3 || !(polygon_area(poly) > Rat(0))) continue;
    Cell side;
    side.vertices_ = std::move(poly);
    side.constraints_ = c.constraints_;
    side.constraints_.push_back(nonpositive ? Halfplane{line.a, line.b, line.c}
                                            : Halfplane{-line.a, -line.b, -line.c});
    if (nonpositive)
      result.first = std::move(side);
    else
      result.second = std::move(side);
  }
  return result;
}

bool straddles_unit_circle(const Cell& c) {
  if (c.vertices().size() < 3 || !(c.area() > Rat(0)))
    throw InvariantViolation("straddle test on a degenerate cell");
  return c.squared_distance_from_origin() < Rat(1) && c.max_vertex_norm2() > Rat(1);
}

}  // namespace rcert
