#include "rcert/witness.hpp"

#include <algorithm>

#include "rcert/errors.hpp"

namespace rcert {

std::vector<Point> WitnessSet::points() const {
  std::vector<Point> out = w0;
  out.insert(out.end(), w1.begin(), w1.end());
  out.push_back(base);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool WitnessSet::decide(Label label_at_base, const std::map<Point, Label>& labels) const {
  const auto& side = label_at_base == 0 ? w1 : w0;
  const Label sought = label_at_base == 0 ? 1 : 0;
  for (const auto& p : side) {
    const auto it = labels.find(p);
    if (it == labels.end())
      throw WitnessValidationError("missing label for witness point " + p.str());
    if (it->second == sought) return true;
  }
  return false;
}

namespace {

// Distinct nonempty intersection sets, keeping only the inclusion-minimal
// ones, each reduced to its lexicographically smallest point.
std::vector<Point> minimal_representatives(std::vector<std::vector<Point>> intersections) {
  std::sort(intersections.begin(), intersections.end());
  intersections.erase(std::unique(intersections.begin(), intersections.end()),
                      intersections.end());
  auto is_strict_subset = [](const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.size() >= b.size()) return false;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<Point> reps;
  for (size_t i = 0; i < intersections.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < intersections.size() && minimal; ++j)
      if (j != i && is_strict_subset(intersections[j], intersections[i])) minimal = false;
    if (minimal) reps.push_back(intersections[i].front());  // sorted: front is lex-min
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace

WitnessSet build_witness_set(const FiniteClass& cls, const FiniteMapPerturbation& u,
                             const Point& x) {
  if (cls.members.empty()) throw ConfigError("witness set over an empty class");
  const auto ux = neighbors(u, x);

  std::vector<std::vector<Point>> ones, zeros;  // U(x) ∩ h, U(x) \ h per member
  for (const auto& h : cls.members) {
    std::vector<Point> in, out;
    for (const auto& z : ux) (evaluate(h, z) == 1 ? in : out).push_back(z);
    if (!in.empty()) ones.push_back(std::move(in));
    if (!out.empty()) zeros.push_back(std::move(out));
  }

  WitnessSet w;
  w.base = x;
  w.w1 = minimal_representatives(std::move(ones));
  w.w0 = minimal_representatives(std::move(zeros));
  return w;
}

}  // namespace rcert
