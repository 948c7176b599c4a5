#ifndef RCERT_WITNESS_HPP
#define RCERT_WITNESS_HPP

#include <map>
#include <vector>

#include "rcert/hypothesis.hpp"
#include "rcert/perturbation.hpp"

namespace rcert {

/// A witness set for a base point x: a finite point set whose labels under
/// any class member decide whether x lies in that member's margin.
///
/// The decision map is: if h(x) = 0, margin iff some point of w1 carries
/// label 1; if h(x) = 1, margin iff some point of w0 carries label 0.
/// Query-derived witness sets set w0 = w1 = (queried points within U(x)),
/// which expresses "some queried neighbor disagrees with x".
struct WitnessSet {
  Point base;
  std::vector<Point> w0;  // representatives for the 0-side
  std::vector<Point> w1;  // representatives for the 1-side

  /// w0 ∪ w1 ∪ {base}, sorted and deduplicated.
  std::vector<Point> points() const;

  bool decide(Label label_at_base, const std::map<Point, Label>& labels) const;
};

/// Witness set from the minimal equivalence classes of the two intersection
/// preorders over a finite class: hypotheses are grouped by U(x) ∩ h and by
/// U(x) \ h (h read as its 1-preimage), empty intersections are discarded,
/// and one representative point (the lexicographically smallest) is taken
/// from each inclusion-minimal intersection.
WitnessSet build_witness_set(const FiniteClass& cls, const FiniteMapPerturbation& u,
                             const Point& x);

}  // namespace rcert

#endif  // RCERT_WITNESS_HPP
