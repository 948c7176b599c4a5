#ifndef RCERT_DISTRIBUTION_HPP
#define RCERT_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

#include "rcert/point.hpp"

namespace rcert {

struct Atom {
  Point point;
  Label label = 0;
  Rat weight;
};

/// Finite labeled distribution with exact-rational weights summing to 1.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;
  /// Validates: nonnegative weights, exact sum 1, distinct atom points.
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  size_t size() const { return atoms_.size(); }

 private:
  std::vector<Atom> atoms_;
};

struct LabeledExample {
  Point point;
  Label label = 0;
};

/// Ordered multiset of labeled examples; duplicates permitted.
using LabeledSample = std::vector<LabeledExample>;
using UnlabeledSample = std::vector<Point>;

UnlabeledSample points_of(const LabeledSample& s);

/// m iid draws by inverse CDF over the exact cumulative weights.
/// Deterministic given the seed.
LabeledSample sample(const DiscreteDistribution& p, size_t m, uint64_t seed);

}  // namespace rcert

#endif  // RCERT_DISTRIBUTION_HPP
