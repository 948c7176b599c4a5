#ifndef RCERT_HYPOTHESIS_HPP
#define RCERT_HYPOTHESIS_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rcert/point.hpp"

namespace rcert {

/// Finite-domain label map. Total on its declared domain; evaluation outside
/// the map is an error.
struct TabularHypothesis {
  std::map<Point, Label> labels;
};

/// Threshold on the line: label 1 iff x >= t when geq, else 1 iff x <= t.
struct ThresholdHypothesis {
  Rat t;
  bool geq = true;
};

/// Halfspace in the plane: label 1 iff w·x + b >= 0. Requires w != (0,0).
struct HalfspaceHypothesis {
  Rat w1, w2, b;
};

using Hypothesis = std::variant<TabularHypothesis, ThresholdHypothesis, HalfspaceHypothesis>;

Label evaluate(const Hypothesis& h, const Point& x);

/// Extensional equality on a declared finite domain.
bool extensionally_equal(const Hypothesis& a, const Hypothesis& b,
                         const std::vector<Point>& domain);

std::string describe(const Hypothesis& h);

/// For halfspaces, the signed boundary expression w·x + b.
Rat halfspace_margin_value(const HalfspaceHypothesis& h, const Point& x);

// -- hypothesis classes -----------------------------------------------------

struct FiniteClass {
  std::vector<Hypothesis> members;
};

struct ThresholdFamily {
  bool geq = true;
};

struct HalfspaceFamily {};

using HypothesisClass = std::variant<FiniteClass, ThresholdFamily, HalfspaceFamily>;

/// Checks the duplicate-free invariant of a finite class under extensional
/// equality on the declared domain. Throws ConfigError on violation.
void validate_finite_class(const FiniteClass& cls, const std::vector<Point>& domain);

/// True iff h belongs to the class: extensional membership for finite
/// classes (on the declared domain), variant membership for families.
bool class_contains(const HypothesisClass& cls, const Hypothesis& h,
                    const std::vector<Point>& domain);

}  // namespace rcert

#endif  // RCERT_HYPOTHESIS_HPP
