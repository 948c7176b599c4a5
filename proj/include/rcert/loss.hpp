#ifndef RCERT_LOSS_HPP
#define RCERT_LOSS_HPP

#include <optional>
#include <vector>

#include "rcert/distribution.hpp"
#include "rcert/hypothesis.hpp"
#include "rcert/perturbation.hpp"

namespace rcert {

/// 1 iff h(x) != y.
int binary_loss(const Hypothesis& h, const Point& x, Label y);

/// True iff some z in U(x) gets a different label than x itself.
///
/// Exact tests exist for:
///   - any hypothesis + finite map (exhaustive scan of U(x)),
///   - threshold + ball on the line (the interval endpoints decide),
///   - halfspace + ball in the plane (signed boundary value against the
///     dual-norm scaled radius; the >= labeling convention makes the test
///     strict on the positive side and closed on the negative side).
/// Anything else throws NoExactMarginTest.
bool margin_membership(const Hypothesis& h, const Point& x, const PerturbationType& u);

/// 1 iff h errs on (x,y) or x lies in the margin of h. Coincides with
/// "some z in U(x) has h(z) != y" because x ∈ U(x).
int robust_loss_point(const Hypothesis& h, const Point& x, Label y, const PerturbationType& u);

/// Exact P-weight of err(h) (no U) or err(h) ∪ mar(h) (with U).
Rat true_loss(const Hypothesis& h, const DiscreteDistribution& p,
              const std::optional<PerturbationType>& u = std::nullopt);

/// Exact P-weight of mar(h).
Rat margin_weight(const Hypothesis& h, const DiscreteDistribution& p, const PerturbationType& u);

/// Mean robust loss over a nonempty sample, as an exact rational.
Rat empirical_robust_loss(const Hypothesis& h, const LabeledSample& s, const PerturbationType& u);

/// Mean binary loss over a nonempty sample.
Rat empirical_binary_loss(const Hypothesis& h, const LabeledSample& s);

/// For each member of a finite class, the margin set within `domain`,
/// deduplicated across members. Sets are returned sorted.
std::vector<std::vector<Point>> margin_class_sets(const FiniteClass& cls,
                                                  const PerturbationType& u,
                                                  const std::vector<Point>& domain);

}  // namespace rcert

#endif  // RCERT_LOSS_HPP
