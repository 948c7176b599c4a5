#ifndef RCERT_LEARNERS_HPP
#define RCERT_LEARNERS_HPP

#include <functional>

#include "rcert/loss.hpp"
#include "rcert/oracle.hpp"

namespace rcert {

/// Members of a finite class with zero empirical binary loss on the sample,
/// in enumeration order.
std::vector<Hypothesis> version_space(const FiniteClass& cls, const LabeledSample& s);

/// Robust empirical risk minimization. Finite classes are enumerated;
/// the threshold family is searched over midpoints between consecutive
/// breakpoints {x-r, x, x+r} plus sentinels past the extremes (the robust
/// loss is piecewise constant between breakpoints, so the grid is complete).
/// Ties break toward enumeration order / the smaller threshold.
Hypothesis erm_robust(const HypothesisClass& cls, const LabeledSample& s,
                      const PerturbationType& u);

/// Version-space pruning with an exact margin oracle: returns the first
/// surviving member with margin weight zero. Requires robust realizability;
/// throws EmptyAfterPruning when the assumption fails.
Hypothesis ssl_margin_prune(const FiniteClass& cls, const LabeledSample& s,
                            const std::function<Rat(const Hypothesis&)>& margin_oracle);

/// Version-space pruning with an unlabeled sample: returns the first member
/// with zero binary loss on s and no point of t inside its margin.
Hypothesis ssl_unlabeled_prune(const FiniteClass& cls, const LabeledSample& s,
                               const UnlabeledSample& t, const PerturbationType& u);

/// Extended-oracle learner: picks the first version-space member h_e, then
/// returns the class member minimizing
///   P(mar(h)) + P(h Δ h_e) - P(mar(h) ∩ (h Δ h_e)),
/// which equals the robust loss under the labeling h_e exactly.
Hypothesis extended_oracle_learner(const FiniteClass& cls, const LabeledSample& s,
                                   const IdealOracles& oracles);

/// Improper cluster learner: connects support points to their perturbation
/// targets, prunes the version space to members label-homogeneous on each
/// cluster's support part, and extends the chosen member homogeneously over
/// full clusters. Output is tabular with margin weight exactly zero.
Hypothesis cluster_learner(const FiniteClass& cls, const LabeledSample& s,
                           const std::vector<Point>& support, const FiniteMapPerturbation& u);

}  // namespace rcert

#endif  // RCERT_LEARNERS_HPP
