#ifndef RCERT_ADVERSARY_HPP
#define RCERT_ADVERSARY_HPP

#include <functional>
#include <map>
#include <memory>

#include "rcert/oracle.hpp"
#include "rcert/witness.hpp"

namespace rcert {

struct AttackHit {
  Point adversarial;
  size_t source_index = 0;  // into the attacked sample
};

struct AttackResult {
  std::vector<AttackHit> attack_set;  // S'
  OracleReport queries;
  // Q_x per sample point, with the labels the oracle returned.
  std::vector<std::vector<LabeledExample>> per_source_queries;
};

/// Black-box adversary contract. Attack input is the h-labeled sample: the
/// labels must be the hidden hypothesis's own predictions at the sample
/// points (the attacker is assumed to hold correctly-labeled data; this is
/// what keeps ThresholdEndpoints at two queries per point).
class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual std::string name() const = 0;
  virtual bool non_adaptive() const = 0;

  /// The query list the adversary would issue for one point; defined for
  /// non-adaptive adversaries, in the fixed per-point order that compression
  /// ranks refer to.
  virtual std::vector<Point> planned_queries(const Point& x, const PerturbationType& u) const = 0;

  /// Runs the attack. Returns the attack set with full query accounting.
  /// Properness is asserted on every run: every query and every returned
  /// point must lie in the union of the perturbation sets.
  AttackResult attack(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                      const PerturbationType& u) const;

 protected:
  virtual AttackResult run(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                           const PerturbationType& u) const = 0;
};

/// Queries x-r and x+r for each sample point; returns every queried point
/// whose label differs from the source label. Perfect, proper, non-adaptive
/// and exactly 2|S| queries for the fixed-direction threshold family.
class ThresholdEndpointsAdversary final : public Adversary {
 public:
  std::string name() const override { return "threshold_endpoints"; }
  bool non_adaptive() const override { return true; }
  std::vector<Point> planned_queries(const Point& x, const PerturbationType& u) const override;

 protected:
  AttackResult run(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                   const PerturbationType& u) const override;
};

/// Queries all of U(x) for each sample point (finite maps); returns every
/// neighbor whose label differs from the label at x. Perfect by construction.
class FiniteExhaustiveAdversary final : public Adversary {
 public:
  std::string name() const override { return "finite_exhaustive"; }
  bool non_adaptive() const override { return true; }
  std::vector<Point> planned_queries(const Point& x, const PerturbationType& u) const override;

 protected:
  AttackResult run(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                   const PerturbationType& u) const override;
};

/// Def-level admissibility: (i) every returned point is adversarial for some
/// sample point, (ii) every sample point with nonempty margin is covered.
bool is_admissible_attack(const std::vector<Point>& attack_points,
                          const std::vector<Point>& sample_points, const Hypothesis& h,
                          const PerturbationType& u);

struct QueryComplexityReport {
  std::map<size_t, uint64_t> max_queries_by_size;  // |S| -> max queries observed
  Rat max_ratio;                                   // max queries/|S|
  bool efficient = false;
};

/// Runs the adversary over (sample, hypothesis) instances, verifying
/// admissibility on each (throws InadmissibleAttack otherwise), and reports
/// per-size maxima. Efficiency flag: the max per-point ratio over the
/// larger-|S| half of the buckets must not exceed the max over the smaller
/// half.
QueryComplexityReport measure_query_complexity(
    const Adversary& adv, const std::vector<std::pair<LabeledSample, Hypothesis>>& instances,
    const PerturbationType& u);

/// Witness set from a non-adaptive adversary's planned queries:
/// w(x) = {x} ∪ Q_x, margin iff some queried point inside U(x) disagrees
/// with x. Validated against exact margin membership for every member of the
/// finite class before being returned.
WitnessSet witness_from_nonadaptive(const Adversary& adv, const Point& x,
                                    const PerturbationType& u, const FiniteClass& cls);

}  // namespace rcert

#endif  // RCERT_ADVERSARY_HPP
