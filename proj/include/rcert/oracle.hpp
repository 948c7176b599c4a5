#ifndef RCERT_ORACLE_HPP
#define RCERT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rcert/distribution.hpp"
#include "rcert/hypothesis.hpp"
#include "rcert/loss.hpp"

namespace rcert {

struct OracleReport {
  uint64_t queries_used = 0;
  std::string transcript_hash;  // FNV-1a over "point|label;" entries
};

/// Black-box label access to a hidden hypothesis, with an optional query
/// budget and a full transcript. This is the only channel certifiers and
/// adversaries may use.
class BudgetedLabelOracle {
 public:
  explicit BudgetedLabelOracle(Hypothesis h,
                               std::optional<uint64_t> budget = std::nullopt)
      : h_(std::move(h)), budget_(budget) {}

  /// Returns h(x), counts the query, appends to the transcript.
  /// Throws BudgetExhausted once the budget is spent.
  Label query(const Point& x);

  uint64_t used() const { return transcript_.size(); }
  std::optional<uint64_t> budget() const { return budget_; }
  const std::vector<LabeledExample>& transcript() const { return transcript_; }

  OracleReport report() const;

  /// Transcript as JSON lines: {"x":...,"label":...,"index":...}.
  std::string transcript_jsonl() const;

 private:
  Hypothesis h_;
  std::optional<uint64_t> budget_;
  std::vector<LabeledExample> transcript_;
};

struct ExtendedMarginWeights {
  Rat margin;        // P(mar(h))
  Rat disagreement;  // P(h Δ h')
  Rat both;          // P(mar(h) ∩ (h Δ h'))
};

/// The idealized distribution oracles: exact error weights, margin weights
/// and extended margin weights, restricted to a declared class. Hypotheses
/// outside the class are refused rather than silently answered.
class IdealOracles {
 public:
  IdealOracles(DiscreteDistribution p, PerturbationType u, HypothesisClass cls,
               std::vector<Point> domain);

  /// P(err(h)).
  Rat error_weight(const Hypothesis& h) const;
  /// P(mar_U(h)).
  Rat margin_weight(const Hypothesis& h) const;
  /// (P(mar(h)), P(hΔh'), P(mar(h) ∩ (hΔh'))).
  ExtendedMarginWeights extended(const Hypothesis& h, const Hypothesis& h2) const;

  const DiscreteDistribution& distribution() const { return p_; }
  const PerturbationType& perturbation() const { return u_; }

 private:
  void require_member(const Hypothesis& h) const;

  DiscreteDistribution p_;
  PerturbationType u_;
  HypothesisClass cls_;
  std::vector<Point> domain_;
};

uint64_t fnv1a(const std::string& data);

}  // namespace rcert

#endif  // RCERT_ORACLE_HPP
