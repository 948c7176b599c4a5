#include "rcert/oracle.hpp"

#include <sstream>

#include "rcert/errors.hpp"

namespace rcert {

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Label BudgetedLabelOracle::query(const Point& x) {
  if (budget_ && transcript_.size() >= *budget_)
    throw BudgetExhausted("label oracle budget of " + std::to_string(*budget_) + " spent");
  const Label l = evaluate(h_, x);
  transcript_.push_back({x, l});
  return l;
}

OracleReport BudgetedLabelOracle::report() const {
  std::ostringstream os;
  for (const auto& e : transcript_) os << e.point.str() << "|" << e.label << ";";
  std::ostringstream hex;
  hex << std::hex << fnv1a(os.str());
  return {used(), hex.str()};
}

std::string BudgetedLabelOracle::transcript_jsonl() const {
  std::ostringstream os;
  for (size_t i = 0; i < transcript_.size(); ++i) {
    os << "{\"x\":\"" << transcript_[i].point.str() << "\",\"label\":" << transcript_[i].label
       << ",\"index\":" << i << "}\n";
  }
  return os.str();
}

IdealOracles::IdealOracles(DiscreteDistribution p, PerturbationType u, HypothesisClass cls,
                           std::vector<Point> domain)
    : p_(std::move(p)), u_(std::move(u)), cls_(std::move(cls)), domain_(std::move(domain)) {}

void IdealOracles::require_member(const Hypothesis& h) const {
  if (!class_contains(cls_, h, domain_))
    throw HypothesisOutsideClass("oracle refused " + describe(h) +
                                 ": not a member of the declared class");
}

Rat IdealOracles::error_weight(const Hypothesis& h) const {
  require_member(h);
  return true_loss(h, p_);
}

Rat IdealOracles::margin_weight(const Hypothesis& h) const {
  require_member(h);
  return rcert::margin_weight(h, p_, u_);
}

ExtendedMarginWeights IdealOracles::extended(const Hypothesis& h, const Hypothesis& h2) const {
  require_member(h);
  require_member(h2);
  ExtendedMarginWeights w;
  for (const auto& a : p_.atoms()) {
    const bool in_margin = margin_membership(h, a.point, u_);
    const bool in_delta = evaluate(h, a.point) != evaluate(h2, a.point);
    if (in_margin) w.margin += a.weight;
    if (in_delta) w.disagreement += a.weight;
    if (in_margin && in_delta) w.both += a.weight;
  }
  return w;
}

}  // namespace rcert
