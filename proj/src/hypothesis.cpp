#include "rcert/hypothesis.hpp"

#include <sstream>

#include "rcert/errors.hpp"

namespace rcert {

Label evaluate(const Hypothesis& h, const Point& x) {
  if (const auto* tab = std::get_if<TabularHypothesis>(&h)) {
    auto it = tab->labels.find(x);
    if (it == tab->labels.end())
      throw PointOutsideDomain("tabular hypothesis undefined at " + x.str());
    return it->second;
  }
  if (const auto* th = std::get_if<ThresholdHypothesis>(&h)) {
    if (x.dimension() != 1)
      throw ContractViolation("dimension", "threshold hypothesis needs a 1-d point, got " + x.str());
    const Rat& v = x.coord(0);
    return th->geq ? (v >= th->t ? 1 : 0) : (v <= th->t ? 1 : 0);
  }
  const auto& hs = std::get<HalfspaceHypothesis>(h);
  if (x.dimension() != 2)
    throw ContractViolation("dimension", "halfspace hypothesis needs a 2-d point, got " + x.str());
  return halfspace_margin_value(hs, x).sign() >= 0 ? 1 : 0;
}

Rat halfspace_margin_value(const HalfspaceHypothesis& h, const Point& x) {
  return h.w1 * x.coord(0) + h.w2 * x.coord(1) + h.b;
}

bool extensionally_equal(const Hypothesis& a, const Hypothesis& b,
                         const std::vector<Point>& domain) {
  for (const auto& x : domain)
    if (evaluate(a, x) != evaluate(b, x)) return false;
  return true;
}

std::string describe(const Hypothesis& h) {
  if (const auto* tab = std::get_if<TabularHypothesis>(&h)) {
    std::ostringstream os;
    os << "tabular{";
    bool first = true;
    for (const auto& [p, l] : tab->labels) {
      if (!first) os << ",";
      first = false;
      os << p.str() << ":" << l;
    }
    os << "}";
    return os.str();
  }
  if (const auto* th = std::get_if<ThresholdHypothesis>(&h)) {
    return std::string("threshold{") + (th->geq ? "x>=" : "x<=") + th->t.str() + "}";
  }
  const auto& hs = std::get<HalfspaceHypothesis>(h);
  return "halfspace{" + hs.w1.str() + "*x+" + hs.w2.str() + "*y+" + hs.b.str() + ">=0}";
}

void validate_finite_class(const FiniteClass& cls, const std::vector<Point>& domain) {
  if (cls.members.empty()) throw ConfigError("finite class with no members");
  for (const auto& h : cls.members) {
    if (const auto* hs = std::get_if<HalfspaceHypothesis>(&h)) {
      if (hs->w1.is_zero() && hs->w2.is_zero())
        throw ConfigError("halfspace with zero normal vector");
    }
  }
  for (size_t i = 0; i < cls.members.size(); ++i)
    for (size_t j = i + 1; j < cls.members.size(); ++j)
      if (extensionally_equal(cls.members[i], cls.members[j], domain))
        throw ConfigError("finite class has extensional duplicates (members " +
                          std::to_string(i) + " and " + std::to_string(j) + ")");
}

bool class_contains(const HypothesisClass& cls, const Hypothesis& h,
                    const std::vector<Point>& domain) {
  if (const auto* fin = std::get_if<FiniteClass>(&cls)) {
    for (const auto& m : fin->members)
      if (extensionally_equal(m, h, domain)) return true;
    return false;
  }
  if (std::holds_alternative<ThresholdFamily>(cls))
    return std::holds_alternative<ThresholdHypothesis>(h) &&
           std::get<ThresholdHypothesis>(h).geq == std::get<ThresholdFamily>(cls).geq;
  return std::holds_alternative<HalfspaceHypothesis>(h);
}

}  // namespace rcert
