#include "rcert/loss.hpp"

#include <algorithm>

#include "rcert/errors.hpp"

namespace rcert {

int binary_loss(const Hypothesis& h, const Point& x, Label y) {
  return evaluate(h, x) != y ? 1 : 0;
}

namespace {

bool margin_finite_map(const Hypothesis& h, const Point& x, const FiniteMapPerturbation& u) {
  const Label at_x = evaluate(h, x);
  for (const auto& z : neighbors(u, x))
    if (evaluate(h, z) != at_x) return true;
  return false;
}

bool margin_threshold_ball(const ThresholdHypothesis& h, const Point& x,
                           const BallPerturbation& b) {
  if (x.dimension() != 1)
    throw NoExactMarginTest("threshold margin test needs 1-d points");
  // All three norms are the interval [x-r, x+r] on the line; a threshold is
  // monotone there, so the endpoints witness any flip.
  const Hypothesis hh = h;
  const Label at_x = evaluate(hh, x);
  const Point lo = Point::line(x.coord(0) - b.radius);
  const Point hi = Point::line(x.coord(0) + b.radius);
  return evaluate(hh, lo) != at_x || evaluate(hh, hi) != at_x;
}

bool margin_halfspace_ball(const HalfspaceHypothesis& h, const Point& x,
                           const BallPerturbation& b) {
  if (x.dimension() != 2)
    throw NoExactMarginTest("halfspace margin test needs 2-d points");
  const Rat g = halfspace_margin_value(h, x);
  // s = r * ||w||_dual; the extreme of w·z+b over the closed ball is g ± s.
  // Label convention 1{w·z+b >= 0}: a point on the positive side flips only
  // if the minimum goes strictly below 0, a point on the negative side flips
  // as soon as the maximum reaches 0.
  switch (b.norm) {
    case Norm::L1: {
      const Rat s = b.radius * max(h.w1.abs(), h.w2.abs());
      return g.sign() >= 0 ? g < s : -g <= s;
    }
    case Norm::Linf: {
      const Rat s = b.radius * (h.w1.abs() + h.w2.abs());
      return g.sign() >= 0 ? g < s : -g <= s;
    }
    case Norm::L2: {
      const Rat s2 = b.radius * b.radius * (h.w1 * h.w1 + h.w2 * h.w2);
      return g.sign() >= 0 ? g * g < s2 : g * g <= s2;
    }
  }
  throw InvariantViolation("unknown norm");
}

}  // namespace

bool margin_membership(const Hypothesis& h, const Point& x, const PerturbationType& u) {
  if (const auto* fm = std::get_if<FiniteMapPerturbation>(&u)) return margin_finite_map(h, x, *fm);
  if (const auto* b = std::get_if<BallPerturbation>(&u)) {
    if (const auto* th = std::get_if<ThresholdHypothesis>(&h))
      return margin_threshold_ball(*th, x, *b);
    if (const auto* hs = std::get_if<HalfspaceHypothesis>(&h))
      return margin_halfspace_ball(*hs, x, *b);
    throw NoExactMarginTest("no exact margin test for " + describe(h) + " under a ball");
  }
  throw NoExactMarginTest("no exact margin test under a restriction pair; use its components");
}

int robust_loss_point(const Hypothesis& h, const Point& x, Label y, const PerturbationType& u) {
  if (binary_loss(h, x, y)) return 1;
  return margin_membership(h, x, u) ? 1 : 0;
}

Rat true_loss(const Hypothesis& h, const DiscreteDistribution& p,
              const std::optional<PerturbationType>& u) {
  Rat total;
  for (const auto& a : p.atoms()) {
    const int l = u ? robust_loss_point(h, a.point, a.label, *u)
                    : binary_loss(h, a.point, a.label);
    if (l) total += a.weight;
  }
  return total;
}

Rat margin_weight(const Hypothesis& h, const DiscreteDistribution& p, const PerturbationType& u) {
  Rat total;
  for (const auto& a : p.atoms())
    if (margin_membership(h, a.point, u)) total += a.weight;
  return total;
}

Rat empirical_robust_loss(const Hypothesis& h, const LabeledSample& s, const PerturbationType& u) {
  if (s.empty()) throw ConfigError("empirical robust loss of an empty sample");
  long hits = 0;
  for (const auto& e : s) hits += robust_loss_point(h, e.point, e.label, u);
  return Rat(hits, static_cast<long>(s.size()));
}

Rat empirical_binary_loss(const Hypothesis& h, const LabeledSample& s) {
  if (s.empty()) throw ConfigError("empirical binary loss of an empty sample");
  long hits = 0;
  for (const auto& e : s) hits += binary_loss(h, e.point, e.label);
  return Rat(hits, static_cast<long>(s.size()));
}

std::vector<std::vector<Point>> margin_class_sets(const FiniteClass& cls,
                                                  const PerturbationType& u,
                                                  const std::vector<Point>& domain) {
  std::vector<std::vector<Point>> out;
  for (const auto& h : cls.members) {
    std::vector<Point> set;
    for (const auto& x : domain)
      if (margin_membership(h, x, u)) set.push_back(x);
    std::sort(set.begin(), set.end());
    if (std::find(out.begin(), out.end(), set) == out.end()) out.push_back(std::move(set));
  }
  return out;
}

}  // namespace rcert
