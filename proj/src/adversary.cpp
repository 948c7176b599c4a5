#include "rcert/adversary.hpp"

#include <algorithm>

#include "rcert/errors.hpp"

namespace rcert {

namespace {

bool in_some_perturbation(const PerturbationType& u, const std::vector<Point>& sources,
                          const Point& z) {
  for (const auto& x : sources)
    if (perturbation_contains(u, x, z)) return true;
  return false;
}

}  // namespace

AttackResult Adversary::attack(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                               const PerturbationType& u) const {
  AttackResult result = run(oracle, sample, u);
  // properness, asserted on every run
  const auto sources = points_of(sample);
  for (const auto& per : result.per_source_queries)
    for (const auto& q : per)
      if (!in_some_perturbation(u, sources, q.point))
        throw PropernessViolation(name() + " queried " + q.point.str() +
                                  " outside the union of perturbation sets");
  for (const auto& hit : result.attack_set) {
    if (hit.source_index >= sample.size())
      throw InvariantViolation("attack hit with out-of-range source index");
    if (!perturbation_contains(u, sample[hit.source_index].point, hit.adversarial))
      throw PropernessViolation(name() + " returned " + hit.adversarial.str() +
                                " outside U(" + sample[hit.source_index].point.str() + ")");
  }
  result.queries = oracle.report();
  return result;
}

std::vector<Point> ThresholdEndpointsAdversary::planned_queries(const Point& x,
                                                                const PerturbationType& u) const {
  const auto* ball = std::get_if<BallPerturbation>(&u);
  if (!ball || x.dimension() != 1)
    throw ContractViolation("unsupported_combination",
                            "threshold endpoints adversary needs 1-d points and a ball");
  return {Point::line(x.coord(0) - ball->radius), Point::line(x.coord(0) + ball->radius)};
}

AttackResult ThresholdEndpointsAdversary::run(BudgetedLabelOracle& oracle,
                                              const LabeledSample& sample,
                                              const PerturbationType& u) const {
  AttackResult result;
  result.per_source_queries.resize(sample.size());
  for (size_t i = 0; i < sample.size(); ++i) {
    for (const auto& q : planned_queries(sample[i].point, u)) {
      const Label l = oracle.query(q);
      result.per_source_queries[i].push_back({q, l});
      if (l != sample[i].label) result.attack_set.push_back({q, i});
    }
  }
  return result;
}

std::vector<Point> FiniteExhaustiveAdversary::planned_queries(const Point& x,
                                                              const PerturbationType& u) const {
  const auto* fm = std::get_if<FiniteMapPerturbation>(&u);
  if (!fm)
    throw ContractViolation("unsupported_combination",
                            "finite exhaustive adversary needs a finite map");
  return neighbors(*fm, x);
}

AttackResult FiniteExhaustiveAdversary::run(BudgetedLabelOracle& oracle,
                                            const LabeledSample& sample,
                                            const PerturbationType& u) const {
  AttackResult result;
  result.per_source_queries.resize(sample.size());
  for (size_t i = 0; i < sample.size(); ++i) {
    const Point& x = sample[i].point;
    const auto plan = planned_queries(x, u);
    // x ∈ U(x) is part of the plan, so the label at x comes from the queries
    Label at_x = 0;
    for (const auto& q : plan) {
      const Label l = oracle.query(q);
      result.per_source_queries[i].push_back({q, l});
      if (q == x) at_x = l;
    }
    for (const auto& e : result.per_source_queries[i])
      if (e.label != at_x) result.attack_set.push_back({e.point, i});
  }
  return result;
}

bool is_admissible_attack(const std::vector<Point>& attack_points,
                          const std::vector<Point>& sample_points, const Hypothesis& h,
                          const PerturbationType& u) {
  // (i) every returned point is adversarial for some sample point
  for (const auto& z : attack_points) {
    bool adversarial = false;
    for (const auto& x : sample_points) {
      if (perturbation_contains(u, x, z) && evaluate(h, z) != evaluate(h, x)) {
        adversarial = true;
        break;
      }
    }
    if (!adversarial) return false;
  }
  // (ii) every attackable sample point is covered
  for (const auto& x : sample_points) {
    if (!margin_membership(h, x, u)) continue;
    bool covered = false;
    for (const auto& z : attack_points) {
      if (perturbation_contains(u, x, z) && evaluate(h, z) != evaluate(h, x)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

QueryComplexityReport measure_query_complexity(
    const Adversary& adv, const std::vector<std::pair<LabeledSample, Hypothesis>>& instances,
    const PerturbationType& u) {
  QueryComplexityReport report;
  for (const auto& [sample, h] : instances) {
    if (sample.empty()) {
      report.max_queries_by_size[0] = std::max(report.max_queries_by_size[0], uint64_t{0});
      continue;
    }
    BudgetedLabelOracle oracle(h);
    const AttackResult res = adv.attack(oracle, sample, u);
    std::vector<Point> attack_points;
    for (const auto& hit : res.attack_set) attack_points.push_back(hit.adversarial);
    if (!is_admissible_attack(attack_points, points_of(sample), h, u))
      throw InadmissibleAttack(adv.name() + " produced an inadmissible attack on a sample of " +
                               std::to_string(sample.size()));
    auto& slot = report.max_queries_by_size[sample.size()];
    slot = std::max(slot, res.queries.queries_used);
  }
  std::vector<std::pair<size_t, uint64_t>> buckets;
  for (const auto& [n, q] : report.max_queries_by_size)
    if (n > 0) buckets.emplace_back(n, q);
  if (buckets.empty()) {
    report.efficient = true;
    return report;
  }
  Rat lower_max, upper_max;
  const size_t half = (buckets.size() + 1) / 2;
  for (size_t i = 0; i < buckets.size(); ++i) {
    const Rat ratio(static_cast<long>(buckets[i].second), static_cast<long>(buckets[i].first));
    report.max_ratio = max(report.max_ratio, ratio);
    if (i < half)
      lower_max = max(lower_max, ratio);
    else
      upper_max = max(upper_max, ratio);
  }
  report.efficient = buckets.size() == 1 || upper_max <= lower_max;
  return report;
}

WitnessSet witness_from_nonadaptive(const Adversary& adv, const Point& x,
                                    const PerturbationType& u, const FiniteClass& cls) {
  if (!adv.non_adaptive())
    throw ContractViolation("adaptive_adversary",
                            "witness construction needs a non-adaptive adversary");
  WitnessSet w;
  w.base = x;
  for (const auto& q : adv.planned_queries(x, u))
    if (perturbation_contains(u, x, q)) w.w0.push_back(q);
  std::sort(w.w0.begin(), w.w0.end());
  w.w0.erase(std::unique(w.w0.begin(), w.w0.end()), w.w0.end());
  w.w1 = w.w0;

  // validate against exact margin membership for every class member
  for (const auto& h : cls.members) {
    std::map<Point, Label> labels;
    labels[x] = evaluate(h, x);
    for (const auto& p : w.points()) labels.emplace(p, evaluate(h, p));
    if (w.decide(labels[x], labels) != margin_membership(h, x, u))
      throw WitnessValidationError(
          "query-derived witness for " + x.str() + " disagrees with exact margin membership for " +
          describe(h) + " (the adversary is not perfect here, or returns unqueried points)");
  }
  return w;
}

}  // namespace rcert
