#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcert/adversary.hpp"
#include "rcert/constructions.hpp"
#include "rcert/errors.hpp"
#include "test_util.hpp"

using namespace rcert;
using namespace rcert::testutil;

namespace {

LabeledSample labeled_by(const Hypothesis& h, const std::vector<Point>& points) {
  LabeledSample s;
  for (const auto& p : points) s.push_back({p, evaluate(h, p)});
  return s;
}

std::vector<Point> attack_points(const AttackResult& res) {
  std::vector<Point> out;
  for (const auto& hit : res.attack_set) out.push_back(hit.adversarial);
  return out;
}

}  // namespace

TEST_CASE("threshold endpoints adversary on the pinned example") {
  const Hypothesis h = ThresholdHypothesis{Rat(1, 2), true};
  const PerturbationType u = BallPerturbation{Norm::L1, Rat(1, 10)};
  const LabeledSample s = labeled_by(h, {Point::line(Rat(45, 100))});

  BudgetedLabelOracle oracle(h);
  ThresholdEndpointsAdversary adv;
  const auto res = adv.attack(oracle, s, u);

  REQUIRE(res.per_source_queries.size() == 1);
  REQUIRE(res.per_source_queries[0].size() == 2);
  CHECK(res.per_source_queries[0][0].point == Point::line(Rat(35, 100)));
  CHECK(res.per_source_queries[0][1].point == Point::line(Rat(55, 100)));
  CHECK(res.queries.queries_used == 2);

  REQUIRE(res.attack_set.size() == 1);
  CHECK(res.attack_set[0].adversarial == Point::line(Rat(55, 100)));  // labeled 1, x labeled 0
  CHECK(res.attack_set[0].source_index == 0);

  CHECK(is_admissible_attack(attack_points(res), points_of(s), h, u));
}

TEST_CASE("finite exhaustive adversary on the 7-point instance") {
  const auto ci = build_thm32();
  const auto& h1 = ci.cls.members[0];
  const PerturbationType u = ci.u;
  const LabeledSample s = labeled_by(h1, {ci.domain[0]});

  BudgetedLabelOracle oracle(h1);
  FiniteExhaustiveAdversary adv;
  const auto res = adv.attack(oracle, s, u);
  REQUIRE(res.attack_set.size() == 1);
  CHECK(res.attack_set[0].adversarial == ci.domain[1]);  // x2 flips h1 at x1
  CHECK(is_admissible_attack(attack_points(res), points_of(s), h1, u));
}

TEST_CASE("identity perturbation yields an empty attack") {
  const auto ci = build_thm32();
  const PerturbationType identity = FiniteMapPerturbation{};
  const LabeledSample s = labeled_by(ci.cls.members[0], {ci.domain[0], ci.domain[4]});
  BudgetedLabelOracle oracle(ci.cls.members[0]);
  FiniteExhaustiveAdversary adv;
  const auto res = adv.attack(oracle, s, identity);
  CHECK(res.attack_set.empty());
  CHECK(is_admissible_attack({}, points_of(s), ci.cls.members[0], identity));
}

TEST_CASE("admissibility requires covering every margin point") {
  const auto ci = build_thm32();
  const auto& h1 = ci.cls.members[0];
  const PerturbationType u = ci.u;
  // x1 lies in mar(h1): an empty attack set violates condition (ii)
  CHECK_FALSE(is_admissible_attack({}, {ci.domain[0]}, h1, u));
  // a non-adversarial returned point violates condition (i)
  CHECK_FALSE(is_admissible_attack({ci.domain[0]}, {ci.domain[0]}, h1, u));
  // the genuine adversarial point passes both
  CHECK(is_admissible_attack({ci.domain[1]}, {ci.domain[0]}, h1, u));
}

TEST_CASE("threshold endpoints adversary is perfect on random instances") {
  SplitMix64 rng(808);
  const Rat r(1, 8);
  const PerturbationType u = BallPerturbation{Norm::L1, r};
  ThresholdEndpointsAdversary adv;
  for (int trial = 0; trial < 1000; ++trial) {
    const Hypothesis h = ThresholdHypothesis{random_rat(rng, -4, 4, 8), true};
    std::vector<Point> pts;
    const size_t n = 1 + rng.below(50);
    for (size_t i = 0; i < n; ++i) pts.push_back(Point::line(random_rat(rng, -4, 4, 8)));
    const LabeledSample s = labeled_by(h, pts);
    BudgetedLabelOracle oracle(h);
    const auto res = adv.attack(oracle, s, u);
    CHECK(res.queries.queries_used == 2 * s.size());
    CHECK(is_admissible_attack(attack_points(res), points_of(s), h, u));
  }
}

TEST_CASE("finite exhaustive adversary is perfect on random instances") {
  SplitMix64 rng(809);
  FiniteExhaustiveAdversary adv;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_finite_instance(rng, 8, 6);
    const auto& h = inst.cls.members[rng.below(inst.cls.members.size())];
    const PerturbationType u = inst.u;
    std::vector<Point> pts;
    const size_t n = 1 + rng.below(20);
    for (size_t i = 0; i < n; ++i) pts.push_back(inst.domain[rng.below(inst.domain.size())]);
    const LabeledSample s = labeled_by(h, pts);
    BudgetedLabelOracle oracle(h);
    const auto res = adv.attack(oracle, s, u);
    CHECK(is_admissible_attack(attack_points(res), points_of(s), h, u));
    uint64_t bound = 0;
    for (const auto& p : pts) bound += neighbors(std::get<FiniteMapPerturbation>(u), p).size();
    CHECK(res.queries.queries_used <= bound);
  }
}

TEST_CASE("non-adaptivity: query sets do not depend on the hidden hypothesis") {
  const PerturbationType u = BallPerturbation{Norm::L1, Rat(1, 10)};
  std::vector<Point> pts{Point::line(Rat(1, 4)), Point::line(Rat(3, 4)), Point::line(Rat(2))};
  const Hypothesis ha = ThresholdHypothesis{Rat(3, 10), true};
  const Hypothesis hb = ThresholdHypothesis{Rat(7, 10), true};
  ThresholdEndpointsAdversary adv;

  BudgetedLabelOracle oa(ha), ob(hb);
  const auto ra = adv.attack(oa, labeled_by(ha, pts), u);
  const auto rb = adv.attack(ob, labeled_by(hb, pts), u);
  REQUIRE(ra.per_source_queries.size() == rb.per_source_queries.size());
  for (size_t i = 0; i < ra.per_source_queries.size(); ++i) {
    REQUIRE(ra.per_source_queries[i].size() == rb.per_source_queries[i].size());
    for (size_t j = 0; j < ra.per_source_queries[i].size(); ++j)
      CHECK(ra.per_source_queries[i][j].point == rb.per_source_queries[i][j].point);
  }
}

TEST_CASE("query complexity measurement") {
  SplitMix64 rng(810);
  const PerturbationType u = BallPerturbation{Norm::L1, Rat(1, 8)};
  ThresholdEndpointsAdversary adv;
  std::vector<std::pair<LabeledSample, Hypothesis>> instances;
  for (size_t n = 1; n <= 100; ++n) {
    const Hypothesis h = ThresholdHypothesis{random_rat(rng, -4, 4, 8), true};
    std::vector<Point> pts;
    for (size_t i = 0; i < n; ++i) pts.push_back(Point::line(random_rat(rng, -4, 4, 8)));
    instances.emplace_back(labeled_by(h, pts), h);
  }
  const auto report = measure_query_complexity(adv, instances, u);
  CHECK(report.efficient);
  CHECK(report.max_ratio == Rat(2));
  for (const auto& [n, q] : report.max_queries_by_size)
    if (n > 0) CHECK(q == 2 * n);

  // empty sample: zero queries
  std::vector<std::pair<LabeledSample, Hypothesis>> empty_instance{
      {LabeledSample{}, ThresholdHypothesis{Rat(0), true}}};
  const auto empty_report = measure_query_complexity(adv, empty_instance, u);
  CHECK(empty_report.max_queries_by_size.at(0) == 0);
}

TEST_CASE("witness sets from the non-adaptive adversaries") {
  // threshold endpoints against a finite panel of thresholds
  const Rat r(1, 8);
  const PerturbationType u = BallPerturbation{Norm::L1, r};
  FiniteClass panel;
  for (int k = -4; k <= 4; ++k)
    panel.members.push_back(ThresholdHypothesis{Rat(k, 2), true});
  ThresholdEndpointsAdversary adv;
  SplitMix64 rng(811);
  for (int trial = 0; trial < 200; ++trial) {
    const Point x = Point::line(random_rat(rng, -3, 3, 8));
    const WitnessSet w = witness_from_nonadaptive(adv, x, u, panel);
    const auto pts = w.points();
    CHECK(pts.size() <= 3);
    CHECK(std::find(pts.begin(), pts.end(), Point::line(x.coord(0) - r)) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), Point::line(x.coord(0) + r)) != pts.end());
  }

  // exhaustive adversary: w(x) = U(x) ∪ {x}, always valid
  const auto ci = build_thm32();
  FiniteExhaustiveAdversary exhaustive;
  for (const auto& x : ci.domain) {
    const WitnessSet w = witness_from_nonadaptive(exhaustive, x, PerturbationType{ci.u}, ci.cls);
    const auto expect = neighbors(ci.u, x);
    const auto pts = w.points();
    CHECK(pts == expect);  // both sorted and deduplicated, x included
  }

  // identity perturbation: w(x) = {x}, constantly no-margin
  const PerturbationType identity = FiniteMapPerturbation{};
  for (const auto& x : ci.domain) {
    const WitnessSet w = witness_from_nonadaptive(exhaustive, x, identity, ci.cls);
    CHECK(w.points() == std::vector<Point>{x});
  }
}
