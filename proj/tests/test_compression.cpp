#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcert/compression.hpp"
#include "rcert/errors.hpp"
#include "test_util.hpp"

using namespace rcert;
using namespace rcert::testutil;

namespace {

LabeledSample lab(std::initializer_list<std::pair<const char*, Label>> pts) {
  LabeledSample s;
  for (const auto& [x, y] : pts) s.push_back({Point::line(Rat::parse(x)), y});
  return s;
}

}  // namespace

TEST_CASE("threshold compressor keeps the boundary pair") {
  const auto kept = threshold_compress(lab({{"3/10", 0}, {"4/5", 1}}));
  REQUIRE(kept.size() == 2);
  const Hypothesis decoded = threshold_decompress(kept);
  CHECK(std::get<ThresholdHypothesis>(decoded).t == Rat(11, 20));  // 0.55

  // decoding reproduces zero binary loss on the source
  for (const auto& e : lab({{"3/10", 0}, {"4/5", 1}}))
    CHECK(evaluate(decoded, e.point) == e.label);
}

TEST_CASE("threshold compressor single-sided and singleton samples") {
  const auto all_one = threshold_compress(lab({{"2/5", 1}, {"9/10", 1}}));
  REQUIRE(all_one.size() == 1);
  CHECK(all_one[0].point == Point::line(Rat(2, 5)));
  const Hypothesis h1 = threshold_decompress(all_one);
  CHECK(evaluate(h1, Point::line(Rat(2, 5))) == 1);
  CHECK(evaluate(h1, Point::line(Rat(9, 10))) == 1);

  const auto all_zero = threshold_compress(lab({{"2/5", 0}}));
  REQUIRE(all_zero.size() == 1);
  const Hypothesis h0 = threshold_decompress(all_zero);
  CHECK(evaluate(h0, Point::line(Rat(2, 5))) == 0);

  CHECK_THROWS_AS(threshold_compress(lab({{"1/2", 1}, {"4/5", 0}})), NonRealizableSample);
}

TEST_CASE("robust compression hand trace") {
  const Hypothesis h = ThresholdHypothesis{Rat(1, 2), true};
  const Rat r(1, 10);
  const PerturbationType u = BallPerturbation{Norm::L1, r};
  const LabeledSample s = lab({{"1/5", 0}, {"9/10", 1}});

  BudgetedLabelOracle oracle(h);
  ThresholdEndpointsAdversary adv;
  const CompressedSet cs = compress_robust(s, oracle, adv, u);

  REQUIRE(cs.entries.size() == 2);
  // both kept points are rewritten against their sources 0.2 and 0.9
  CHECK(cs.entries[0].point == Point::line(Rat(1, 5)));
  REQUIRE(cs.entries[0].rewrite);
  CHECK(cs.entries[0].rewrite->rank == 1);  // 0.3 is the second endpoint of 0.2
  CHECK(cs.entries[0].rewrite->neighbor_labels == std::vector<Label>{0, 0});
  CHECK(cs.entries[1].point == Point::line(Rat(9, 10)));
  REQUIRE(cs.entries[1].rewrite);
  CHECK(cs.entries[1].rewrite->rank == 0);  // 0.8 is the first endpoint of 0.9
  CHECK(cs.entries[1].rewrite->neighbor_labels == std::vector<Label>{1, 1});

  const Hypothesis decoded = decompress_robust(cs, adv, u);
  CHECK(std::get<ThresholdHypothesis>(decoded).t == Rat(11, 20));

  for (const auto& e : s)
    CHECK(robust_loss_point(decoded, e.point, e.label, u) ==
          robust_loss_point(h, e.point, e.label, u));
}

TEST_CASE("kept points already in the sample carry no side info") {
  const Hypothesis h = ThresholdHypothesis{Rat(1, 2), true};
  const Rat r(1, 5);
  const PerturbationType u = BallPerturbation{Norm::L1, r};
  // the endpoint queries of 0.4 and 0.6 land back on sample points, so the
  // compressed core is {0.4, 0.6} itself
  const LabeledSample s = lab({{"2/5", 0}, {"3/5", 1}});
  BudgetedLabelOracle oracle(h);
  ThresholdEndpointsAdversary adv;
  const CompressedSet cs = compress_robust(s, oracle, adv, u);
  REQUIRE(cs.entries.size() == 2);
  for (const auto& entry : cs.entries) CHECK_FALSE(entry.rewrite.has_value());
  CHECK(cs.entries[0].point == Point::line(Rat(2, 5)));
  CHECK(cs.entries[1].point == Point::line(Rat(3, 5)));
}

TEST_CASE("empty sample compresses vacuously") {
  const Hypothesis h = ThresholdHypothesis{Rat(1, 2), true};
  const PerturbationType u = BallPerturbation{Norm::L1, Rat(1, 10)};
  BudgetedLabelOracle oracle(h);
  ThresholdEndpointsAdversary adv;
  const CompressedSet cs = compress_robust({}, oracle, adv, u);
  CHECK(cs.entries.empty());
  CHECK_NOTHROW(decompress_robust(cs, adv, u));
}

TEST_CASE("round trip preserves per-point robust losses on random tasks") {
  SplitMix64 rng(303);
  const Rat r(1, 10);
  const PerturbationType u = BallPerturbation{Norm::L1, r};
  ThresholdEndpointsAdversary adv;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto task = random_threshold_task(rng, r);
    const Hypothesis h = ThresholdHypothesis{task.t, true};
    const auto s = sample(task.dist, 1 + rng.below(60), rng.next());

    BudgetedLabelOracle oracle(h);
    const CompressedSet cs = compress_robust(s, oracle, adv, u);
    CHECK(cs.entries.size() <= 2);
    const Hypothesis decoded = decompress_robust(cs, adv, u);
    for (const auto& e : s)
      CHECK(robust_loss_point(decoded, e.point, e.label, u) ==
            robust_loss_point(h, e.point, e.label, u));
  }
}

TEST_CASE("compression learner achieves zero empirical robust loss") {
  SplitMix64 rng(304);
  const Rat r(1, 10);
  const PerturbationType u = BallPerturbation{Norm::L1, r};
  ThresholdEndpointsAdversary adv;
  for (int trial = 0; trial < 50; ++trial) {
    const auto task = random_threshold_task(rng, r);
    const Hypothesis h = ThresholdHypothesis{task.t, true};
    const auto s = sample(task.dist, 200, rng.next());
    BudgetedLabelOracle oracle(h);
    const Hypothesis learned = compression_learner(s, u, oracle, adv);
    CHECK(empirical_robust_loss(learned, s, u) == Rat(0));
  }
}

TEST_CASE("malformed side info is rejected") {
  const PerturbationType u = BallPerturbation{Norm::L1, Rat(1, 10)};
  ThresholdEndpointsAdversary adv;
  CompressedSet cs;
  cs.class_id = "threshold";
  cs.radius = Rat(1, 10);
  CompressedEntry entry;
  entry.point = Point::line(Rat(0));
  entry.label = 0;
  entry.rewrite = QueryRewrite{5, {0, 0}};  // rank out of range
  cs.entries.push_back(entry);
  CHECK_THROWS_AS(decompress_robust(cs, adv, u), ConfigError);
}
