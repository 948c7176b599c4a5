#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcert/constructions.hpp"
#include "rcert/errors.hpp"
#include "rcert/oracle.hpp"
#include "test_util.hpp"

using namespace rcert;
using namespace rcert::testutil;

TEST_CASE("budgeted label oracle") {
  const auto ci = build_thm32();
  const auto& h1 = ci.cls.members[0];

  BudgetedLabelOracle oracle(h1);
  CHECK(oracle.query(ci.domain[1]) == 1);  // h1 = 1{x2, x3}
  CHECK(oracle.query(ci.domain[1]) == 1);  // repeated queries keep answering
  CHECK(oracle.used() == 2);
  CHECK(oracle.report().queries_used == 2);
  CHECK(oracle.transcript().size() == 2);

  BudgetedLabelOracle zero_budget(h1, 0);
  CHECK_THROWS_AS(zero_budget.query(ci.domain[0]), BudgetExhausted);

  BudgetedLabelOracle tight(h1, 2);
  tight.query(ci.domain[0]);
  tight.query(ci.domain[1]);
  CHECK_THROWS_AS(tight.query(ci.domain[2]), BudgetExhausted);
  CHECK(tight.used() == 2);
}

TEST_CASE("transcript export and hash accounting") {
  const auto ci = build_thm32();
  BudgetedLabelOracle oracle(ci.cls.members[0]);
  oracle.query(ci.domain[0]);
  oracle.query(ci.domain[1]);
  const std::string jsonl = oracle.transcript_jsonl();
  CHECK(jsonl.find("\"index\":0") != std::string::npos);
  CHECK(jsonl.find("\"index\":1") != std::string::npos);
  CHECK(jsonl.find("\"label\":1") != std::string::npos);

  BudgetedLabelOracle twin(ci.cls.members[0]);
  twin.query(ci.domain[0]);
  twin.query(ci.domain[1]);
  CHECK(oracle.report().transcript_hash == twin.report().transcript_hash);
  twin.query(ci.domain[2]);
  CHECK(oracle.report().transcript_hash != twin.report().transcript_hash);
}

TEST_CASE("error and margin oracles on the 7-point instance") {
  const auto ci = build_thm32();
  IdealOracles o1(ci.p1, ci.u, ci.cls, ci.domain);
  IdealOracles o2(ci.p2, ci.u, ci.cls, ci.domain);
  for (const auto& h : ci.cls.members) {
    CHECK(o1.margin_weight(h) == Rat(1, 3));
    CHECK(o2.margin_weight(h) == Rat(1, 3));
    CHECK(o1.error_weight(h) == Rat(1, 3));
    CHECK(o2.error_weight(h) == Rat(1, 3));
  }
}

TEST_CASE("oracles on the 8-point instance") {
  const auto ci = build_thm36();
  IdealOracles o1(ci.p1, ci.u, ci.cls, ci.domain);
  const auto& h_r = ci.cls.members[2];
  CHECK(o1.error_weight(h_r) == Rat(0));

  FiniteMapPerturbation identity;
  IdealOracles oid(ci.p1, identity, ci.cls, ci.domain);
  for (const auto& h : ci.cls.members) CHECK(oid.margin_weight(h) == Rat(0));
}

TEST_CASE("extended margin oracle on the 8-point instance") {
  const auto ci = build_thm36();
  IdealOracles o1(ci.p1, ci.u, ci.cls, ci.domain);
  const auto& h1 = ci.cls.members[0];
  const auto& h2 = ci.cls.members[1];
  const auto& h_r = ci.cls.members[2];

  const auto a = o1.extended(h1, h_r);
  CHECK(a.margin == Rat(2, 12));
  CHECK(a.disagreement == Rat(2, 12));
  CHECK(a.both == Rat(2, 12));

  const auto b = o1.extended(h2, h_r);
  CHECK(b.margin == Rat(2, 12));
  CHECK(b.disagreement == Rat(2, 12));
  CHECK(b.both == Rat(1, 12));

  const auto self = o1.extended(h1, h1);
  CHECK(self.margin == o1.margin_weight(h1));
  CHECK(self.disagreement == Rat(0));
  CHECK(self.both == Rat(0));
}

TEST_CASE("inclusion-exclusion holds on random instances") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = random_finite_instance(rng, 7, 6);
    const auto dist = random_distribution(rng, inst.domain);
    IdealOracles oracles(dist, inst.u, inst.cls, inst.domain);
    const PerturbationType u = inst.u;
    for (const auto& h : inst.cls.members) {
      const auto& h2 = inst.cls.members[rng.below(inst.cls.members.size())];
      const auto w = oracles.extended(h, h2);
      // direct union computation
      Rat union_weight;
      for (const auto& atom : dist.atoms()) {
        const bool in_margin = margin_membership(h, atom.point, u);
        const bool in_delta = evaluate(h, atom.point) != evaluate(h2, atom.point);
        if (in_margin || in_delta) union_weight += atom.weight;
      }
      CHECK(w.margin + w.disagreement - w.both == union_weight);
    }
  }
}

TEST_CASE("oracle values are invariant under atom permutation") {
  const auto ci = build_thm32();
  std::vector<Atom> reversed(ci.p1.atoms().rbegin(), ci.p1.atoms().rend());
  IdealOracles original(ci.p1, ci.u, ci.cls, ci.domain);
  IdealOracles permuted(DiscreteDistribution(std::move(reversed)), ci.u, ci.cls, ci.domain);
  for (const auto& h : ci.cls.members) {
    CHECK(original.error_weight(h) == permuted.error_weight(h));
    CHECK(original.margin_weight(h) == permuted.margin_weight(h));
  }
}

TEST_CASE("oracles refuse hypotheses outside the declared class") {
  const auto ci = build_thm32();
  IdealOracles oracles(ci.p1, ci.u, ci.cls, ci.domain);
  TabularHypothesis stranger;
  for (const auto& x : ci.domain) stranger.labels[x] = 1;
  CHECK_THROWS_AS(oracles.error_weight(stranger), HypothesisOutsideClass);
  CHECK_THROWS_AS(oracles.margin_weight(stranger), HypothesisOutsideClass);

  // extensional equality is what counts, not object identity
  TabularHypothesis copy = std::get<TabularHypothesis>(ci.cls.members[0]);
  CHECK_NOTHROW(oracles.error_weight(copy));
}
