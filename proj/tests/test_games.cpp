#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcert/errors.hpp"
#include "rcert/games.hpp"
#include "rcert/rng.hpp"
#include "test_util.hpp"

using namespace rcert;
using namespace rcert::testutil;

namespace {

Rat norm2(const Point& p) {
  return p.coord(0) * p.coord(0) + p.coord(1) * p.coord(1);
}

}  // namespace

TEST_CASE("dual line coefficients") {
  const Line l = dual_line({Rat(2), Rat(0)});
  CHECK(l.a == Rat(2));
  CHECK(l.b == Rat(0));
  CHECK(l.c == Rat(1));
  // 2a + 1 = 0 at a = -1/2
  CHECK(l.eval({Rat(-1, 2), Rat(17)}) == Rat(0));

  // applying the transform twice recovers the defining incidence: z lies on
  // the dual of w iff w lies on the dual of z
  const Vec2 z{Rat(1, 3), Rat(2)};
  const Vec2 w{Rat(-3), Rat(5, 7)};
  CHECK(dual_line(z).eval(w) == dual_line(w).eval(z));
}

TEST_CASE("cell splitting") {
  const Cell box = Cell::bounding_box();
  CHECK(box.area() == Rat(64));

  // split by a = 0: two 4x8 rectangles
  const Line vertical{Rat(1), Rat(0), Rat(0)};
  auto [neg, pos] = split_cell(box, vertical);
  REQUIRE(neg);
  REQUIRE(pos);
  CHECK(neg->area() == Rat(32));
  CHECK(pos->area() == Rat(32));

  // a line missing the box leaves one side absent
  const Line far_away{Rat(1), Rat(0), Rat(-10)};  // u = 10
  auto [low, high] = split_cell(box, far_away);
  REQUIRE(low);
  CHECK_FALSE(high);
  CHECK(low->area() == Rat(64));
}

TEST_CASE("split areas sum exactly on random cells") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Cell cell = Cell::bounding_box();
    // a few random cuts to shape the cell
    for (int cut = 0; cut < 3; ++cut) {
      const Line l{random_rat(rng, -2, 2, 6), random_rat(rng, -2, 2, 6),
                   random_rat(rng, -2, 2, 6)};
      if (l.a.is_zero() && l.b.is_zero()) continue;
      auto [a, b] = split_cell(cell, l);
      if (a && b)
        cell = rng.coin() ? *a : *b;
      else if (a)
        cell = *a;
      else if (b)
        cell = *b;
    }
    const Line l{random_rat(rng, -2, 2, 6), random_rat(rng, -2, 2, 6),
                 random_rat(rng, -2, 2, 6)};
    if (l.a.is_zero() && l.b.is_zero()) continue;
    auto [a, b] = split_cell(cell, l);
    Rat parts;
    if (a) parts += a->area();
    if (b) parts += b->area();
    CHECK(parts == cell.area());
  }
}

TEST_CASE("unit circle straddle test") {
  const Cell box = Cell::bounding_box();
  CHECK(straddles_unit_circle(box));

  // tiny cell near (2,2): entirely outside the disk
  Cell outside = box;
  for (const Line& l : {Line{Rat(-1), Rat(0), Rat(15, 8)},    // u >= 15/8
                        Line{Rat(0), Rat(-1), Rat(15, 8)},    // v >= 15/8
                        Line{Rat(1), Rat(0), Rat(-17, 8)},    // u <= 17/8
                        Line{Rat(0), Rat(1), Rat(-17, 8)}}) { // v <= 17/8
    auto [a, b] = split_cell(outside, l);
    REQUIRE(a);
    outside = *a;
  }
  CHECK_FALSE(straddles_unit_circle(outside));

  // tiny cell around the origin: entirely inside the disk
  Cell inside = box;
  for (const Line& l : {Line{Rat(-1), Rat(0), Rat(-1, 4)}, Line{Rat(0), Rat(-1), Rat(-1, 4)},
                        Line{Rat(1), Rat(0), Rat(-1, 4)}, Line{Rat(0), Rat(1), Rat(-1, 4)}}) {
    auto [a, b] = split_cell(inside, l);
    REQUIRE(a);
    inside = *a;
  }
  CHECK_FALSE(straddles_unit_circle(inside));
}

TEST_CASE("l2 game refutes zero-query verdicts both ways") {
  for (const bool verdict : {true, false}) {
    const auto ref = run_l2_game(scripted_strategy({}, verdict));
    CHECK(ref.verified());
    CHECK(ref.transcript.empty());
    CHECK(ref.kind == RefutingKind::DualPoint);
    if (verdict) {
      // claimed robust: the hidden boundary meets the unit ball
      CHECK(norm2(ref.refuting) > Rat(1));
      CHECK(ref.actual_loss_inner == Rat(1));
    } else {
      CHECK(norm2(ref.refuting) < Rat(1));
      CHECK(norm2(ref.refuting) > Rat(0));  // never the degenerate origin
      CHECK(ref.actual_loss_inner == Rat(0));
    }
  }
}

TEST_CASE("l2 game replays a one-query strategy consistently") {
  const auto ref = run_l2_game(scripted_strategy({Point::plane(Rat(2), Rat(0))}, true));
  CHECK(ref.verified());
  REQUIRE(ref.transcript.size() == 1);
  const Label answered = ref.transcript[0].label;
  // replay against the refuting dual point (a, b): label = 1{2a + 1 > 0}
  const Rat v = Rat(2) * ref.refuting.coord(0) + Rat(1);
  CHECK((v.sign() > 0 ? 1 : 0) == answered);
}

TEST_CASE("l2 game handles origin queries without splitting") {
  const auto ref = run_l2_game(
      scripted_strategy({Point::plane(Rat(0), Rat(0)), Point::plane(Rat(1), Rat(1))}, false));
  CHECK(ref.verified());
  REQUIRE(ref.transcript.size() == 2);
  CHECK(ref.transcript[0].label == 1);  // the origin is always labeled 1
}

TEST_CASE("l2 game defeats seeded random strategies") {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const auto ref = run_l2_game(random_l2_strategy(seed, 50));
    CHECK(ref.verified());
    CHECK(ref.transcript.size() <= 50);
  }
}

TEST_CASE("strategy budget enforcement") {
  CertifierStrategy hungry;
  hungry.max_queries = 2;
  hungry.act = [](const std::vector<LabeledExample>& t) -> StrategyAction {
    return NextQuery{Point::plane(Rat(1, 2 + static_cast<long>(t.size())), Rat(1))};
  };
  CHECK_THROWS_AS(run_l2_game(hungry), ContractViolation);

  CertifierStrategy oversized;
  oversized.max_queries = 20000;
  oversized.act = [](const std::vector<LabeledExample>&) -> StrategyAction {
    return Verdict{true};
  };
  CHECK_THROWS_AS(run_l2_game(oversized), ConfigError);
}

TEST_CASE("singleton game zero-query verdicts") {
  const Point x0 = Point::plane(Rat(0), Rat(0));
  const Rat r(1);
  const Rat gamma(1, 2);

  // claimed low: the hidden singleton lands on x0 + (r/2, 0), loss 1
  const auto low = run_tolerant_singleton_game(scripted_strategy({}, true), x0, r, gamma);
  CHECK(low.verified());
  CHECK(low.refuting == Point::plane(Rat(1, 2), Rat(0)));
  CHECK(low.actual_loss_inner == Rat(1));
  REQUIRE(low.actual_loss_outer);
  CHECK(*low.actual_loss_outer == Rat(1));

  // claimed high: the singleton lands beyond V
  const auto high = run_tolerant_singleton_game(scripted_strategy({}, false), x0, r, gamma);
  CHECK(high.verified());
  CHECK(high.actual_loss_inner == Rat(0));
  CHECK(*high.actual_loss_outer == Rat(0));
  const Rat d2 = norm2(high.refuting);
  CHECK(d2 > (r * (Rat(1) + gamma)) * (r * (Rat(1) + gamma)));
}

TEST_CASE("singleton game avoids queried grid points") {
  const Point x0 = Point::plane(Rat(2), Rat(3));
  const Rat r(1, 2);
  const Rat gamma(1, 10);
  // query exactly the point the oracle would otherwise pick first
  const Point first_pick = Point::plane(x0.coord(0) + r / Rat(2), x0.coord(1));
  const auto ref =
      run_tolerant_singleton_game(scripted_strategy({first_pick}, true), x0, r, gamma);
  CHECK(ref.verified());
  CHECK(ref.refuting != first_pick);
  CHECK(ref.refuting == Point::plane(x0.coord(0), x0.coord(1) + r / Rat(2)));
  // every answer was 0 and the hidden hypothesis agrees on every query
  for (const auto& e : ref.transcript) {
    CHECK(e.label == 0);
    CHECK(e.point != ref.refuting);
  }
}

TEST_CASE("singleton game defeats seeded random strategies") {
  const Point x0 = Point::plane(Rat(-1), Rat(2));
  const Rat r(1, 4);
  const Rat gamma(1, 5);
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const auto ref = run_tolerant_singleton_game(
        random_singleton_strategy(seed, 50, x0, r), x0, r, gamma);
    CHECK(ref.verified());
    for (const auto& e : ref.transcript) CHECK(e.label == 0);
  }
}
