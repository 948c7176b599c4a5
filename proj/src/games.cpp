#include "rcert/games.hpp"

#include <algorithm>

#include "rcert/errors.hpp"
#include "rcert/rng.hpp"

namespace rcert {

namespace {

constexpr uint64_t kMaxStrategyQueries = 10000;

Vec2 to_vec(const Point& p) {
  if (p.is_symbolic() || p.dimension() != 2)
    throw ConfigError("game query points must be 2-d numeric, got " + p.str());
  return {p.coord(0), p.coord(1)};
}

Rat squared_norm(const Vec2& p) { return p.x * p.x + p.y * p.y; }

// Vertex closest to the unit circle by |norm^2 - 1|, ties lexicographic.
Vec2 circle_nearest_vertex(const Cell& cell) {
  const Vec2* best = nullptr;
  Rat best_gap;
  for (const auto& v : cell.vertices()) {
    const Rat gap = (squared_norm(v) - Rat(1)).abs();
    if (!best || gap < best_gap || (gap == best_gap && v < *best)) {
      best = &v;
      best_gap = gap;
    }
  }
  if (!best) throw InvariantViolation("cell with no vertices");
  return *best;
}

Vec2 lex_min_vertex(const Cell& cell) {
  return *std::min_element(cell.vertices().begin(), cell.vertices().end());
}

// First point of the segment walk base -> target satisfying pred, never the
// endpoint itself. The predicates below are open conditions that hold at or
// arbitrarily near the target, so the walk terminates.
template <typename Pred>
Vec2 walk_toward(const Vec2& base, const Vec2& target, Pred pred) {
  Rat t(0);
  Rat step(1, 2);
  for (int i = 0; i < 256; ++i) {
    const Vec2 p{base.x + t * (target.x - base.x), base.y + t * (target.y - base.y)};
    if (pred(p)) return p;
    t += step;
    step /= Rat(2);
  }
  throw InvariantViolation("interior point walk failed to converge");
}

// Interior dual point with squared norm on the requested side of 1. The cell
// must straddle the unit circle.
Vec2 pick_interior_dual_point(const Cell& cell, bool norm_above_one) {
  const Vec2 origin{Rat(0), Rat(0)};
  Vec2 target;
  if (norm_above_one) {
    const Vec2* best = nullptr;
    for (const auto& v : cell.vertices())
      if (!best || squared_norm(v) > squared_norm(*best)) best = &v;
    target = *best;
  } else {
    target = cell.contains(origin) ? origin : cell.nearest_point_to_origin();
  }
  Vec2 base = cell.centroid();
  if (base == target) {
    const Vec2& v0 = cell.vertices().front();
    base = {(base.x + v0.x) / Rat(2), (base.y + v0.y) / Rat(2)};
  }
  if (norm_above_one)
    return walk_toward(base, target, [](const Vec2& p) { return squared_norm(p) > Rat(1); });
  return walk_toward(base, target, [&](const Vec2& p) {
    return squared_norm(p) < Rat(1) && !(p == origin);
  });
}

Label dual_hypothesis_label(const Vec2& dual, const Vec2& z) {
  // h_{(a,b)}(z) = 1{a z1 + b z2 + 1 > 0}; the origin is always labeled 1
  return (dual.x * z.x + dual.y * z.y + Rat(1)).sign() > 0 ? 1 : 0;
}

void check_declared_budget(const CertifierStrategy& strategy) {
  if (strategy.max_queries > kMaxStrategyQueries)
    throw ConfigError("strategy declares more than " + std::to_string(kMaxStrategyQueries) +
                      " queries");
  if (!strategy.act) throw ConfigError("strategy without a callback");
}

}  // namespace

Refutation run_l2_game(const CertifierStrategy& strategy) {
  check_declared_budget(strategy);
  Cell cell = Cell::bounding_box();
  std::vector<LabeledExample> transcript;

  while (true) {
    const StrategyAction action = strategy.act(transcript);
    if (const auto* q = std::get_if<NextQuery>(&action)) {
      if (transcript.size() >= strategy.max_queries)
        throw ContractViolation("strategy_budget", "strategy queried past its declared budget");
      const Vec2 z = to_vec(q->z);
      if (z.x.is_zero() && z.y.is_zero()) {
        // the origin's dual "line" is empty; its label is 1 under every
        // hypothesis in play, and the cell is untouched
        transcript.push_back({q->z, 1});
        continue;
      }
      const Line line = dual_line(z);
      auto [neg, pos] = split_cell(cell, line);
      const bool neg_ok = neg && straddles_unit_circle(*neg);
      const bool pos_ok = pos && straddles_unit_circle(*pos);
      if (!neg_ok && !pos_ok)
        throw InvariantViolation("no straddling sub-cell after a split");

      bool choose_neg;
      if (neg_ok != pos_ok) {
        choose_neg = neg_ok;
      } else {
        // both straddle: prefer the side holding the previous cell's
        // circle-nearest vertex; a vertex on the line falls back to the
        // lexicographically smaller sub-cell
        const int side = line.eval(circle_nearest_vertex(cell)).sign();
        if (side != 0)
          choose_neg = side < 0;
        else
          choose_neg = lex_min_vertex(*neg) < lex_min_vertex(*pos);
      }
      cell = choose_neg ? *neg : *pos;
      transcript.push_back({q->z, choose_neg ? 0 : 1});
      continue;
    }

    const bool verdict_robust = std::get<Verdict>(action).robust;
    // "robust" claims low loss; refute with a boundary that meets the unit
    // ball (norm^2 > 1), and vice versa
    const Vec2 dual = pick_interior_dual_point(cell, verdict_robust);

    Refutation ref;
    ref.transcript = transcript;
    ref.verdict_robust = verdict_robust;
    ref.kind = RefutingKind::DualPoint;
    ref.refuting = Point::plane(dual.x, dual.y);
    const bool meets_ball = squared_norm(dual) >= Rat(1);
    ref.actual_loss_inner = meets_ball ? Rat(1) : Rat(0);
    ref.replay_ok = true;
    for (const auto& e : transcript)
      if (dual_hypothesis_label(dual, to_vec(e.point)) != e.label) ref.replay_ok = false;
    ref.contradicts = verdict_robust == meets_ball;
    if (!ref.verified())
      throw InvariantViolation("l2 game produced an unverifiable refutation");
    return ref;
  }
}

Refutation run_tolerant_singleton_game(const CertifierStrategy& strategy, const Point& x0,
                                       const Rat& radius, const Rat& gamma) {
  check_declared_budget(strategy);
  const Vec2 center = to_vec(x0);
  if (!(radius > Rat(0)) || !(gamma > Rat(0)))
    throw ConfigError("singleton game needs positive radius and gamma");

  std::vector<LabeledExample> transcript;
  std::vector<Point> queried;
  while (true) {
    const StrategyAction action = strategy.act(transcript);
    if (const auto* q = std::get_if<NextQuery>(&action)) {
      if (transcript.size() >= strategy.max_queries)
        throw ContractViolation("strategy_budget", "strategy queried past its declared budget");
      to_vec(q->z);  // dimension check
      transcript.push_back({q->z, 0});
      queried.push_back(q->z);
      continue;
    }

    const bool verdict_robust = std::get<Verdict>(action).robust;
    auto is_queried = [&](const Point& p) {
      return std::find(queried.begin(), queried.end(), p) != queried.end();
    };

    Point location;
    if (verdict_robust) {
      // claimed low: hide p inside U(x0) \ {x0}; grid over offsets
      // (r*a/q, r*b/q), refined until a free point appears
      bool found = false;
      for (long q_den = 2; !found; ++q_den) {
        std::vector<std::pair<long, long>> offs;
        for (long a = -q_den; a <= q_den; ++a)
          for (long b = -q_den; b <= q_den; ++b)
            if (a * a + b * b > 0 && a * a + b * b <= q_den * q_den) offs.emplace_back(a, b);
        std::sort(offs.begin(), offs.end(), [](const auto& l, const auto& r) {
          const long sl = l.first * l.first + l.second * l.second;
          const long sr = r.first * r.first + r.second * r.second;
          if (sl != sr) return sl < sr;
          if (l.first != r.first) return l.first > r.first;
          return l.second > r.second;
        });
        for (const auto& [a, b] : offs) {
          const Point cand = Point::plane(center.x + radius * Rat(a, q_den),
                                          center.y + radius * Rat(b, q_den));
          if (!is_queried(cand)) {
            location = cand;
            found = true;
            break;
          }
        }
      }
    } else {
      // claimed high: hide p beyond V(x0)
      for (long n = 1;; ++n) {
        const Point cand =
            Point::plane(center.x + radius * (Rat(1) + gamma) + Rat(n), center.y);
        if (!is_queried(cand)) {
          location = cand;
          break;
        }
      }
    }

    Refutation ref;
    ref.transcript = transcript;
    ref.verdict_robust = verdict_robust;
    ref.kind = RefutingKind::SingletonLocation;
    ref.refuting = location;
    const Vec2 p = to_vec(location);
    const Rat d2 = (p.x - center.x) * (p.x - center.x) + (p.y - center.y) * (p.y - center.y);
    const bool in_u = d2 <= radius * radius;
    const Rat outer = radius * (Rat(1) + gamma);
    const bool in_v = d2 <= outer * outer;
    ref.actual_loss_inner = in_u ? Rat(1) : Rat(0);
    ref.actual_loss_outer = in_v ? Rat(1) : Rat(0);
    ref.replay_ok = true;
    for (const auto& e : transcript)
      if ((e.point == location ? 1 : 0) != e.label) ref.replay_ok = false;
    // any tolerant estimate within eps < 1/2 of the claimed extreme misses
    // [R^U - eps, R^V + eps] for the realized hypothesis
    ref.contradicts = verdict_robust ? (in_u && in_v) : (!in_u && !in_v);
    if (!ref.verified())
      throw InvariantViolation("singleton game produced an unverifiable refutation");
    return ref;
  }
}

CertifierStrategy scripted_strategy(std::vector<Point> queries, bool verdict) {
  CertifierStrategy s;
  s.max_queries = queries.size();
  s.act = [queries = std::move(queries), verdict](
              const std::vector<LabeledExample>& transcript) -> StrategyAction {
    if (transcript.size() < queries.size()) return NextQuery{queries[transcript.size()]};
    return Verdict{verdict};
  };
  return s;
}

namespace {

uint64_t fold_transcript(uint64_t seed, const std::vector<LabeledExample>& transcript) {
  uint64_t h = seed;
  for (const auto& e : transcript) {
    h = h * 0x100000001B3ULL + static_cast<uint64_t>(e.label + 1);
    h ^= h >> 29;
  }
  return h;
}

}  // namespace

CertifierStrategy random_l2_strategy(uint64_t seed, uint64_t max_queries) {
  CertifierStrategy s;
  SplitMix64 pick(seed);
  const uint64_t budget = max_queries == 0 ? 0 : pick.below(max_queries + 1);
  s.max_queries = max_queries;
  s.act = [seed, budget](const std::vector<LabeledExample>& transcript) -> StrategyAction {
    const uint64_t h = fold_transcript(seed, transcript);
    if (transcript.size() >= budget) return Verdict{(h & 2) != 0};
    SplitMix64 g(h ^ (transcript.size() + 1));
    const long den = 1 + static_cast<long>(g.below(12));
    const long n1 = g.range(-3 * den, 3 * den);
    const long n2 = g.range(-3 * den, 3 * den);
    return NextQuery{Point::plane(Rat(n1, den), Rat(n2, den))};
  };
  return s;
}

CertifierStrategy random_singleton_strategy(uint64_t seed, uint64_t max_queries, const Point& x0,
                                            const Rat& radius) {
  CertifierStrategy s;
  SplitMix64 pick(seed);
  const uint64_t budget = max_queries == 0 ? 0 : pick.below(max_queries + 1);
  const Vec2 center = to_vec(x0);
  s.max_queries = max_queries;
  s.act = [seed, budget, center,
           radius](const std::vector<LabeledExample>& transcript) -> StrategyAction {
    const uint64_t h = fold_transcript(seed, transcript);
    if (transcript.size() >= budget) return Verdict{(h & 2) != 0};
    SplitMix64 g(h ^ (transcript.size() + 1));
    const long den = 2 + static_cast<long>(g.below(11));
    const long n1 = g.range(-2 * den, 2 * den);
    const long n2 = g.range(-2 * den, 2 * den);
    return NextQuery{Point::plane(center.x + radius * Rat(n1, den),
                                  center.y + radius * Rat(n2, den))};
  };
  return s;
}

}  // namespace rcert
