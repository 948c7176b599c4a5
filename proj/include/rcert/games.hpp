#ifndef RCERT_GAMES_HPP
#define RCERT_GAMES_HPP

#include <functional>
#include <optional>
#include <variant>

#include "rcert/distribution.hpp"
#include "rcert/geometry.hpp"
#include "rcert/point.hpp"

namespace rcert {

// Adaptive answering oracles that defeat every deterministic certifier:
// the dual-arrangement game (halfspaces under the L2 unit ball) and the
// tolerant singleton game. Both produce self-verifying refutations.

struct NextQuery {
  Point z;
};

struct Verdict {
  bool robust;  // true = the certifier claims the robust loss is low
};

using StrategyAction = std::variant<NextQuery, Verdict>;

/// A deterministic certifier strategy: same transcript, same action.
struct CertifierStrategy {
  std::function<StrategyAction(const std::vector<LabeledExample>&)> act;
  uint64_t max_queries = 0;
};

enum class RefutingKind { DualPoint, SingletonLocation };

struct Refutation {
  std::vector<LabeledExample> transcript;
  bool verdict_robust = false;
  RefutingKind kind = RefutingKind::DualPoint;
  Point refuting;  // dual point (a,b), or the singleton location p
  Rat actual_loss_inner;              // robust loss under U
  std::optional<Rat> actual_loss_outer;  // robust loss under V (tolerant game)
  bool replay_ok = false;    // refuting hypothesis reproduces every answer
  bool contradicts = false;  // and its true loss contradicts the verdict
  bool verified() const { return replay_ok && contradicts; }
};

/// Plays the hidden-halfspace game: distribution is a point mass at the
/// origin with label 1, perturbations are the closed L2 unit ball, and the
/// hidden hypothesis is h_{(a,b)}(z) = 1{a·z1 + b·z2 + 1 > 0} for a dual
/// point (a,b) kept inside a cell that always crosses the unit circle.
/// Whatever the strategy decides, an interior dual point refutes it.
Refutation run_l2_game(const CertifierStrategy& strategy);

/// Plays the singleton game {h_p = 1{x = p}} against a tolerant certifier
/// for U = ball(r), V = ball(r(1+gamma)) at the point mass (x0, label 0):
/// answers 0 everywhere, then places p on an unqueried grid point inside U
/// or beyond V, whichever contradicts the verdict.
Refutation run_tolerant_singleton_game(const CertifierStrategy& strategy, const Point& x0,
                                       const Rat& radius, const Rat& gamma);

/// Strategy that replays a fixed query list and ends with a fixed verdict.
CertifierStrategy scripted_strategy(std::vector<Point> queries, bool verdict);

/// Seeded deterministic strategy for the L2 game: rational queries with
/// small denominators, folded over the answers received so far.
CertifierStrategy random_l2_strategy(uint64_t seed, uint64_t max_queries);

/// Seeded deterministic strategy for the singleton game: queries near x0 at
/// the scale of the radius.
CertifierStrategy random_singleton_strategy(uint64_t seed, uint64_t max_queries, const Point& x0,
                                            const Rat& radius);

}  // namespace rcert

#endif  // RCERT_GAMES_HPP
