#include "rcert/compression.hpp"

#include <algorithm>

#include "rcert/errors.hpp"

namespace rcert {

std::vector<LabeledExample> threshold_compress(const LabeledSample& t) {
  std::optional<LabeledExample> max0, min1;
  for (const auto& e : t) {
    if (e.point.dimension() != 1)
      throw ConfigError("threshold compressor needs 1-d points");
    if (e.label == 0) {
      if (!max0 || e.point.coord(0) > max0->point.coord(0)) max0 = e;
    } else {
      if (!min1 || e.point.coord(0) < min1->point.coord(0)) min1 = e;
    }
  }
  if (max0 && min1 && !(max0->point.coord(0) < min1->point.coord(0)))
    throw NonRealizableSample("no threshold separates the sample: max 0-point " +
                              max0->point.str() + " is not below min 1-point " +
                              min1->point.str());
  std::vector<LabeledExample> kept;
  if (max0) kept.push_back(*max0);
  if (min1) kept.push_back(*min1);
  return kept;
}

Hypothesis threshold_decompress(const std::vector<LabeledExample>& kept) {
  std::optional<Rat> max0, min1;
  for (const auto& e : kept) {
    if (e.label == 0)
      max0 = max0 ? max(*max0, e.point.coord(0)) : e.point.coord(0);
    else
      min1 = min1 ? min(*min1, e.point.coord(0)) : e.point.coord(0);
  }
  if (max0 && min1) return ThresholdHypothesis{(*max0 + *min1) / Rat(2), true};
  if (min1) return ThresholdHypothesis{*min1, true};       // all ones: flip just at the extreme
  if (max0) return ThresholdHypothesis{*max0 + Rat(1), true};  // all zeros: beyond the extreme
  return ThresholdHypothesis{Rat(0), true};
}

CompressedSet compress_robust(const LabeledSample& s, BudgetedLabelOracle& oracle,
                              const Adversary& adv, const PerturbationType& u) {
  const auto* ball = std::get_if<BallPerturbation>(&u);
  CompressedSet cs;
  cs.class_id = "threshold";
  cs.radius = ball ? ball->radius : Rat(0);

  if (s.empty()) return cs;

  const AttackResult attack = adv.attack(oracle, s, u);

  // the inflated sample: S plus every query, labeled by the oracle
  LabeledSample inflated = s;
  for (const auto& per : attack.per_source_queries)
    inflated.insert(inflated.end(), per.begin(), per.end());

  for (const auto& kept : threshold_compress(inflated)) {
    CompressedEntry entry;
    const bool in_s = std::any_of(s.begin(), s.end(), [&](const LabeledExample& e) {
      return e.point == kept.point && e.label == kept.label;
    });
    if (in_s) {
      entry.point = kept.point;
      entry.label = kept.label;
      cs.entries.push_back(std::move(entry));
      continue;
    }
    bool rewritten = false;
    for (size_t i = 0; i < s.size() && !rewritten; ++i) {
      const auto& queries = attack.per_source_queries[i];
      for (size_t rank = 0; rank < queries.size(); ++rank) {
        if (queries[rank].point == kept.point) {
          entry.point = s[i].point;
          entry.label = s[i].label;
          QueryRewrite rw;
          rw.rank = rank;
          for (const auto& q : queries) rw.neighbor_labels.push_back(q.label);
          entry.rewrite = std::move(rw);
          rewritten = true;
          break;
        }
      }
    }
    if (!rewritten)
      throw PropernessViolation("kept point " + kept.point.str() +
                                " has no source among the adversary's queries");
    cs.entries.push_back(std::move(entry));
  }
  return cs;
}

Hypothesis decompress_robust(const CompressedSet& cs, const Adversary& adv,
                             const PerturbationType& u) {
  std::vector<LabeledExample> kept;
  for (const auto& entry : cs.entries) {
    if (!entry.rewrite) {
      kept.push_back({entry.point, entry.label});
      continue;
    }
    const auto plan = adv.planned_queries(entry.point, u);
    const auto& rw = *entry.rewrite;
    if (rw.rank >= plan.size() || rw.neighbor_labels.size() != plan.size())
      throw ConfigError("malformed side info: rank " + std::to_string(rw.rank) + " with " +
                        std::to_string(rw.neighbor_labels.size()) + " label bits for " +
                        std::to_string(plan.size()) + " planned queries");
    kept.push_back({plan[rw.rank], rw.neighbor_labels[rw.rank]});
  }
  if (cs.class_id != "threshold")
    throw ConfigError("unknown compression class id: " + cs.class_id);
  return threshold_decompress(kept);
}

Hypothesis compression_learner(const LabeledSample& s, const PerturbationType& u,
                               BudgetedLabelOracle& oracle, const Adversary& adv) {
  const CompressedSet cs = compress_robust(s, oracle, adv, u);
  return decompress_robust(cs, adv, u);
}

}  // namespace rcert
