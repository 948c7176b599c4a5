#include "rcert/distribution.hpp"

#include <set>

#include "rcert/errors.hpp"
#include "rcert/rng.hpp"

namespace rcert {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  Rat total;
  std::set<Point> seen;
  for (const auto& a : atoms_) {
    if (a.weight.sign() < 0) throw ConfigError("negative atom weight " + a.weight.str());
    if (a.label != 0 && a.label != 1) throw ConfigError("atom label must be 0 or 1");
    if (!seen.insert(a.point).second)
      throw ConfigError("duplicate atom point " + a.point.str());
    total += a.weight;
  }
  if (total != Rat(1))
    throw ConfigError("atom weights sum to " + total.str() + ", expected 1/1");
}

UnlabeledSample points_of(const LabeledSample& s) {
  UnlabeledSample out;
  out.reserve(s.size());
  for (const auto& e : s) out.push_back(e.point);
  return out;
}

LabeledSample sample(const DiscreteDistribution& p, size_t m, uint64_t seed) {
  if (m == 0) throw ConfigError("sample size must be at least 1");
  if (p.size() == 0) throw ConfigError("sampling from an empty distribution");
  // Cumulative weights once; each draw compares an exact dyadic uniform
  // against them.
  std::vector<Rat> cum;
  cum.reserve(p.size());
  Rat run;
  for (const auto& a : p.atoms()) {
    run += a.weight;
    cum.push_back(run);
  }
  SplitMix64 rng(seed);
  LabeledSample out;
  out.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    const Rat u = rng.unit_rational();
    size_t lo = 0, hi = cum.size() - 1;
    while (lo < hi) {
      const size_t mid = (lo + hi) / 2;
      if (u < cum[mid])
        hi = mid;
      else
        lo = mid + 1;
    }
    out.push_back({p.atoms()[lo].point, p.atoms()[lo].label});
  }
  return out;
}

}  // namespace rcert
