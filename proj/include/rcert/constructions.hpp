#ifndef RCERT_CONSTRUCTIONS_HPP
#define RCERT_CONSTRUCTIONS_HPP

#include <map>
#include <string>

#include "rcert/distribution.hpp"
#include "rcert/hypothesis.hpp"
#include "rcert/perturbation.hpp"

namespace rcert {

/// A paired-distribution instance whose error and margin oracles cannot tell
/// the two distributions apart while their robust-loss minimizers differ.
/// Expected facts are embedded as data and re-verified exactly at load.
struct ConstructionInstance {
  std::string name;
  std::vector<Point> domain;
  FiniteClass cls;
  std::vector<std::string> member_names;  // aligned with cls.members
  FiniteMapPerturbation u;
  DiscreteDistribution p1, p2;
  std::map<std::string, Rat> expected;
};

/// The 7-point instance: two hypotheses with identical error and margin
/// weights under both distributions, robust-loss minimizers h1 vs h2 with a
/// gap of exactly 1/6.
ConstructionInstance build_thm32();

/// The 8-point extension: adds a zero-error member h_r and a zero-margin
/// member h_c, with minimizers 2/12 vs 3/12 swapping across distributions.
ConstructionInstance build_thm36();

struct IndistinguishabilityReport {
  std::string instance;
  bool pass = false;
  std::vector<std::string> checks;    // human-readable, one per verified fact
  std::vector<std::string> failures;  // violated facts, empty on pass
  std::string minimizer_p1, minimizer_p2;
  Rat gap;
};

/// Verifies, with exact rationals: oracle indistinguishability across the
/// paired distributions, distinct robust-loss minimizers, the expected gap,
/// and every embedded fact. Throws nothing; failures are reported.
IndistinguishabilityReport verify_indistinguishability(const ConstructionInstance& ci);

}  // namespace rcert

#endif  // RCERT_CONSTRUCTIONS_HPP
