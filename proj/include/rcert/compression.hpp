#ifndef RCERT_COMPRESSION_HPP
#define RCERT_COMPRESSION_HPP

#include <optional>

#include "rcert/adversary.hpp"

namespace rcert {

/// A kept point that is not itself a sample point is encoded against a
/// source sample point: the rank of the kept point within the adversary's
/// deterministic query order for the source, plus the labels of all those
/// queries as bits.
struct QueryRewrite {
  size_t rank = 0;
  std::vector<Label> neighbor_labels;
};

struct CompressedEntry {
  Point point;  // a member of the compressed core, or the source sample point
  Label label = 0;
  std::optional<QueryRewrite> rewrite;
};

struct CompressedSet {
  std::vector<CompressedEntry> entries;
  std::string class_id;  // decoder family, e.g. "threshold"
  Rat radius;            // ball radius of the perturbation type
};

/// Proper (non-robust) compressor for the fixed-direction threshold family:
/// keeps the largest 0-labeled and smallest 1-labeled points (at most two).
/// Throws NonRealizableSample when no threshold separates the labels.
std::vector<LabeledExample> threshold_compress(const LabeledSample& t);

/// Decoder for threshold_compress: the midpoint of a kept 0/1 pair, or a
/// threshold placed at/below the single kept extreme. Zero binary loss on
/// every sample the pair was built from.
Hypothesis threshold_decompress(const std::vector<LabeledExample>& kept);

/// Robust compression: inflate S with the adversary's queries (labeled via
/// the oracle), compress the inflated set, and rewrite kept points outside S
/// against their source sample points. The sample's labels must agree with
/// the oracle's hypothesis.
CompressedSet compress_robust(const LabeledSample& s, BudgetedLabelOracle& oracle,
                              const Adversary& adv, const PerturbationType& u);

/// Oracle-free decoding: re-simulates the adversary's query order per source
/// from the stored label bits, recovers the kept points by rank, and decodes.
Hypothesis decompress_robust(const CompressedSet& cs, const Adversary& adv,
                             const PerturbationType& u);

/// Compress-then-decompress robust learner. The returned hypothesis has the
/// same robust loss as the hidden one on every sample point, hence zero
/// empirical robust loss under robust realizability.
Hypothesis compression_learner(const LabeledSample& s, const PerturbationType& u,
                               BudgetedLabelOracle& oracle, const Adversary& adv);

}  // namespace rcert

#endif  // RCERT_COMPRESSION_HPP
