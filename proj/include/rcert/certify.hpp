#ifndef RCERT_CERTIFY_HPP
#define RCERT_CERTIFY_HPP

#include <functional>
#include <optional>

#include "rcert/oracle.hpp"
#include "rcert/witness.hpp"

namespace rcert {

enum class CertificationMode { ExactWitness, Tolerant };

struct CertificationReport {
  Rat estimate;
  uint64_t m_used = 0;
  uint64_t q_used = 0;
  double eps = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  CertificationMode mode = CertificationMode::ExactWitness;
};

/// Certifies the robust loss by querying, per sample point, the point itself
/// and its witness set; a point counts as lost if it is misclassified or the
/// witness decision reports margin. With sound witness sets the estimate is
/// exactly the empirical robust loss of the sample.
CertificationReport certify_witness(BudgetedLabelOracle& oracle, const UnlabeledSample& sample,
                                    const std::function<WitnessSet(const Point&)>& witness_fn,
                                    const std::vector<Label>& true_labels, double eps,
                                    double delta);

/// L1-ball certifier for hidden halfspaces: queries each sample point and the
/// four axis corners of its L1 ball (radius r); flags margin iff any corner
/// label differs. Exactly 5 queries per point.
CertificationReport certify_halfspace_l1(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                                         const Rat& radius, double eps, double delta);

/// Vertex count for the tolerant certifier's polygon:
/// k = max(3, ceil(pi / arccos(1/(1+gamma)))). A regular k-gon with
/// circumradius 1+gamma then has apothem >= 1, so scaled by r it sits
/// between the r-ball and the r(1+gamma)-ball.
int tolerant_polygon_vertices(double gamma);

/// Tolerant L2 certifier for hidden halfspaces: queries each sample point
/// plus the k vertices of the circumradius-r(1+gamma) polygon (vertex 0 at
/// angle 0); flags margin iff any vertex label differs. q = m(k+1).
CertificationReport certify_tolerant_l2(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                                        const Rat& radius, double gamma, double eps, double delta);

/// The polygon vertex offsets (relative to the center) used by the tolerant
/// certifier, as exact points equal to their double-precision placements.
std::vector<Point> tolerant_polygon_offsets(const Rat& radius, double gamma);

}  // namespace rcert

#endif  // RCERT_CERTIFY_HPP
