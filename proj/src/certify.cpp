#include "rcert/certify.hpp"

#include <cmath>

#include "rcert/bounds.hpp"
#include "rcert/errors.hpp"

namespace rcert {

CertificationReport certify_witness(BudgetedLabelOracle& oracle, const UnlabeledSample& sample,
                                    const std::function<WitnessSet(const Point&)>& witness_fn,
                                    const std::vector<Label>& true_labels, double eps,
                                    double delta) {
  if (sample.size() != true_labels.size())
    throw ConfigError("sample and label vectors differ in length");
  if (static_cast<int64_t>(sample.size()) < hoeffding_size(eps, delta))
    throw ConfigError("sample of " + std::to_string(sample.size()) +
                      " is below hoeffding_size(eps, delta) = " +
                      std::to_string(hoeffding_size(eps, delta)));
  long flagged = 0;
  for (size_t i = 0; i < sample.size(); ++i) {
    const Point& x = sample[i];
    const Label at_x = oracle.query(x);
    const WitnessSet w = witness_fn(x);
    std::map<Point, Label> labels;
    labels[x] = at_x;
    for (const auto& p : w.points())
      if (!labels.count(p)) labels[p] = oracle.query(p);
    if (at_x != true_labels[i] || w.decide(at_x, labels)) ++flagged;
  }
  CertificationReport rep;
  rep.estimate = Rat(flagged, static_cast<long>(sample.size()));
  rep.m_used = sample.size();
  rep.q_used = oracle.used();
  rep.eps = eps;
  rep.delta = delta;
  rep.mode = CertificationMode::ExactWitness;
  return rep;
}

CertificationReport certify_halfspace_l1(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                                         const Rat& radius, double eps, double delta) {
  if (sample.empty()) throw ConfigError("empty sample");
  long flagged = 0;
  for (const auto& e : sample) {
    if (e.point.dimension() != 2)
      throw ConfigError("L1-corner certifier needs 2-d points");
    const Rat& x = e.point.coord(0);
    const Rat& y = e.point.coord(1);
    const Label at_x = oracle.query(e.point);
    // the four corners of the L1 ball of radius r
    const Point corners[4] = {
        Point::plane(x, y + radius), Point::plane(x + radius, y),
        Point::plane(x - radius, y), Point::plane(x, y - radius)};
    bool margin = false;
    for (const auto& c : corners)
      if (oracle.query(c) != at_x) margin = true;
    if (at_x != e.label || margin) ++flagged;
  }
  CertificationReport rep;
  rep.estimate = Rat(flagged, static_cast<long>(sample.size()));
  rep.m_used = sample.size();
  rep.q_used = oracle.used();
  rep.eps = eps;
  rep.delta = delta;
  rep.mode = CertificationMode::ExactWitness;
  return rep;
}

int tolerant_polygon_vertices(double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("gamma must be positive");
  const long double ratio =
      static_cast<long double>(M_PI) / std::acos(1.0L / (1.0L + static_cast<long double>(gamma)));
  // nudge guards FP noise when the ratio is an exact integer (gamma = 1)
  const long double k = std::ceil(ratio - 1e-9L);
  return std::max(3, static_cast<int>(k));
}

std::vector<Point> tolerant_polygon_offsets(const Rat& radius, double gamma) {
  const int k = tolerant_polygon_vertices(gamma);
  const double big_r = radius.to_double() * (1.0 + gamma);
  std::vector<Point> out;
  out.reserve(k);
  for (int j = 0; j < k; ++j) {
    const double angle = 2.0 * M_PI * j / k;
    // doubles converted exactly to dyadic rationals; everything downstream
    // is exact on these placements
    out.push_back(Point::plane(Rat(mpq_class(big_r * std::cos(angle))),
                               Rat(mpq_class(big_r * std::sin(angle)))));
  }
  return out;
}

CertificationReport certify_tolerant_l2(BudgetedLabelOracle& oracle, const LabeledSample& sample,
                                        const Rat& radius, double gamma, double eps,
                                        double delta) {
  if (sample.empty()) throw ConfigError("empty sample");
  const auto offsets = tolerant_polygon_offsets(radius, gamma);
  long flagged = 0;
  for (const auto& e : sample) {
    if (e.point.dimension() != 2)
      throw ConfigError("tolerant certifier needs 2-d points");
    const Label at_x = oracle.query(e.point);
    bool margin = false;
    for (const auto& off : offsets) {
      const Point v = Point::plane(e.point.coord(0) + off.coord(0),
                                   e.point.coord(1) + off.coord(1));
      if (oracle.query(v) != at_x) margin = true;
    }
    if (at_x != e.label || margin) ++flagged;
  }
  CertificationReport rep;
  rep.estimate = Rat(flagged, static_cast<long>(sample.size()));
  rep.m_used = sample.size();
  rep.q_used = oracle.used();
  rep.eps = eps;
  rep.delta = delta;
  rep.gamma = gamma;
  rep.mode = CertificationMode::Tolerant;
  return rep;
}

}  // namespace rcert
