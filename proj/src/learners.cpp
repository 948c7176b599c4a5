#include "rcert/learners.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rcert/errors.hpp"

namespace rcert {

std::vector<Hypothesis> version_space(const FiniteClass& cls, const LabeledSample& s) {
  std::vector<Hypothesis> out;
  for (const auto& h : cls.members) {
    bool consistent = true;
    for (const auto& e : s)
      if (evaluate(h, e.point) != e.label) {
        consistent = false;
        break;
      }
    if (consistent) out.push_back(h);
  }
  return out;
}

namespace {

Hypothesis erm_finite(const FiniteClass& cls, const LabeledSample& s, const PerturbationType& u) {
  if (cls.members.empty()) throw ConfigError("ERM over an empty class");
  const Hypothesis* best = nullptr;
  Rat best_loss;
  for (const auto& h : cls.members) {
    const Rat loss = s.empty() ? Rat(0) : empirical_robust_loss(h, s, u);
    if (!best || loss < best_loss) {
      best = &h;
      best_loss = loss;
    }
  }
  return *best;
}

Hypothesis erm_threshold(const ThresholdFamily& fam, const LabeledSample& s,
                         const PerturbationType& u) {
  const auto* ball = std::get_if<BallPerturbation>(&u);
  if (!ball)
    throw ConfigError("threshold-family ERM needs a ball perturbation");
  if (s.empty()) return ThresholdHypothesis{Rat(0), fam.geq};

  std::set<Rat> breakpoints;
  for (const auto& e : s) {
    if (e.point.dimension() != 1) throw ConfigError("threshold-family ERM needs 1-d points");
    breakpoints.insert(e.point.coord(0) - ball->radius);
    breakpoints.insert(e.point.coord(0));
    breakpoints.insert(e.point.coord(0) + ball->radius);
  }
  // the robust loss is piecewise constant between breakpoints, so midpoints
  // of consecutive breakpoints plus sentinels past the extremes reach every
  // achievable value
  std::vector<Rat> bps(breakpoints.begin(), breakpoints.end());
  std::vector<Rat> candidates;
  candidates.push_back(bps.front() - Rat(1));
  for (size_t i = 0; i + 1 < bps.size(); ++i)
    candidates.push_back((bps[i] + bps[i + 1]) / Rat(2));
  candidates.push_back(bps.back() + Rat(1));

  ThresholdHypothesis best{candidates.front(), fam.geq};
  Rat best_loss = empirical_robust_loss(best, s, u);
  for (const auto& t : candidates) {
    const ThresholdHypothesis cand{t, fam.geq};
    const Rat loss = empirical_robust_loss(cand, s, u);
    if (loss < best_loss) {
      best = cand;
      best_loss = loss;
    }
  }
  return best;
}

}  // namespace

Hypothesis erm_robust(const HypothesisClass& cls, const LabeledSample& s,
                      const PerturbationType& u) {
  if (const auto* fin = std::get_if<FiniteClass>(&cls)) return erm_finite(*fin, s, u);
  if (const auto* fam = std::get_if<ThresholdFamily>(&cls)) return erm_threshold(*fam, s, u);
  throw ConfigError("ERM is implemented for finite classes and the threshold family");
}

Hypothesis ssl_margin_prune(const FiniteClass& cls, const LabeledSample& s,
                            const std::function<Rat(const Hypothesis&)>& margin_oracle) {
  for (const auto& h : version_space(cls, s))
    if (margin_oracle(h).is_zero()) return h;
  throw EmptyAfterPruning(
      "no version-space member has margin weight zero; robust realizability fails");
}

Hypothesis ssl_unlabeled_prune(const FiniteClass& cls, const LabeledSample& s,
                               const UnlabeledSample& t, const PerturbationType& u) {
  for (const auto& h : version_space(cls, s)) {
    bool hit = false;
    for (const auto& x : t)
      if (margin_membership(h, x, u)) {
        hit = true;
        break;
      }
    if (!hit) return h;
  }
  throw EmptyAfterPruning(
      "every version-space member has a margin point in the unlabeled sample");
}

Hypothesis extended_oracle_learner(const FiniteClass& cls, const LabeledSample& s,
                                   const IdealOracles& oracles) {
  const auto vs = version_space(cls, s);
  if (vs.empty()) throw EmptyAfterPruning("empty version space; 0/1-realizability fails");
  const Hypothesis& labeler = vs.front();
  const Hypothesis* best = nullptr;
  Rat best_score;
  for (const auto& h : cls.members) {
    const ExtendedMarginWeights w = oracles.extended(h, labeler);
    const Rat score = w.margin + w.disagreement - w.both;
    if (!best || score < best_score) {
      best = &h;
      best_score = score;
    }
  }
  return *best;
}

namespace {

// Union-find over points.
class PointComponents {
 public:
  void add(const Point& p) { parent_.emplace(p, p); }
  bool known(const Point& p) const { return parent_.count(p) != 0; }

  Point find(const Point& p) {
    Point root = p;
    while (!(parent_.at(root) == root)) root = parent_.at(root);
    Point cur = p;
    while (!(parent_.at(cur) == root)) {
      Point next = parent_.at(cur);
      parent_.at(cur) = root;
      cur = next;
    }
    return root;
  }

  void unite(const Point& a, const Point& b) {
    const Point ra = find(a), rb = find(b);
    if (!(ra == rb)) parent_.at(ra) = rb;
  }

 private:
  std::map<Point, Point> parent_;
};

}  // namespace

Hypothesis cluster_learner(const FiniteClass& cls, const LabeledSample& s,
                           const std::vector<Point>& support, const FiniteMapPerturbation& u) {
  if (cls.members.empty()) throw ConfigError("cluster learner over an empty class");
  const auto* first_tab = std::get_if<TabularHypothesis>(&cls.members.front());
  if (!first_tab) throw ConfigError("cluster learner needs tabular hypotheses");
  std::vector<Point> domain;
  for (const auto& [p, l] : first_tab->labels) domain.push_back(p);

  // clusters: connected components of support points and everything their
  // perturbation sets reach
  PointComponents comp;
  for (const auto& x : support) {
    if (!comp.known(x)) comp.add(x);
    for (const auto& z : neighbors(u, x)) {
      if (!comp.known(z)) comp.add(z);
      comp.unite(x, z);
    }
  }

  const std::set<Point> support_set(support.begin(), support.end());

  // the sample itself must be label-homogeneous per cluster, else no
  // homogeneous extension can be consistent
  std::map<Point, Label> sample_cluster_label;
  for (const auto& e : s) {
    if (!comp.known(e.point)) continue;
    const Point root = comp.find(e.point);
    const auto it = sample_cluster_label.find(root);
    if (it == sample_cluster_label.end())
      sample_cluster_label.emplace(root, e.label);
    else if (it->second != e.label)
      throw HeterogeneousCluster("sample labels disagree within one cluster");
  }

  // prune the version space to members homogeneous on each cluster's
  // support part
  const auto vs = version_space(cls, s);
  const Hypothesis* chosen = nullptr;
  for (const auto& h : vs) {
    std::map<Point, Label> cluster_label;
    bool homogeneous = true;
    for (const auto& x : support) {
      const Point root = comp.find(x);
      const Label l = evaluate(h, x);
      const auto it = cluster_label.find(root);
      if (it == cluster_label.end())
        cluster_label.emplace(root, l);
      else if (it->second != l) {
        homogeneous = false;
        break;
      }
    }
    if (homogeneous) {
      chosen = &h;
      break;
    }
  }
  if (!chosen)
    throw EmptyAfterPruning("no version-space member labels the clusters homogeneously");

  // extend homogeneously over full clusters; untouched points keep the
  // chosen member's labels
  std::map<Point, Label> cluster_label;
  for (const auto& x : support) cluster_label[comp.find(x)] = evaluate(*chosen, x);

  TabularHypothesis out;
  for (const auto& x : domain) {
    if (comp.known(x)) {
      const Point root = comp.find(x);
      const auto it = cluster_label.find(root);
      out.labels[x] = it != cluster_label.end() ? it->second : evaluate(*chosen, x);
    } else {
      out.labels[x] = evaluate(*chosen, x);
    }
  }
  // points reached by perturbations but outside the declared domain still
  // need labels for the margin test to stay total
  for (const auto& x : support)
    for (const auto& z : neighbors(u, x))
      if (!out.labels.count(z)) out.labels[z] = cluster_label.at(comp.find(z));
  return out;
}

}  // namespace rcert
