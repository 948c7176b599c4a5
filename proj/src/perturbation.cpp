#include "rcert/perturbation.hpp"

#include <algorithm>

#include "rcert/errors.hpp"

namespace rcert {

PerturbationType make_restriction_pair(PerturbationType inner, PerturbationType outer) {
  if (std::holds_alternative<RestrictionPairPerturbation>(inner) ||
      std::holds_alternative<RestrictionPairPerturbation>(outer))
    throw ConfigError("nested restriction pairs are not supported");
  RestrictionPairPerturbation p;
  p.inner = std::make_shared<PerturbationTypeBox>(PerturbationTypeBox{std::move(inner)});
  p.outer = std::make_shared<PerturbationTypeBox>(PerturbationTypeBox{std::move(outer)});
  return p;
}

const PerturbationType& restriction_inner(const RestrictionPairPerturbation& p) {
  return p.inner->value;
}

const PerturbationType& restriction_outer(const RestrictionPairPerturbation& p) {
  return p.outer->value;
}

std::vector<Point> neighbors(const FiniteMapPerturbation& u, const Point& x) {
  std::vector<Point> out;
  auto it = u.map.find(x);
  if (it != u.map.end()) out = it->second;
  out.push_back(x);  // x ∈ U(x) always
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Exact test d(x,z) <= r for the supported norms. L2 compares squares.
bool ball_contains(const BallPerturbation& b, const Point& x, const Point& z) {
  if (x.is_symbolic() || z.is_symbolic())
    throw ContractViolation("dimension", "ball perturbation over symbolic points");
  if (x.dimension() != z.dimension())
    throw ContractViolation("dimension", "ball membership across dimensions");
  std::vector<Rat> diff;
  diff.reserve(x.dimension());
  for (size_t i = 0; i < x.dimension(); ++i) diff.push_back((x.coord(i) - z.coord(i)).abs());
  switch (b.norm) {
    case Norm::L1: {
      Rat s;
      for (const auto& d : diff) s += d;
      return s <= b.radius;
    }
    case Norm::Linf: {
      Rat m;
      for (const auto& d : diff) m = max(m, d);
      return m <= b.radius;
    }
    case Norm::L2: {
      Rat s;
      for (const auto& d : diff) s += d * d;
      return s <= b.radius * b.radius;
    }
  }
  throw InvariantViolation("unknown norm");
}

}  // namespace

bool perturbation_contains(const PerturbationType& u, const Point& x, const Point& z) {
  if (const auto* fm = std::get_if<FiniteMapPerturbation>(&u)) {
    const auto nb = neighbors(*fm, x);
    return std::binary_search(nb.begin(), nb.end(), z);
  }
  if (const auto* b = std::get_if<BallPerturbation>(&u)) return ball_contains(*b, x, z);
  throw ConfigError("membership test on a restriction pair; use its components");
}

void validate_restriction(const PerturbationType& u, const PerturbationType& v,
                          const std::vector<Point>& domain) {
  const auto* fu = std::get_if<FiniteMapPerturbation>(&u);
  const auto* fv = std::get_if<FiniteMapPerturbation>(&v);
  if (fu && fv) {
    for (const auto& x : domain) {
      const auto nu = neighbors(*fu, x);
      const auto nv = neighbors(*fv, x);
      for (const auto& z : nu)
        if (!std::binary_search(nv.begin(), nv.end(), z))
          throw ConfigError("restriction violated: U(" + x.str() + ") contains " + z.str() +
                            " outside V(" + x.str() + ")");
    }
    return;
  }
  const auto* bu = std::get_if<BallPerturbation>(&u);
  const auto* bv = std::get_if<BallPerturbation>(&v);
  if (bu && bv) {
    if (bu->norm != bv->norm)
      throw ConfigError("restriction check across different ball norms is not supported");
    if (bu->radius > bv->radius)
      throw ConfigError("restriction violated: inner radius exceeds outer radius");
    return;
  }
  throw ConfigError("restriction check needs two finite maps or two balls of one norm");
}

std::string norm_name(Norm n) {
  switch (n) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::Linf: return "linf";
  }
  return "?";
}

}  // namespace rcert
