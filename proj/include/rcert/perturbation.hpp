#ifndef RCERT_PERTURBATION_HPP
#define RCERT_PERTURBATION_HPP

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "rcert/point.hpp"

namespace rcert {

/// Finite neighbor map. Accessors auto-augment with the key point, so
/// x ∈ U(x) holds even when the stored map omits it; points absent from the
/// map have U(x) = {x}.
struct FiniteMapPerturbation {
  std::map<Point, std::vector<Point>> map;
};

enum class Norm { L1, L2, Linf };

struct BallPerturbation {
  Norm norm = Norm::L2;
  Rat radius;
};

struct PerturbationTypeBox;

/// Restriction pair (U, V) with U(x) ⊆ V(x) for all x; the tolerant
/// certification setting.
struct RestrictionPairPerturbation {
  std::shared_ptr<const PerturbationTypeBox> inner;  // U
  std::shared_ptr<const PerturbationTypeBox> outer;  // V
};

using PerturbationType =
    std::variant<FiniteMapPerturbation, BallPerturbation, RestrictionPairPerturbation>;

struct PerturbationTypeBox {
  PerturbationType value;
};

PerturbationType make_restriction_pair(PerturbationType inner, PerturbationType outer);
const PerturbationType& restriction_inner(const RestrictionPairPerturbation& p);
const PerturbationType& restriction_outer(const RestrictionPairPerturbation& p);

/// U(x) for a finite map, sorted, deduplicated, always containing x.
std::vector<Point> neighbors(const FiniteMapPerturbation& u, const Point& x);

/// Exact membership test z ∈ U(x). Finite maps by lookup; balls by norm
/// comparison (closed balls, squared comparison for L2).
bool perturbation_contains(const PerturbationType& u, const Point& x, const Point& z);

/// Checks U(x) ⊆ V(x): exhaustively on a domain for finite maps, by radius
/// comparison for balls of the same norm. Throws ConfigError when the
/// combination is not checkable or the invariant fails.
void validate_restriction(const PerturbationType& u, const PerturbationType& v,
                          const std::vector<Point>& domain);

std::string norm_name(Norm n);

}  // namespace rcert

#endif  // RCERT_PERTURBATION_HPP
