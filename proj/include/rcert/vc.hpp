#ifndef RCERT_VC_HPP
#define RCERT_VC_HPP

#include <vector>

#include "rcert/point.hpp"

namespace rcert {

/// Brute-force VC dimension of a family of subsets of a finite domain,
/// by subset enumeration over bitmasks. Guarded at |domain| <= 20.
int vc_dimension(const std::vector<Point>& domain,
                 const std::vector<std::vector<Point>>& family);

/// Same computation on pre-encoded bitmask sets (low bits index the domain).
int vc_dimension_masks(size_t domain_size, const std::vector<uint32_t>& family);

}  // namespace rcert

#endif  // RCERT_VC_HPP
