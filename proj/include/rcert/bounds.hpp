#ifndef RCERT_BOUNDS_HPP
#define RCERT_BOUNDS_HPP

#include <cstdint>

namespace rcert {

// Sample-size calculators. The literature gives these up to constants; the
// constants below are fixed so every harness in this project agrees on
// concrete sizes.
//
//   eps_net_size      = ceil((8/eps) * (d*ln(16/eps) + ln(2/delta)))
//   eps_approx_size   = ceil((16/eps^2) * (d*ln(16/eps) + ln(2/delta)))
//   hoeffding_size    = ceil(ln(2/delta) / (2*eps^2))

int64_t eps_net_size(int d, double eps, double delta);
int64_t eps_approx_size(int d, double eps, double delta);
int64_t hoeffding_size(double eps, double delta);

}  // namespace rcert

#endif  // RCERT_BOUNDS_HPP
