#include "rcert/bounds.hpp"

#include <cmath>

#include "rcert/errors.hpp"

namespace rcert {

namespace {

void check_params(int d, double eps, double delta) {
  if (d < 1) throw ConfigError("VC dimension parameter must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0,1)");
}

}  // namespace

int64_t eps_net_size(int d, double eps, double delta) {
  check_params(d, eps, delta);
  const long double v =
      (8.0L / eps) * (d * std::log(16.0L / eps) + std::log(2.0L / delta));
  return static_cast<int64_t>(std::ceil(v));
}

int64_t eps_approx_size(int d, double eps, double delta) {
  check_params(d, eps, delta);
  const long double v =
      (16.0L / (eps * eps)) * (d * std::log(16.0L / eps) + std::log(2.0L / delta));
  return static_cast<int64_t>(std::ceil(v));
}

int64_t hoeffding_size(double eps, double delta) {
  check_params(1, eps, delta);
  const long double v = std::log(2.0L / delta) / (2.0L * eps * eps);
  return static_cast<int64_t>(std::ceil(v));
}

}  // namespace rcert
