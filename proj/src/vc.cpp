#include "rcert/vc.hpp"

#include <algorithm>
#include <set>

#include "rcert/errors.hpp"

namespace rcert {

namespace {

// Next subset of the same popcount (Gosper's hack); 0 terminates.
uint32_t next_same_popcount(uint32_t v, uint32_t limit) {
  const uint32_t c = v & static_cast<uint32_t>(-static_cast<int32_t>(v));
  const uint32_t r = v + c;
  uint32_t next = (((r ^ v) >> 2) / c) | r;
  return next < limit ? next : 0;
}

bool shatters(uint32_t b, const std::vector<uint32_t>& family, int k) {
  std::set<uint32_t> patterns;
  const size_t need = 1u << k;
  for (const auto g : family) {
    patterns.insert(g & b);
    if (patterns.size() == need) return true;
  }
  return false;
}

}  // namespace

int vc_dimension_masks(size_t domain_size, const std::vector<uint32_t>& family) {
  if (domain_size > 20)
    throw ConfigError("VC enumeration guard: domain size " + std::to_string(domain_size) +
                      " exceeds 20");
  if (family.empty()) throw ConfigError("VC dimension of an empty family");
  const uint32_t limit = 1u << domain_size;
  int best = 0;  // the empty set is always shattered
  for (int k = 1; k <= static_cast<int>(domain_size); ++k) {
    // no family of n sets shatters more than log2(n) points
    if ((1ull << k) > family.size()) break;
    bool found = false;
    for (uint32_t b = (1u << k) - 1; b != 0; b = next_same_popcount(b, limit)) {
      if (shatters(b, family, k)) {
        found = true;
        break;
      }
    }
    if (!found) break;
    best = k;
  }
  return best;
}

int vc_dimension(const std::vector<Point>& domain,
                 const std::vector<std::vector<Point>>& family) {
  if (domain.size() > 20)
    throw ConfigError("VC enumeration guard: domain size " + std::to_string(domain.size()) +
                      " exceeds 20");
  std::vector<Point> sorted = domain;
  std::sort(sorted.begin(), sorted.end());
  std::vector<uint32_t> masks;
  masks.reserve(family.size());
  for (const auto& g : family) {
    uint32_t m = 0;
    for (const auto& p : g) {
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
      if (it == sorted.end() || *it != p) continue;  // points outside the domain are ignored
      m |= 1u << (it - sorted.begin());
    }
    masks.push_back(m);
  }
  return vc_dimension_masks(sorted.size(), masks);
}

}  // namespace rcert
