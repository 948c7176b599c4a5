#ifndef RCERT_RATIONAL_HPP
#define RCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace rcert {

/// Exact rational number, always held in canonical form (gcd(num, den) = 1,
/// den > 0). Thin wrapper over GMP's mpq_class; the wrapper exists because
/// mpq_class does not canonicalize two-argument construction, which silently
/// breaks equality.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<long>(n)) {}
  Rat(long long n) : v_(std::to_string(n)) {}
  Rat(long num, long den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p/q" or a bare integer "p". Throws ConfigError on malformed input.
  static Rat parse(const std::string& s);

  /// Canonical "p/q" rendering (always includes the denominator, e.g. "2/1").
  std::string str() const;

  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const;

  const mpq_class& raw() const { return v_; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace rcert

#endif  // RCERT_RATIONAL_HPP
