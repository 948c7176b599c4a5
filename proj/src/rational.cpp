#include "rcert/rational.hpp"

#include <cctype>

#include "rcert/errors.hpp"

namespace rcert {

Rat::Rat(long num, long den) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ConfigError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ConfigError("malformed rational literal: " + s);
    Rat r;
    r.v_ = mpq_class(mpz_class(s));
    return r;
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ConfigError("malformed rational literal: " + s);
  mpz_class d(den);
  if (d == 0) throw ConfigError("rational with zero denominator: " + s);
  Rat r;
  r.v_ = mpq_class(mpz_class(num), d);
  r.v_.canonicalize();
  return r;
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

}  // namespace rcert
