#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace arckernel {

/// Exact rational number. GMP keeps values canonical (den > 0, reduced)
/// as long as every raw construction from a numerator/denominator pair goes
/// through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q{Integer{num}, Integer{den}};
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q{num, den};
  q.canonicalize();
  return q;
}

/// Canonical "num/den" text; integers keep the "/1" suffix.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "a" or "a/b" with optional sign on a.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string str{s};
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    Integer z;
    if (str.empty() || z.set_str(str, 10) != 0)
      throw std::invalid_argument("malformed rational: '" + std::string{text} + "'");
    return z;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational{parse_int(text)};
  return make_rational(parse_int(text.substr(0, slash)),
                       parse_int(text.substr(slash + 1)));
}

}  // namespace arckernel
