#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arckernel/matrix.hpp"
#include "arckernel/rational.hpp"

namespace arckernel {

/// Univariate polynomial over Q, coefficients in ascending degree with
/// trailing zeros stripped. The zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
  RatPoly(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    trim();
  }

  static RatPoly constant(const Rational& a) { return RatPoly(std::vector<Rational>{a}); }
  static RatPoly one() { return constant(1); }
  /// x^k
  static RatPoly monomial(std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    return RatPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational{0}; }

  RatPoly monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    RatPoly p = *this;
    const Rational lc = p.c_.back();
    for (auto& a : p.c_) a /= lc;
    return p;
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return RatPoly(std::move(d));
  }

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rational> r = a.c_;
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
    const Rational& lb = b.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational f = r[k + b.c_.size() - 1] / lb;
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
      q[k] = std::move(f);
    }
    r.resize(b.c_.size() - 1);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
  }

  /// p(M) by Horner's rule.
  RatMatrix evaluate(const RatMatrix& m) const {
    if (!m.square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
    RatMatrix acc(m.rows(), m.cols());
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc = acc * m;
      for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c_[k];
    }
    return acc;
  }

  /// Human-readable form, descending powers: "x^2 + x + 2".
  std::string pretty() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& a = c_[k];
      if (sgn(a) == 0) continue;
      Rational mag = abs(a);
      if (out.empty())
        out += sgn(a) < 0 ? "-" : "";
      else
        out += sgn(a) < 0 ? " - " : " + ";
      const bool unit = mag == 1 && k > 0;
      if (!unit) out += mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str();
      if (k > 0) out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

/// Monic lcm of two nonzero polynomials.
inline RatPoly lcm(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm with zero polynomial");
  return divmod(a * b, gcd(a, b)).first.monic();
}

/// True iff q divides p exactly.
inline bool poly_divides(const RatPoly& q, const RatPoly& p) {
  if (q.is_zero()) throw std::domain_error("divisibility test by the zero polynomial");
  return divmod(p, q).second.is_zero();
}

struct SquarefreeAnalysis {
  bool is_squarefree = true;
  RatPoly repeated_part;  // monic gcd(p, p')
};

/// A monic irreducible q divides repeated_part iff q^2 divides p.
inline SquarefreeAnalysis squarefree_analysis(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree analysis of the zero polynomial");
  RatPoly g = gcd(p, p.derivative());
  return {g.is_one(), std::move(g)};
}

/// Parses an ascending coefficient list such as "2,1,1" (= x^2 + x + 2).
/// Entries may be integers or "num/den".
inline RatPoly parse_poly_coefficients(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    c.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return RatPoly(std::move(c));
}

inline std::vector<std::string> coefficient_strings(const RatPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) out.push_back(to_string(a));
  return out;
}

}  // namespace arckernel
