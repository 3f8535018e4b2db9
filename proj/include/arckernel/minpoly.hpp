#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arckernel/matrix.hpp"
#include "arckernel/poly.hpp"

namespace arckernel {

namespace detail {

/// Row-echelon basis built one vector at a time. Each stored row has a unit
/// pivot and is zero at the pivots of all earlier rows, so a single forward
/// pass reduces a new vector.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t size() const { return rows_.size(); }

  /// Reduces v in place against the stored rows, applying the same row
  /// operations to `trace` (trace rows are stored alongside each pivot row).
  void reduce(std::vector<Rational>& v, std::vector<Rational>* trace = nullptr) const {
    Rational f, t;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (sgn(v[c]) == 0) continue;
      f = v[c];
      const auto& row = rows_[r];
      for (std::size_t j = c; j < dim_; ++j) {
        if (sgn(row[j]) == 0) continue;
        t = f * row[j];
        v[j] -= t;
      }
      if (trace != nullptr) {
        const auto& tr = traces_[r];
        for (std::size_t j = 0; j < tr.size(); ++j) {
          if (sgn(tr[j]) == 0) continue;
          t = f * tr[j];
          (*trace)[j] -= t;
        }
      }
    }
  }

  /// Inserts an already-reduced nonzero vector. Returns false if v is zero.
  bool insert_reduced(std::vector<Rational> v, std::vector<Rational> trace = {}) {
    std::size_t c = 0;
    while (c < dim_ && sgn(v[c]) == 0) ++c;
    if (c == dim_) return false;
    const Rational p = v[c];
    for (std::size_t j = c; j < dim_; ++j) v[j] /= p;
    for (auto& a : trace) a /= p;
    rows_.push_back(std::move(v));
    traces_.push_back(std::move(trace));
    pivots_.push_back(c);
    return true;
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& a : v)
      if (sgn(a) != 0) return false;
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::vector<Rational>> traces_;
  std::vector<std::size_t> pivots_;
};

/// Krylov sequence v, Mv, M^2 v, ... up to the first exact linear dependence.
/// Returns the monic local minimal polynomial of v and the independent
/// Krylov vectors v .. M^{d-1} v.
inline std::pair<RatPoly, std::vector<std::vector<Rational>>> krylov_local(
    const RatMatrix& m, std::vector<Rational> v) {
  const std::size_t n = m.rows();
  IncrementalEchelon ech(n);
  std::vector<std::vector<Rational>> krylov;
  for (std::size_t d = 0;; ++d) {
    // trace records the reduced vector as a combination of x^0 .. x^d
    std::vector<Rational> trace(d + 1);
    trace[d] = 1;
    std::vector<Rational> r = v;
    ech.reduce(r, &trace);
    bool zero = true;
    for (const auto& a : r)
      if (sgn(a) != 0) {
        zero = false;
        break;
      }
    if (zero) return {RatPoly(std::move(trace)), std::move(krylov)};
    ech.insert_reduced(std::move(r), std::move(trace));
    krylov.push_back(v);
    v = m.apply(v);
  }
}

}  // namespace detail

/// Minimal polynomial of v under M (the monic generator of {p : p(M)v = 0}).
inline RatPoly local_min_poly(const RatMatrix& m, std::span<const Rational> v) {
  if (!m.square()) throw std::invalid_argument("local_min_poly: matrix must be square");
  if (v.size() != m.rows()) throw std::invalid_argument("local_min_poly: vector length mismatch");
  return detail::krylov_local(m, std::vector<Rational>(v.begin(), v.end())).first;
}

/// Minimal polynomial of a square matrix: the lcm over standard basis
/// vectors e_i of their local minimal polynomials. A basis vector already in
/// the span W of previously generated Krylov vectors is skipped; W is
/// M-invariant and annihilated by the running lcm, so the result is unchanged.
inline RatPoly min_poly(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("min_poly: matrix must be square, got " + m.shape());
  const std::size_t n = m.rows();
  RatPoly result = RatPoly::one();
  detail::IncrementalEchelon span(n);
  for (std::size_t i = 0; i < n && span.size() < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    if (span.contains(e)) continue;
    auto [local, krylov] = detail::krylov_local(m, std::move(e));
    result = lcm(result, local);
    for (auto& k : krylov) {
      span.reduce(k);
      span.insert_reduced(std::move(k));
    }
  }
  return result;
}

}  // namespace arckernel
