#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arckernel/arcspace.hpp"
#include "arckernel/graph.hpp"
#include "arckernel/graph6.hpp"
#include "arckernel/matrix.hpp"
#include "arckernel/minpoly.hpp"
#include "arckernel/poly.hpp"

namespace arckernel {

/// Arc-indexed operators. Rows and columns follow the ArcSystem numbering.
struct WalkOperators {
  RatMatrix P;       // arc reversal
  RatMatrix U;       // quantum walk transition matrix
  RatMatrix T;       // Bass-Hashimoto (non-backtracking) matrix
  RatMatrix S_plus;  // positive support of U
};

/// Raised when an operation's structural precondition fails.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// U[wx, uv] = 2/d(v) - [u = x] when v = w, else 0.
/// T[uv, wx] = 1 iff v = w and u != x, i.e. T = Dh^T Dt - P for X.
inline WalkOperators build_walk_operators(const Graph& g, const ArcSystem& a) {
  if (g.m() == 0) throw PreconditionError("walk operators need at least one edge");
  const std::size_t k = static_cast<std::size_t>(a.arc_count());
  WalkOperators ops{RatMatrix(k, k), RatMatrix(k, k), RatMatrix(k, k), RatMatrix(k, k)};
  for (std::size_t i = 0; i < k; ++i) {
    ops.P(i, static_cast<std::size_t>(a.reverse_of(static_cast<int>(i)))) = 1;
    const Arc row = a.arc(static_cast<int>(i));
    for (std::size_t j = 0; j < k; ++j) {
      const Arc col = a.arc(static_cast<int>(j));
      // U and S+: row arc wx leaves the head of column arc uv
      if (row.tail == col.head) {
        Rational u = make_rational(2, g.degree(col.head));
        if (col.tail == row.head) u -= 1;
        if (sgn(u) > 0) ops.S_plus(i, j) = 1;
        ops.U(i, j) = std::move(u);
      }
      if (row.head == col.tail && row.tail != col.head) ops.T(i, j) = 1;
    }
  }
  return ops;
}

enum class IdentityStatus { pass, fail, skipped };

inline std::string_view to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::pass: return "pass";
    case IdentityStatus::fail: return "fail";
    case IdentityStatus::skipped: return "skipped";
  }
  return "unknown";
}

struct IdentityResult {
  IdentityStatus status = IdentityStatus::skipped;
  std::string reason;  // why skipped; empty otherwise
};

using IdentityReport = std::map<std::string, IdentityResult>;

inline bool all_applicable_pass(const IdentityReport& r) {
  for (const auto& [name, res] : r)
    if (res.status == IdentityStatus::fail) return false;
  return true;
}

/// Exact checks of the incidence/walk identities for one graph.
inline IdentityReport operator_identity_suite(const Graph& g, const ArcSystem& a) {
  IdentityReport out;
  auto put = [&](const std::string& name, bool ok) {
    out[name] = {ok ? IdentityStatus::pass : IdentityStatus::fail, {}};
  };
  auto skip = [&](const std::string& name, std::string why) {
    out[name] = {IdentityStatus::skipped, std::move(why)};
  };

  const IncidenceBundle inc = build_incidences(g, a);
  const StructureSummary s = structure_summary(g);
  const std::size_t n = static_cast<std::size_t>(g.n());
  RatMatrix degree(n, n);
  for (std::size_t v = 0; v < n; ++v) degree(v, v) = s.degrees[v];

  put("Din_DoutT_eq_A", inc.din_x * inc.dout_x.transpose() == inc.A);
  put("Din_DinT_eq_degree", inc.din_x * inc.din_x.transpose() == degree);
  put("Dout_DoutT_eq_degree", inc.dout_x * inc.dout_x.transpose() == degree);

  static const char* kWalkNames[] = {"Din_P_eq_Dout", "Dout_P_eq_Din", "P_squared_eq_I",
                                     "T_eq_DhT_Dt_minus_P", "S_plus_eq_DtT_Dh_minus_P",
                                     "P_T_P_eq_S_plus", "U_UT_eq_I", "U_eq_regular_formula",
                                     "L_invariant_under_T", "L_invariant_under_U"};
  if (g.m() == 0) {
    for (const char* name : kWalkNames) skip(name, "graph has no edges");
    return out;
  }

  const WalkOperators ops = build_walk_operators(g, a);
  const std::size_t k = static_cast<std::size_t>(a.arc_count());
  const RatMatrix I = RatMatrix::identity(k);
  put("Din_P_eq_Dout", inc.din_x * ops.P == inc.dout_x);
  put("Dout_P_eq_Din", inc.dout_x * ops.P == inc.din_x);
  put("P_squared_eq_I", ops.P * ops.P == I);
  put("T_eq_DhT_Dt_minus_P", ops.T == inc.din_x.transpose() * inc.dout_x - ops.P);

  if (s.min_degree >= 2) {
    put("S_plus_eq_DtT_Dh_minus_P", ops.S_plus == inc.dout_x.transpose() * inc.din_x - ops.P);
    put("P_T_P_eq_S_plus", ops.P * ops.T * ops.P == ops.S_plus);
  } else {
    const std::string why = "minimum degree " + std::to_string(s.min_degree) + " < 2";
    skip("S_plus_eq_DtT_Dh_minus_P", why);
    skip("P_T_P_eq_S_plus", why);
  }

  if (auto kval = s.regular_valency(); kval && *kval >= 1) {
    put("U_UT_eq_I", ops.U * ops.U.transpose() == I);
    put("U_eq_regular_formula",
        ops.U == make_rational(2, *kval) * (inc.dout_x.transpose() * inc.din_x) - ops.P);
  } else {
    skip("U_UT_eq_I", "graph is not regular");
    skip("U_eq_regular_formula", "graph is not regular");
  }

  const RatMatrix L = kernel_L_direct(g).vectors;  // lexicographic numbering
  const SubspaceBasis Lb = reindex(SubspaceBasis{k, L, BasisLabel::direct_kernel,
                                                 default_arc_system(g)},
                                   a);
  if (Lb.dim() == 0) {
    skip("L_invariant_under_T", "L is zero-dimensional");
    skip("L_invariant_under_U", "L is zero-dimensional");
  } else {
    put("L_invariant_under_T", span_contains(Lb.vectors, ops.T * Lb.vectors));
    put("L_invariant_under_U", span_contains(Lb.vectors, ops.U * Lb.vectors));
  }
  return out;
}

/// A named candidate repeated factor.
struct Candidate {
  std::string name;
  RatPoly poly;
};

inline Candidate make_candidate(RatPoly p) {
  if (p.is_zero()) throw std::invalid_argument("candidate polynomial is zero");
  p = p.monic();
  return {p.pretty(), std::move(p)};
}

/// x^2 + 2 and x^2 + x + 2.
inline std::vector<Candidate> default_candidates() {
  return {make_candidate(RatPoly{2, 0, 1}), make_candidate(RatPoly{2, 1, 1})};
}

struct SemisimplicityReport {
  std::string graph6;
  RatPoly min_poly;
  bool is_semisimple = true;
  RatPoly repeated_part;
  /// Some nonzero eigenvalue is non-semi-simple (repeated part is not a power of x).
  bool nonzero_defect = false;
  std::vector<std::string> matched_candidates;
  int min_degree = 0;
  std::optional<int> regular_valency;
};

/// Semi-simplicity of T over Q: its minimal polynomial is squarefree.
/// A candidate q matches when q^2 divides the minimal polynomial.
inline SemisimplicityReport semisimplicity_report(const Graph& g,
                                                  const std::vector<Candidate>& candidates) {
  if (g.m() == 0) throw PreconditionError("semi-simplicity report needs at least one edge");
  const StructureSummary s = structure_summary(g);
  const WalkOperators ops = build_walk_operators(g, default_arc_system(g));
  SemisimplicityReport r;
  r.graph6 = to_graph6(g);
  r.min_poly = min_poly(ops.T);
  auto sf = squarefree_analysis(r.min_poly);
  r.is_semisimple = sf.is_squarefree;
  r.repeated_part = std::move(sf.repeated_part);
  const auto rd = static_cast<std::size_t>(std::max(0L, r.repeated_part.degree()));
  r.nonzero_defect = r.repeated_part != RatPoly::monomial(rd);
  for (const auto& c : candidates)
    if (poly_divides(c.poly * c.poly, r.min_poly)) r.matched_candidates.push_back(c.name);
  r.min_degree = s.min_degree;
  r.regular_valency = s.regular_valency();
  return r;
}

/// Matrix of T acting on L, in the coordinates of a basis of L.
inline RatMatrix restrict_to_L(const RatMatrix& op, const RatMatrix& l_basis) {
  return coordinates(l_basis, op * l_basis);
}

}  // namespace arckernel
