#include <gtest/gtest.h>

#include "arckernel/walk.hpp"
#include "test_support.hpp"

using namespace arckernel;
using namespace arckernel::testing;

namespace {

// non-backtracking successor count straight from the definition
RatMatrix t_by_definition(const ArcSystem& a) {
  const std::size_t k = static_cast<std::size_t>(a.arc_count());
  RatMatrix t(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Arc x = a.arc(static_cast<int>(i)), y = a.arc(static_cast<int>(j));
      if (x.head == y.tail && !(y.head == x.tail)) t(i, j) = 1;
    }
  return t;
}

}  // namespace

TEST(WalkOperators, SingleEdge) {
  const Graph k2(2, {{0, 1}});
  const auto ops = build_walk_operators(k2, default_arc_system(k2));
  EXPECT_EQ(ops.P, (RatMatrix{{0, 1}, {1, 0}}));
  EXPECT_TRUE(ops.T.is_zero());
  EXPECT_EQ(ops.U, ops.P);
  EXPECT_THROW(build_walk_operators(Graph(3, {}), ArcSystem()), PreconditionError);
}

TEST(WalkOperators, CycleFour) {
  const Graph c4 = parse_graph6("Cl");
  const auto ops = build_walk_operators(c4, default_arc_system(c4));
  // degree 2: U has 2/2 - 1 = 0 on backtracks, so U is the forward-step permutation
  EXPECT_EQ(ops.U, ops.T.transpose());
  for (std::size_t i = 0; i < 8; ++i) {
    Rational row = 0, col = 0;
    for (std::size_t j = 0; j < 8; ++j) {
      row += ops.T(i, j);
      col += ops.T(j, i);
    }
    EXPECT_EQ(row, 1);
    EXPECT_EQ(col, 1);
  }
  EXPECT_EQ(ops.S_plus, ops.U);
}

TEST(WalkOperators, CompleteFourIsOrthogonal) {
  const Graph k4 = complete(4);
  const auto ops = build_walk_operators(k4, default_arc_system(k4));
  EXPECT_EQ(ops.U * ops.U.transpose(), RatMatrix::identity(12));
  for (const auto& q : ops.U.entries())
    EXPECT_TRUE(q == 0 || q == make_rational(2, 3) || q == make_rational(-1, 3));
}

TEST(WalkOperators, TMatchesDefinition) {
  for (const Graph& g : random_population(60, 9, 3)) {
    if (g.m() == 0) continue;
    const ArcSystem a = default_arc_system(g);
    EXPECT_EQ(build_walk_operators(g, a).T, t_by_definition(a));
  }
}

TEST(IdentitySuite, RegularExamples) {
  for (const Graph& g : {complete(4), petersen(), parse_graph6("Cl")}) {
    const auto r = operator_identity_suite(g, default_arc_system(g));
    for (const auto& [name, res] : r) {
      SCOPED_TRACE(name);
      EXPECT_EQ(res.status, IdentityStatus::pass);
    }
  }
}

TEST(IdentitySuite, SkipsWithReasons) {
  const Graph k2(2, {{0, 1}});
  const auto r = operator_identity_suite(k2, default_arc_system(k2));
  EXPECT_EQ(r.at("P_T_P_eq_S_plus").status, IdentityStatus::skipped);
  EXPECT_FALSE(r.at("P_T_P_eq_S_plus").reason.empty());
  EXPECT_EQ(r.at("U_UT_eq_I").status, IdentityStatus::pass);
  EXPECT_EQ(r.at("L_invariant_under_T").status, IdentityStatus::skipped);
  EXPECT_TRUE(all_applicable_pass(r));

  const auto e = operator_identity_suite(Graph(2, {}), ArcSystem());
  EXPECT_EQ(e.at("Din_DoutT_eq_A").status, IdentityStatus::pass);
  EXPECT_EQ(e.at("P_squared_eq_I").status, IdentityStatus::skipped);

  const auto p = operator_identity_suite(path(4), default_arc_system(path(4)));
  EXPECT_EQ(p.at("U_UT_eq_I").status, IdentityStatus::skipped);
  EXPECT_TRUE(all_applicable_pass(p));
}

TEST(IdentitySuite, Population) {
  auto gs = exhaustive_population(6);
  auto rnd = random_population();
  gs.insert(gs.end(), rnd.begin(), rnd.end());
  for (const Graph& g : gs) {
    SCOPED_TRACE(to_graph6(g));
    EXPECT_TRUE(all_applicable_pass(operator_identity_suite(g, default_arc_system(g))));
    if (g.m() > 0 && structure_summary(g).bipartite())
      EXPECT_TRUE(all_applicable_pass(
          operator_identity_suite(g, default_arc_system(g, Orientation::bipartite))));
  }
}

TEST(Semisimplicity, Examples) {
  const auto p3 = semisimplicity_report(path(3), default_candidates());
  EXPECT_EQ(p3.min_poly, RatPoly::monomial(2));
  EXPECT_FALSE(p3.is_semisimple);
  EXPECT_TRUE(p3.matched_candidates.empty());
  EXPECT_FALSE(p3.nonzero_defect);  // only 0 is defective

  const auto c4 = semisimplicity_report(parse_graph6("Cl"), default_candidates());
  EXPECT_EQ(c4.min_poly, (RatPoly{-1, 0, 0, 0, 1}));
  EXPECT_TRUE(c4.is_semisimple);
  EXPECT_FALSE(c4.nonzero_defect);

  const auto pet = semisimplicity_report(petersen(), default_candidates());
  EXPECT_TRUE(pet.is_semisimple);
  EXPECT_EQ(pet.regular_valency, 3);

  const auto f2 = semisimplicity_report(defect8_graph(), default_candidates());
  EXPECT_FALSE(f2.is_semisimple);
  EXPECT_EQ(f2.min_poly.degree(), 17);
  EXPECT_EQ(f2.repeated_part, (RatPoly{2, 0, 1}));
  EXPECT_EQ(f2.matched_candidates, (std::vector<std::string>{"x^2 + 2"}));
  EXPECT_EQ(f2.min_degree, 2);
  EXPECT_TRUE(f2.nonzero_defect);

  EXPECT_THROW(semisimplicity_report(Graph(3, {}), default_candidates()), PreconditionError);
}

TEST(Semisimplicity, CandidatesAreMonic) {
  const Candidate c = make_candidate(RatPoly{4, 2, 2});
  EXPECT_EQ(c.poly, (RatPoly{2, 1, 1}));
  EXPECT_EQ(c.name, "x^2 + x + 2");
  EXPECT_THROW(make_candidate(RatPoly{}), std::invalid_argument);
}

// L is T-invariant; on regular graphs the restriction of T to L is semi-simple.
TEST(RestrictToL, RegularGraphs) {
  for (const Graph& g : {complete(4), petersen(), complete(5), parse_graph6("Cl")}) {
    const auto ops = build_walk_operators(g, default_arc_system(g));
    const auto L = kernel_L_direct(g).vectors;
    const RatMatrix t_l = restrict_to_L(ops.T, L);
    EXPECT_EQ(L * t_l, ops.T * L);
    EXPECT_TRUE(squarefree_analysis(min_poly(t_l)).is_squarefree);
    EXPECT_TRUE(poly_divides(min_poly(t_l), min_poly(ops.T)));
  }
}
