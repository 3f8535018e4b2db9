#include <gtest/gtest.h>

#include "arckernel/arcspace.hpp"
#include "test_support.hpp"

using namespace arckernel;
using namespace arckernel::testing;

namespace {

bool lies_in_L(const SubspaceBasis& s, const Graph& g) {
  const auto inc = build_incidences(g, s.arcs);
  return (inc.dout_x * s.vectors).is_zero() && (inc.din_x * s.vectors).is_zero();
}

std::vector<Graph> population() {
  auto gs = exhaustive_population(6);
  auto rnd = random_population();
  gs.insert(gs.end(), rnd.begin(), rnd.end());
  return gs;
}

}  // namespace

TEST(Incidences, SingleEdge) {
  const Graph k2(2, {{0, 1}});
  const auto inc = build_incidences(k2, default_arc_system(k2));
  EXPECT_EQ(inc.dout_x, (RatMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(inc.din_x, (RatMatrix{{0, 1}, {1, 0}}));
}

TEST(Incidences, BlockStructureAndSums) {
  for (const Graph& g : {parse_graph6("Cl"), complete(4), petersen(), defect8_graph(), path(5)}) {
    const ArcSystem a = default_arc_system(g);
    const auto inc = build_incidences(g, a);
    const std::size_t n = g.n(), m = g.m();
    for (std::size_t j = 0; j < 2 * m; ++j) {
      int heads = 0, tails = 0;
      for (std::size_t v = 0; v < n; ++v) {
        heads += inc.din_x(v, j) == 1;
        tails += inc.dout_x(v, j) == 1;
      }
      EXPECT_EQ(heads, 1);
      EXPECT_EQ(tails, 1);
    }
    EXPECT_EQ(inc.dout_x, hstack(inc.dt, inc.dh));
    EXPECT_EQ(inc.din_x, hstack(inc.dh, inc.dt));
    for (std::size_t j = 0; j < m; ++j) {
      Rational sb = 0, sn = 0;
      for (std::size_t v = 0; v < n; ++v) {
        sb += inc.B(v, j);
        sn += inc.N(v, j);
      }
      EXPECT_EQ(sb, 2);
      EXPECT_EQ(sn, 0);
    }
    for (std::size_t v = 0; v < n; ++v) {
      Rational row = 0;
      for (std::size_t j = 0; j < 2 * m; ++j) row += inc.din_x(v, j);
      EXPECT_EQ(row, g.degree(static_cast<Vertex>(v)));
    }
    EXPECT_EQ(inc.din_x * inc.dout_x.transpose(), inc.A);
  }
}

TEST(KernelL, Examples) {
  EXPECT_EQ(kernel_L_direct(Graph(2, {{0, 1}})).dim(), 0u);
  EXPECT_EQ(kernel_L_direct(parse_graph6("Cl")).dim(), 2u);
  EXPECT_EQ(kernel_L_direct(complete(4)).dim(), 5u);
  EXPECT_EQ(kernel_L_direct(petersen()).dim(), 11u);
  const auto empty = kernel_L_direct(Graph(3, {}));
  EXPECT_EQ(empty.ambient_dim, 0u);
  EXPECT_EQ(empty.dim(), 0u);
}

TEST(KernelL, TheoremBasisExamples) {
  EXPECT_EQ(theorem_basis_L(path(3), default_arc_system(path(3))).dim(), 0u);
  const Graph c4 = parse_graph6("Cl");
  const auto h = theorem_basis_L(c4, default_arc_system(c4));
  EXPECT_EQ(h.dim(), 2u);
  EXPECT_TRUE(lies_in_L(h, c4));
  const Graph k4 = complete(4);
  const auto hk = theorem_basis_L(k4, default_arc_system(k4));
  const auto dk = kernel_L_direct(k4);
  EXPECT_EQ(rank(hstack(hk.vectors, dk.vectors)), 5u);
  EXPECT_EQ(rank(hk.vectors), 5u);
}

TEST(SignedCycle, Examples) {
  const Graph c4 = parse_graph6("Cl");
  const ArcSystem a = default_arc_system(c4);
  const auto inc = build_incidences(c4, a);
  OrientedCycle cyc{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  const auto z = signed_cycle_vector(cyc, a);
  // edges (0,1) (0,3) (1,2) (2,3)
  EXPECT_EQ(z, (std::vector<Rational>{1, -1, 1, 1}));
  EXPECT_TRUE(inc.N.apply(z) == std::vector<Rational>(4));

  OrientedCycle rev{{{0, 3}, {3, 2}, {2, 1}, {1, 0}}};
  auto zr = signed_cycle_vector(rev, a);
  for (auto& q : zr) q = -q;
  EXPECT_EQ(zr, z);

  const Graph k4 = complete(4);
  const ArcSystem ak = default_arc_system(k4);
  const auto zt = signed_cycle_vector(OrientedCycle{{{1, 3}, {3, 2}, {2, 1}}}, ak);
  int weight = 0;
  for (const auto& q : zt) weight += sgn(q) != 0;
  EXPECT_EQ(weight, 3);
  EXPECT_TRUE(build_incidences(k4, ak).N.apply(zt) == std::vector<Rational>(4));

  EXPECT_THROW(signed_cycle_vector(OrientedCycle{{{0, 2}, {2, 0}}}, a), std::invalid_argument);
}

TEST(BipartiteBasis, C4SignPatterns) {
  const Graph c4 = parse_graph6("Cl");
  const auto bb = bipartite_cycle_basis(c4);
  ASSERT_EQ(bb.dim(), 2u);
  EXPECT_TRUE(lies_in_L(bb, c4));
  // Y = {0, 2}: forward arcs 0->1, 0->3, 2->1, 2->3 then their reverses
  const std::size_t m = 4;
  for (std::size_t i = 0; i < m; ++i) {
    EXPECT_EQ(abs(bb.vectors(i, 0)), 1);
    EXPECT_EQ(bb.vectors(i, 0), bb.vectors(m + i, 0));   // w_C: both arcs agree
    EXPECT_EQ(bb.vectors(i, 1), -bb.vectors(m + i, 1));  // y_C: arcs opposite
  }
  // going round the 4-cycle the edge signs alternate: top +, side -, bottom +, side -
  // cycle order of edges: (0,1) (1,2) (2,3) (0,3) -> indices 0, 2, 3, 1
  EXPECT_EQ(bb.vectors(0, 0), -bb.vectors(2, 0));
  EXPECT_EQ(bb.vectors(2, 0), -bb.vectors(3, 0));
  EXPECT_EQ(bb.vectors(3, 0), -bb.vectors(1, 0));
}

TEST(BipartiteBasis, TreeAndUnions) {
  EXPECT_EQ(bipartite_cycle_basis(path(4)).dim(), 0u);
  const Graph g = disjoint_union(cycle(6), cycle(4));
  const auto bb = bipartite_cycle_basis(g);
  EXPECT_EQ(bb.dim(), 4u);
  EXPECT_TRUE(lies_in_L(bb, g));
  EXPECT_EQ(rank(bb.vectors), 4u);
  EXPECT_THROW(bipartite_cycle_basis(complete(3)), NotBipartiteError);
}

TEST(SubspaceK, Examples) {
  const Graph k2(2, {{0, 1}});
  EXPECT_EQ(subspace_K(k2, default_arc_system(k2)).dim(), 2u);
  const Graph c4 = parse_graph6("Cl");
  const auto k = subspace_K(c4, default_arc_system(c4));
  const auto l = kernel_L_direct(c4);
  EXPECT_EQ(k.dim(), 6u);
  EXPECT_TRUE((l.vectors.transpose() * k.vectors).is_zero());
  EXPECT_EQ(subspace_K(petersen(), default_arc_system(petersen())).dim(), 19u);
}

TEST(BlockDiagonalization, Examples) {
  const Graph k2(2, {{0, 1}});
  EXPECT_TRUE(check_block_diagonalization(k2, default_arc_system(k2)));
  const Graph c4 = parse_graph6("Cl");
  EXPECT_TRUE(check_block_diagonalization(c4, default_arc_system(c4)));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Graph g = random_graph(rng, 1 + k % 10, 0.4);
    EXPECT_TRUE(check_block_diagonalization(g, default_arc_system(g)));
  }
}

TEST(Reindex, MatchesArcsByEndpoints) {
  const Graph c4 = parse_graph6("Cl");
  const auto bb = bipartite_cycle_basis(c4);
  const auto moved = reindex(bb, default_arc_system(c4));
  EXPECT_TRUE(lies_in_L(moved, c4));
  EXPECT_TRUE(same_span(moved.vectors, kernel_L_direct(c4).vectors));
}

// Population-wide checks: dimension formula, rank oracles, span
// equality of the constructions, flow space, and the K/L decomposition.
TEST(ArcSpaceProperties, Population) {
  for (const Graph& g : population()) {
    SCOPED_TRACE(to_graph6(g));
    const auto s = structure_summary(g);
    const ArcSystem a = default_arc_system(g);
    const auto inc = build_incidences(g, a);
    const auto L = kernel_L_direct(g);
    ASSERT_EQ(static_cast<long>(L.dim()), 2L * g.m() - 2L * g.n() + s.b + s.c);
    EXPECT_TRUE(lies_in_L(L, g));
    EXPECT_EQ(rank(inc.B), static_cast<std::size_t>(g.n() - s.b));
    EXPECT_EQ(rank(inc.N), static_cast<std::size_t>(g.n() - s.c));

    const auto H = theorem_basis_L(g, a);
    EXPECT_EQ(H.dim(), L.dim());
    EXPECT_EQ(rank(hstack(H.vectors, L.vectors)), L.dim());

    // fundamental cycle vectors span ker N
    const auto cycles = fundamental_cycles(g, a);
    std::vector<std::vector<Rational>> zs;
    for (const auto& c : cycles) zs.push_back(signed_cycle_vector(c, a));
    const RatMatrix Z = from_columns(static_cast<std::size_t>(g.m()), zs);
    EXPECT_TRUE((inc.N * Z).is_zero());
    EXPECT_EQ(rank(Z), cycles.size());
    EXPECT_EQ(cycles.size(), rank_and_kernel(inc.N).kernel_basis.cols());

    if (s.bipartite()) {
      const ArcSystem ab = default_arc_system(g, Orientation::bipartite);
      const auto incb = build_incidences(g, ab);
      EXPECT_TRUE(same_span(rank_and_kernel(incb.B).kernel_basis,
                            rank_and_kernel(incb.N).kernel_basis));
      const auto bb = bipartite_cycle_basis(g);
      EXPECT_TRUE(lies_in_L(bb, g));
      EXPECT_EQ(bb.dim(), L.dim());
      EXPECT_EQ(rank(bb.vectors), bb.dim());
    }

    const auto K = subspace_K(g, a);
    EXPECT_EQ(K.dim() + L.dim(), 2 * static_cast<std::size_t>(g.m()));
    EXPECT_TRUE((L.vectors.transpose() * K.vectors).is_zero());
  }
}
