#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "arckernel/graph.hpp"
#include "arckernel/graph6.hpp"
#include "test_support.hpp"

using namespace arckernel;
using namespace arckernel::testing;

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
  const Graph g(4, {{3, 2}, {1, 0}, {0, 3}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}}));
}

TEST(Graph6, ParseExamples) {
  const Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.n(), 1);
  EXPECT_EQ(k1.m(), 0);
  EXPECT_EQ(parse_graph6("C~"), complete(4));
  EXPECT_EQ(parse_graph6("Cl").edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(parse_graph6(">>graph6<<Cl\n"), parse_graph6("Cl"));
  EXPECT_EQ(parse_graph6("?").n(), 0);
}

TEST(Graph6, EncodeExamples) {
  EXPECT_EQ(to_graph6(Graph(1, {})), "@");
  EXPECT_EQ(to_graph6(complete(4)), "C~");
  EXPECT_EQ(to_graph6(defect8_graph()), "GrQ[{s");
  EXPECT_EQ(to_graph6(petersen()).size(), 9u);
}

TEST(Graph6, LongHeader) {
  std::vector<Edge> e{{0, 62}, {5, 7}, {61, 62}};
  const Graph g(63, e);
  const std::string s = to_graph6(g);
  EXPECT_EQ(s.substr(0, 4), std::string("~??~"));
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, Errors) {
  try {
    parse_graph6("C!");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_graph6("C"), ParseError);      // truncated payload
  EXPECT_THROW(parse_graph6("C~~"), ParseError);    // payload too long
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B@"), ParseError);     // nonzero padding (n=3 uses 3 bits)
  EXPECT_THROW(parse_graph6("~?"), ParseError);     // truncated long header
}

TEST(Graph6, RoundTripAllLabeledGraphsUpTo5) {
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<Edge> e;
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if ((mask >> k) & 1u) e.push_back({i, j});
      const Graph g(n, e);
      ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    }
  }
}

TEST(EdgeList, ParseAndErrors) {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n3 2\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("x"), ParseError);
}

TEST(Structure, Examples) {
  const Graph c4 = parse_graph6("Cl");
  const auto s = structure_summary(c4);
  EXPECT_EQ(s.c, 1);
  EXPECT_EQ(s.b, 1);
  EXPECT_EQ(s.degrees, (std::vector<int>{2, 2, 2, 2}));
  ASSERT_TRUE(s.bipartition[0]);
  EXPECT_EQ(s.bipartition[0]->Y, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(s.bipartition[0]->Z, (std::vector<Vertex>{1, 3}));

  const auto k4 = structure_summary(complete(4));
  EXPECT_EQ(k4.c, 1);
  EXPECT_EQ(k4.b, 0);
  ASSERT_EQ(k4.odd_cycles.size(), 1u);
  EXPECT_EQ(k4.odd_cycles[0].size() % 2, 1u);

  const auto u = structure_summary(disjoint_union(c4, complete(4)));
  EXPECT_EQ(u.c, 2);
  EXPECT_EQ(u.b, 1);
}

TEST(Structure, IsolatedVerticesAreBipartiteComponents) {
  const auto s = structure_summary(Graph(3, {{0, 2}}));
  EXPECT_EQ(s.c, 2);
  EXPECT_EQ(s.b, 2);
  EXPECT_EQ(s.min_degree, 0);
  EXPECT_EQ(s.bipartition[1]->Y, (std::vector<Vertex>{1}));
}

TEST(Structure, PropertiesOnRandomGraphs) {
  for (const Graph& g : random_population(200, 12, 99)) {
    const auto s = structure_summary(g);
    EXPECT_EQ(std::accumulate(s.degrees.begin(), s.degrees.end(), 0), 2 * g.m());
    EXPECT_LE(s.b, s.c);
    EXPECT_LE(s.c, g.n());
    for (const auto& e : g.edges()) {
      EXPECT_EQ(s.component_id[e.u], s.component_id[e.v]);
      if (s.color[e.u] != -1) EXPECT_NE(s.color[e.u], s.color[e.v]);
    }
    for (const auto& cyc : s.odd_cycles) {
      ASSERT_EQ(cyc.size() % 2, 1u);
      EXPECT_EQ(std::set<Vertex>(cyc.begin(), cyc.end()).size(), cyc.size());
      for (std::size_t k = 0; k < cyc.size(); ++k)
        EXPECT_TRUE(g.adjacent(cyc[k], cyc[(k + 1) % cyc.size()]));
    }
  }
}

TEST(ArcSystem, Conventions) {
  const ArcSystem k2 = default_arc_system(Graph(2, {{0, 1}}));
  EXPECT_EQ(k2.arc(0), (Arc{0, 1}));
  EXPECT_EQ(k2.arc(1), (Arc{1, 0}));

  const Graph c4 = parse_graph6("Cl");
  const ArcSystem lex = default_arc_system(c4);
  const std::vector<Arc> fwd{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(lex.arc(i), fwd[i]);
    EXPECT_EQ(lex.arc(i + 4), fwd[i].reversed());
    EXPECT_EQ(lex.reverse_of(i), i + 4);
  }
  const ArcSystem bip = default_arc_system(c4, Orientation::bipartite);
  EXPECT_EQ(bip.orientation(), (std::vector<Arc>{{0, 1}, {0, 3}, {2, 1}, {2, 3}}));

  EXPECT_THROW(default_arc_system(complete(3), Orientation::bipartite), NotBipartiteError);
  try {
    default_arc_system(complete(4), Orientation::bipartite);
  } catch (const NotBipartiteError& e) {
    EXPECT_EQ(e.odd_cycle().size(), 3u);
  }
}

TEST(FundamentalCycles, Counts) {
  EXPECT_TRUE(fundamental_cycles(path(3), default_arc_system(path(3))).empty());
  const Graph c4 = parse_graph6("Cl");
  const auto c = fundamental_cycles(c4, default_arc_system(c4));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].arcs.size(), 4u);
  EXPECT_EQ(fundamental_cycles(complete(4), default_arc_system(complete(4))).size(), 3u);
}

namespace {

void check_cycles(const Graph& g) {
  const auto s = structure_summary(g);
  const ArcSystem a = default_arc_system(g);
  const auto cycles = fundamental_cycles(g, a);
  ASSERT_EQ(static_cast<int>(cycles.size()), g.m() - g.n() + s.c);
  for (const auto& cyc : cycles) {
    ASSERT_GE(cyc.arcs.size(), 3u);
    std::set<int> edges;
    std::set<Vertex> verts;
    for (std::size_t k = 0; k < cyc.arcs.size(); ++k) {
      const Arc& x = cyc.arcs[k];
      const Arc& y = cyc.arcs[(k + 1) % cyc.arcs.size()];
      EXPECT_EQ(x.head, y.tail);
      auto idx = g.edge_index(x.tail, x.head);
      ASSERT_TRUE(idx);
      EXPECT_TRUE(edges.insert(*idx).second);
      EXPECT_TRUE(verts.insert(x.tail).second);
    }
    // starts along a non-tree edge in its oriented direction
    const auto first = a.index_of(cyc.arcs.front());
    ASSERT_TRUE(first);
    EXPECT_LT(*first, a.m());
  }
}

}  // namespace

TEST(FundamentalCycles, ExhaustiveAndRandom) {
  for (const Graph& g : exhaustive_population(6)) check_cycles(g);
  for (const Graph& g : random_population()) check_cycles(g);
}
