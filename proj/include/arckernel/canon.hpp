#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arckernel/graph.hpp"

namespace arckernel {

/// Orders supported by the bit-packed canonical code (n(n-1)/2 <= 64).
inline constexpr int kCanonMaxOrder = 11;

/// Compact adjacency for small graphs: one neighbor bitmask per vertex.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  explicit SmallGraph(int order = 0) : n(order), adj(static_cast<std::size_t>(order), 0u) {}
  explicit SmallGraph(const Graph& g) : SmallGraph(g.n()) {
    for (const auto& e : g.edges()) add_edge(e.u, e.v);
  }

  void add_edge(int u, int v) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  bool has(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return __builtin_popcount(adj[v]); }

  Graph to_graph() const {
    std::vector<Edge> e;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (has(i, j)) e.push_back({i, j});
    return Graph(n, std::move(e));
  }
};

/// Upper triangle in graph6 bit order, first bit most significant.
using CanonCode = std::uint64_t;

namespace detail {

inline CanonCode code_of(const SmallGraph& g, const std::vector<int>& order) {
  CanonCode code = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.has(order[i], order[j]) ? 1u : 0u);
  return code;
}

/// Equitable refinement. New colors are ranks of (old color, neighbor counts
/// per color), which depends only on the colored graph, not on labels.
inline void refine(const SmallGraph& g, std::vector<int>& color) {
  int cells = *std::max_element(color.begin(), color.end()) + 1;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      auto& s = sig[v];
      s.assign(static_cast<std::size_t>(cells) + 1, 0);
      s[0] = color[v];
      for (int w = 0; w < g.n; ++w)
        if (g.has(v, w)) ++s[1 + color[w]];
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < g.n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                  distinct.begin());
    const int next = static_cast<int>(distinct.size());
    if (next == cells) return;
    cells = next;
  }
}

inline void search(const SmallGraph& g, std::vector<int> color, CanonCode& best,
                   std::vector<int>& best_order, bool& found) {
  refine(g, color);
  const int cells = *std::max_element(color.begin(), color.end()) + 1;
  if (cells == g.n) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) order[color[v]] = v;
    const CanonCode c = code_of(g, order);
    if (!found || c > best) {
      best = c;
      best_order = std::move(order);
      found = true;
    }
    return;
  }
  // first non-singleton cell
  std::vector<int> size(static_cast<std::size_t>(cells), 0);
  for (int c : color) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;
  for (int v = 0; v < g.n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> next(color);
    for (int u = 0; u < g.n; ++u)
      if (color[u] > target || (color[u] == target && u != v)) ++next[u];
    search(g, std::move(next), best, best_order, found);
  }
}

}  // namespace detail

struct CanonicalForm {
  CanonCode code = 0;
  std::vector<int> order;  // order[new label] = old vertex
};

/// Canonical labeling by individualization-refinement: the largest code over
/// all leaves of the search tree. Isomorphic graphs get equal codes.
inline CanonicalForm canonical_form(const SmallGraph& g) {
  if (g.n > kCanonMaxOrder)
    throw std::invalid_argument("canonical form supports at most " +
                                std::to_string(kCanonMaxOrder) + " vertices");
  if (g.n == 0) return {};
  CanonicalForm out;
  bool found = false;
  detail::search(g, std::vector<int>(static_cast<std::size_t>(g.n), 0), out.code, out.order,
                 found);
  return out;
}

inline SmallGraph relabel(const SmallGraph& g, const std::vector<int>& order) {
  SmallGraph h(g.n);
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has(order[i], order[j])) h.add_edge(i, j);
  return h;
}

inline Graph canonical_graph(const Graph& g) {
  SmallGraph s(g);
  return relabel(s, canonical_form(s).order).to_graph();
}

}  // namespace arckernel
