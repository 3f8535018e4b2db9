#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arckernel {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A directed edge tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Arc reversed() const { return {head, tail}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v in strictly increasing lexicographic order.
class Graph {
 public:
  Graph() = default;

  /// Accepts edges in any order or orientation; rejects loops, duplicates and
  /// out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
      if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") out of range for n=" + std::to_string(n));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i] == edges[i - 1])
        throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) + "," +
                                    std::to_string(edges[i].v) + ")");
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Ascending neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& nb = adj_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Index of edge {a, b} in edges(), if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
    if (it == edges_.end() || *it != Edge{a, b}) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Disjoint union; vertices of b are shifted by a.n().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const auto& x : b.edges()) e.push_back({x.u + a.n(), x.v + a.n()});
  return Graph(a.n() + b.n(), std::move(e));
}

struct Bipartition {
  std::vector<Vertex> Y;  // contains the lowest-indexed vertex of the component
  std::vector<Vertex> Z;
};

struct StructureSummary {
  int c = 0;  // connected components
  int b = 0;  // bipartite components
  std::vector<int> component_id;
  /// Indexed by component; empty for non-bipartite components.
  std::vector<std::optional<Bipartition>> bipartition;
  /// 0 = Y, 1 = Z, -1 when the vertex's component is not bipartite.
  std::vector<int> color;
  /// One odd cycle (vertex sequence) per non-bipartite component, in
  /// component order.
  std::vector<std::vector<Vertex>> odd_cycles;
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;

  bool bipartite() const { return b == c; }
  std::optional<int> regular_valency() const {
    if (degrees.empty() || min_degree != max_degree) return std::nullopt;
    return min_degree;
  }
};

/// Components by BFS from the lowest unvisited vertex; 2-coloring per
/// component with the root colored Y.
inline StructureSummary structure_summary(const Graph& g) {
  const int n = g.n();
  StructureSummary s;
  s.component_id.assign(n, -1);
  s.degrees.resize(n);
  for (int v = 0; v < n; ++v) s.degrees[v] = g.degree(v);
  if (n > 0) {
    s.min_degree = *std::min_element(s.degrees.begin(), s.degrees.end());
    s.max_degree = *std::max_element(s.degrees.begin(), s.degrees.end());
  }

  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (s.component_id[root] != -1) continue;
    const int cid = s.c++;
    std::vector<Vertex> members{root};
    s.component_id[root] = cid;
    side[root] = 0;
    std::optional<std::pair<Vertex, Vertex>> conflict;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Vertex u = members[head];
      for (Vertex w : g.neighbors(u)) {
        if (s.component_id[w] == -1) {
          s.component_id[w] = cid;
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          members.push_back(w);
        } else if (side[w] == side[u] && !conflict) {
          conflict = std::make_pair(u, w);
        }
      }
    }

    if (!conflict) {
      ++s.b;
      Bipartition bp;
      std::sort(members.begin(), members.end());
      for (Vertex v : members) (side[v] == 0 ? bp.Y : bp.Z).push_back(v);
      s.bipartition.emplace_back(std::move(bp));
      continue;
    }
    s.bipartition.emplace_back(std::nullopt);
    // Same-side endpoints sit at equal depth parity; their tree paths to the
    // lowest common ancestor plus the conflict edge close an odd cycle.
    auto [x, y] = *conflict;
    std::vector<Vertex> up_x{x}, up_y{y};
    while (x != y) {
      if (depth[x] >= depth[y]) {
        x = parent[x];
        up_x.push_back(x);
      } else {
        y = parent[y];
        up_y.push_back(y);
      }
    }
    up_y.pop_back();  // lca already ends up_x
    std::vector<Vertex> cycle(up_x.begin(), up_x.end());
    cycle.insert(cycle.end(), up_y.rbegin(), up_y.rend());
    s.odd_cycles.push_back(std::move(cycle));
  }
  s.color.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (s.bipartition[s.component_id[v]]) s.color[v] = side[v];
  return s;
}

inline std::string format_cycle(const std::vector<Vertex>& cycle) {
  std::string out;
  for (Vertex v : cycle) out += std::to_string(v) + "-";
  if (!cycle.empty()) out += std::to_string(cycle.front());
  return out;
}

/// Raised when an operation needs every component to be bipartite.
class NotBipartiteError : public std::runtime_error {
 public:
  explicit NotBipartiteError(std::vector<Vertex> odd_cycle)
      : std::runtime_error("graph is not bipartite; odd cycle " + format_cycle(odd_cycle)),
        odd_cycle_(std::move(odd_cycle)) {}
  const std::vector<Vertex>& odd_cycle() const { return odd_cycle_; }

 private:
  std::vector<Vertex> odd_cycle_;
};

enum class Orientation { lexicographic, bipartite };

/// Orientation of every edge plus the arc numbering of the digraph of the
/// graph: arc i < m is the oriented edge e_i, arc m + i is its reverse.
class ArcSystem {
 public:
  ArcSystem() = default;
  explicit ArcSystem(std::vector<Arc> orientation) : forward_(std::move(orientation)) {
    const int m = this->m();
    for (int i = 0; i < 2 * m; ++i) index_.emplace(arc(i), i);
  }

  int m() const { return static_cast<int>(forward_.size()); }
  int arc_count() const { return 2 * m(); }
  const std::vector<Arc>& orientation() const { return forward_; }

  Arc arc(int i) const {
    const int m = this->m();
    return i < m ? forward_.at(i) : forward_.at(i - m).reversed();
  }
  int reverse_of(int i) const { return i < m() ? i + m() : i - m(); }
  int edge_of(int i) const { return i < m() ? i : i - m(); }
  std::optional<int> index_of(Arc a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const ArcSystem& a, const ArcSystem& b) { return a.forward_ == b.forward_; }

 private:
  std::vector<Arc> forward_;
  std::map<Arc, int> index_;
};

/// Lexicographic: u -> v for u < v. Bipartite: every arc from Y to Z.
inline ArcSystem default_arc_system(const Graph& g, Orientation o = Orientation::lexicographic) {
  std::vector<Arc> fwd;
  fwd.reserve(g.edges().size());
  if (o == Orientation::lexicographic) {
    for (const auto& e : g.edges()) fwd.push_back({e.u, e.v});
    return ArcSystem(std::move(fwd));
  }
  const StructureSummary s = structure_summary(g);
  if (!s.bipartite()) throw NotBipartiteError(s.odd_cycles.front());
  for (const auto& e : g.edges())
    fwd.push_back(s.color[e.u] == 0 ? Arc{e.u, e.v} : Arc{e.v, e.u});
  return ArcSystem(std::move(fwd));
}

struct OrientedCycle {
  std::vector<Arc> arcs;  // closed walk, consecutive arcs chain head to tail
};

/// One cycle per non-tree edge of a DFS spanning forest. Roots are the
/// lowest vertex of each component and children are visited in ascending
/// order. Each cycle starts with the non-tree edge in its oriented direction
/// and returns through the tree.
inline std::vector<OrientedCycle> fundamental_cycles(const Graph& g, const ArcSystem& a) {
  const int n = g.n();
  std::vector<int> parent(n, -1), depth(n, -1);
  std::vector<bool> tree_edge(g.edges().size(), false);
  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    // explicit stack of (vertex, next neighbor position)
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      const auto& nb = g.neighbors(u);
      if (pos == nb.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nb[pos++];
      if (depth[w] != -1) continue;
      depth[w] = depth[u] + 1;
      parent[w] = u;
      tree_edge[*g.edge_index(u, w)] = true;
      stack.emplace_back(w, 0);
    }
  }

  std::vector<OrientedCycle> out;
  for (int i = 0; i < g.m(); ++i) {
    if (tree_edge[i]) continue;
    const Arc start = a.orientation().at(i);
    // tree path head -> tail
    Vertex x = start.head, y = start.tail;
    std::vector<Vertex> from_head{x}, from_tail{y};
    while (x != y) {
      if (depth[x] >= depth[y]) {
        x = parent[x];
        from_head.push_back(x);
      } else {
        y = parent[y];
        from_tail.push_back(y);
      }
    }
    from_tail.pop_back();
    std::vector<Vertex> walk{start.tail};
    walk.insert(walk.end(), from_head.begin(), from_head.end());
    walk.insert(walk.end(), from_tail.rbegin(), from_tail.rend());
    // walk = tail, head, ..., tail
    OrientedCycle cyc;
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) cyc.arcs.push_back({walk[k], walk[k + 1]});
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace arckernel
