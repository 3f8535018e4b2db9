#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arckernel/graph.hpp"
#include "arckernel/matrix.hpp"

namespace arckernel {

/// Incidence matrices of the digraph X of a graph and of its orientation.
struct IncidenceBundle {
  RatMatrix din_x;   // n x 2m, (v, j) = 1 iff v is the head of arc j
  RatMatrix dout_x;  // n x 2m, (v, j) = 1 iff v is the tail of arc j
  RatMatrix dh;      // n x m, heads of the oriented edges
  RatMatrix dt;      // n x m, tails of the oriented edges
  RatMatrix B;       // signless incidence dt + dh
  RatMatrix N;       // signed incidence dt - dh
  RatMatrix A;       // n x n adjacency
};

inline IncidenceBundle build_incidences(const Graph& g, const ArcSystem& a) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  const std::size_t m = static_cast<std::size_t>(g.m());
  if (static_cast<std::size_t>(a.m()) != m)
    throw std::invalid_argument("arc system does not match graph edge count");
  IncidenceBundle bundle{RatMatrix(n, 2 * m), RatMatrix(n, 2 * m), RatMatrix(n, m),
                         RatMatrix(n, m),     RatMatrix(n, m),     RatMatrix(n, m),
                         RatMatrix(n, n)};
  for (std::size_t j = 0; j < 2 * m; ++j) {
    const Arc arc = a.arc(static_cast<int>(j));
    bundle.din_x(arc.head, j) = 1;
    bundle.dout_x(arc.tail, j) = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Arc arc = a.orientation()[i];
    if (!g.adjacent(arc.tail, arc.head))
      throw std::invalid_argument("arc system orients a non-edge");
    bundle.dh(arc.head, i) = 1;
    bundle.dt(arc.tail, i) = 1;
  }
  bundle.B = bundle.dt + bundle.dh;
  bundle.N = bundle.dt - bundle.dh;
  for (const auto& e : g.edges()) {
    bundle.A(e.u, e.v) = 1;
    bundle.A(e.v, e.u) = 1;
  }
  return bundle;
}

enum class BasisLabel { direct_kernel, h_transform, bipartite_cycles, k_complement };

inline std::string_view to_string(BasisLabel l) {
  switch (l) {
    case BasisLabel::direct_kernel: return "direct-kernel";
    case BasisLabel::h_transform: return "h-transform";
    case BasisLabel::bipartite_cycles: return "bipartite-cycles";
    case BasisLabel::k_complement: return "K-complement";
  }
  return "unknown";
}

/// Basis vectors (columns) of a subspace of the arc space, with the arc
/// numbering their coordinates refer to.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  RatMatrix vectors;
  BasisLabel label = BasisLabel::direct_kernel;
  ArcSystem arcs;

  std::size_t dim() const { return vectors.cols(); }
};

/// Re-expresses a basis in another arc numbering of the same graph. Arcs are
/// matched by (tail, head); coordinates simply move.
inline SubspaceBasis reindex(const SubspaceBasis& s, const ArcSystem& target) {
  if (target.arc_count() != static_cast<int>(s.ambient_dim))
    throw std::invalid_argument("reindex: arc count mismatch");
  SubspaceBasis out{s.ambient_dim, RatMatrix(s.ambient_dim, s.dim()), s.label, target};
  for (int j = 0; j < s.arcs.arc_count(); ++j) {
    auto k = target.index_of(s.arcs.arc(j));
    if (!k) throw std::invalid_argument("reindex: arc missing from target system");
    for (std::size_t c = 0; c < s.dim(); ++c) out.vectors(*k, c) = s.vectors(j, c);
  }
  return out;
}

/// ker [Dout; Din] by exact row reduction, in the lexicographic arc numbering.
inline SubspaceBasis kernel_L_direct(const Graph& g) {
  const ArcSystem a = default_arc_system(g);
  const IncidenceBundle inc = build_incidences(g, a);
  auto rk = rank_and_kernel(vstack(inc.dout_x, inc.din_x));
  return {2 * static_cast<std::size_t>(g.m()), std::move(rk.kernel_basis),
          BasisLabel::direct_kernel, a};
}

/// v in ker B lifts to (v; v), w in ker N lifts to (w; -w): the image of the
/// block-diagonal kernel under the unnormalized H = (I I; I -I).
inline SubspaceBasis theorem_basis_L(const Graph& g, const ArcSystem& a) {
  const IncidenceBundle inc = build_incidences(g, a);
  const std::size_t m = static_cast<std::size_t>(g.m());
  const RatMatrix kb = rank_and_kernel(inc.B).kernel_basis;
  const RatMatrix kn = rank_and_kernel(inc.N).kernel_basis;
  RatMatrix out(2 * m, kb.cols() + kn.cols());
  for (std::size_t c = 0; c < kb.cols(); ++c)
    for (std::size_t i = 0; i < m; ++i) {
      out(i, c) = kb(i, c);
      out(m + i, c) = kb(i, c);
    }
  for (std::size_t c = 0; c < kn.cols(); ++c)
    for (std::size_t i = 0; i < m; ++i) {
      out(i, kb.cols() + c) = kn(i, c);
      out(m + i, kb.cols() + c) = -kn(i, c);
    }
  return {2 * m, std::move(out), BasisLabel::h_transform, a};
}

/// +1 on edges traversed along their orientation, -1 against it.
inline std::vector<Rational> signed_cycle_vector(const OrientedCycle& cyc, const ArcSystem& a) {
  std::vector<Rational> z(static_cast<std::size_t>(a.m()));
  for (const Arc& arc : cyc.arcs) {
    auto j = a.index_of(arc);
    if (!j)
      throw std::invalid_argument("cycle arc " + std::to_string(arc.tail) + "->" +
                                  std::to_string(arc.head) + " is not an edge of the graph");
    if (*j < a.m())
      z[*j] += 1;
    else
      z[*j - a.m()] -= 1;
  }
  return z;
}

/// For bipartite graphs: with every arc oriented Y -> Z and z the signed
/// vector of a fundamental cycle, w_C = (z; z) and y_C = (z; -z).
/// Column order is w_C, y_C per cycle.
inline SubspaceBasis bipartite_cycle_basis(const Graph& g) {
  const ArcSystem a = default_arc_system(g, Orientation::bipartite);
  const std::size_t m = static_cast<std::size_t>(g.m());
  const auto cycles = fundamental_cycles(g, a);
  RatMatrix out(2 * m, 2 * cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto z = signed_cycle_vector(cycles[c], a);
    for (std::size_t i = 0; i < m; ++i) {
      out(i, 2 * c) = z[i];
      out(m + i, 2 * c) = z[i];
      out(i, 2 * c + 1) = z[i];
      out(m + i, 2 * c + 1) = -z[i];
    }
  }
  return {2 * m, std::move(out), BasisLabel::bipartite_cycles, a};
}

/// rowspace(Din) + rowspace(Dout) inside Q^{2m}.
inline SubspaceBasis subspace_K(const Graph& g, const ArcSystem& a) {
  const IncidenceBundle inc = build_incidences(g, a);
  RatMatrix gens = hstack(inc.din_x.transpose(), inc.dout_x.transpose());
  return {2 * static_cast<std::size_t>(g.m()), column_space_basis(gens), BasisLabel::k_complement,
          a};
}

/// (I I; I -I) of size 2k.
inline RatMatrix unnormalized_h(std::size_t k) {
  RatMatrix h(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    h(i, i) = 1;
    h(i, k + i) = 1;
    h(k + i, i) = 1;
    h(k + i, k + i) = -1;
  }
  return h;
}

/// H'_n [Dout; Din] H'_m == 2 diag(B, N), entrywise.
inline bool check_block_diagonalization(const Graph& g, const ArcSystem& a) {
  const IncidenceBundle inc = build_incidences(g, a);
  const std::size_t n = static_cast<std::size_t>(g.n());
  const std::size_t m = static_cast<std::size_t>(g.m());
  const RatMatrix lhs = unnormalized_h(n) * vstack(inc.dout_x, inc.din_x) * unnormalized_h(m);
  return lhs == Rational{2} * block_diag(inc.B, inc.N);
}

}  // namespace arckernel
