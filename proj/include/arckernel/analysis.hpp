#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "arckernel/arcspace.hpp"
#include "arckernel/graph.hpp"
#include "arckernel/graph6.hpp"
#include "arckernel/serialize.hpp"
#include "arckernel/walk.hpp"

namespace arckernel {

/// An exact identity that must hold did not. Always a hard error.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct AnalysisOptions {
  bool basis_direct = true;
  bool basis_h = true;
  /// Bipartite basis when the graph is bipartite (skipped otherwise).
  bool basis_bipartite_if_possible = true;
  /// Bipartite basis demanded explicitly; a non-bipartite graph is an error.
  bool basis_bipartite_required = false;
  bool identities = true;
  bool semisimple = true;
  std::vector<Candidate> candidates = default_candidates();
};

namespace detail {

inline void require_in_L(const SubspaceBasis& s, const Graph& g) {
  const IncidenceBundle inc = build_incidences(g, s.arcs);
  if (!(inc.dout_x * s.vectors).is_zero() || !(inc.din_x * s.vectors).is_zero())
    throw InvariantBreach(std::string{to_string(s.label)} + " basis leaves ker Dout ∩ ker Din");
  if (rank(s.vectors) != s.dim())
    throw InvariantBreach(std::string{to_string(s.label)} + " basis is dependent");
}

}  // namespace detail

/// Full structural and operator analysis of one graph as a JSON document.
inline Json analyze(const Graph& g, const AnalysisOptions& opt) {
  const StructureSummary s = structure_summary(g);
  const ArcSystem arcs = default_arc_system(g);
  const IncidenceBundle inc = build_incidences(g, arcs);
  const std::size_t m2 = 2 * static_cast<std::size_t>(g.m());

  Json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "analysis";
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  doc["input"] = {{"graph6", to_graph6(g)}, {"n", g.n()}, {"m", g.m()}, {"b", s.b},
                  {"c", s.c},               {"degrees", s.degrees}, {"edges", edges}};
  doc["arcs"] = arcs_json(arcs);

  const SubspaceBasis direct = kernel_L_direct(g);
  const SubspaceBasis k_space = subspace_K(g, arcs);
  const long expected = 2L * g.m() - 2L * g.n() + s.b + s.c;
  const std::size_t rank_b = rank(inc.B), rank_n = rank(inc.N);
  doc["dimensions"] = {{"rank_B", rank_b},
                       {"rank_N", rank_n},
                       {"dim_L", direct.dim()},
                       {"dim_K", k_space.dim()},
                       {"expected_dim_L", expected}};
  if (static_cast<long>(direct.dim()) != expected || direct.dim() + k_space.dim() != m2)
    throw InvariantBreach("arc-space dimensions violate dim L = 2m - 2n + b + c");
  if (rank_b != static_cast<std::size_t>(g.n() - s.b) ||
      rank_n != static_cast<std::size_t>(g.n() - s.c))
    throw InvariantBreach("incidence ranks differ from n - b / n - c");
  if (!(direct.vectors.transpose() * k_space.vectors).is_zero())
    throw InvariantBreach("K is not orthogonal to L");

  Json bases = Json::object();
  if (opt.basis_direct) {
    detail::require_in_L(direct, g);
    bases["direct"] = basis_json(direct);
  }
  if (opt.basis_h) {
    const SubspaceBasis h = theorem_basis_L(g, arcs);
    detail::require_in_L(h, g);
    if (!same_span(h.vectors, direct.vectors))
      throw InvariantBreach("h-transform basis spans a different subspace");
    bases["h_transform"] = basis_json(h);
  }
  if (opt.basis_bipartite_required || opt.basis_bipartite_if_possible) {
    if (s.bipartite()) {
      const SubspaceBasis bip = bipartite_cycle_basis(g);
      detail::require_in_L(bip, g);
      if (bip.dim() != direct.dim())
        throw InvariantBreach("bipartite cycle basis has the wrong size");
      bases["bipartite"] = basis_json(bip);
    } else if (opt.basis_bipartite_required) {
      throw NotBipartiteError(s.odd_cycles.front());
    } else {
      bases["bipartite"] = {{"skipped", "graph is not bipartite; odd cycle " +
                                            format_cycle(s.odd_cycles.front())}};
    }
  }
  doc["bases"] = std::move(bases);

  if (opt.identities) {
    const IdentityReport ids = operator_identity_suite(g, arcs);
    Json idj = identities_json(ids);
    const bool block = check_block_diagonalization(g, arcs);
    idj["block_diagonalization"] = {{"status", block ? "pass" : "fail"}};
    doc["identities"] = std::move(idj);
    if (!all_applicable_pass(ids) || !block)
      throw InvariantBreach("operator identity failed: " + doc["identities"].dump());
  }

  if (opt.semisimple) {
    if (g.m() == 0)
      doc["semisimplicity"] = {{"skipped", "graph has no edges"}};
    else
      doc["semisimplicity"] = report_json(semisimplicity_report(g, opt.candidates));
  }
  return doc;
}

}  // namespace arckernel
