#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "arckernel/arcspace.hpp"
#include "arckernel/census.hpp"
#include "arckernel/matrix.hpp"
#include "arckernel/poly.hpp"
#include "arckernel/walk.hpp"

// JSON encodings. Rationals are always "num/den" strings; object keys are
// sorted (nlohmann::json default), so equal values serialize byte-identically.

namespace arckernel {

using Json = nlohmann::json;

inline Json poly_json(const RatPoly& p) { return coefficient_strings(p); }

inline Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (const auto& q : m.row(i)) r.push_back(to_string(q));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Json arcs_json(const ArcSystem& a) {
  Json out = Json::array();
  for (int j = 0; j < a.arc_count(); ++j) out.push_back({a.arc(j).tail, a.arc(j).head});
  return out;
}

/// Vectors listed one per basis element, each indexed by arc.
inline Json basis_json(const SubspaceBasis& s) {
  return {{"label", std::string{to_string(s.label)}},
          {"ambient_dim", s.ambient_dim},
          {"dim", s.dim()},
          {"arcs", arcs_json(s.arcs)},
          {"vectors", matrix_json(s.vectors.transpose())}};
}

inline Json identities_json(const IdentityReport& r) {
  Json out = Json::object();
  for (const auto& [name, res] : r) {
    Json entry = {{"status", std::string{to_string(res.status)}}};
    if (!res.reason.empty()) entry["reason"] = res.reason;
    out[name] = std::move(entry);
  }
  return out;
}

inline Json report_json(const SemisimplicityReport& r) {
  return {{"graph6", r.graph6},
          {"min_poly", poly_json(r.min_poly)},
          {"min_poly_degree", r.min_poly.degree()},
          {"is_semisimple", r.is_semisimple},
          {"repeated_part", poly_json(r.repeated_part)},
          {"nonzero_defect", r.nonzero_defect},
          {"matched_candidates", r.matched_candidates},
          {"min_degree", r.min_degree},
          {"regular_valency", r.regular_valency ? Json(*r.regular_valency) : Json(nullptr)}};
}

inline Json filter_json(const GraphFilter& f) {
  return {{"n", f.n},
          {"connected_only", f.connected_only},
          {"min_degree", f.min_degree},
          {"regular_only", f.regular_only ? Json(*f.regular_only) : Json(nullptr)},
          {"no_degree_one", f.no_degree_one}};
}

inline Json census_json(const CensusReport& r) {
  Json cands = Json::array();
  for (std::size_t c = 0; c < r.candidates.size(); ++c)
    cands.push_back({{"name", r.candidates[c].name},
                     {"coefficients", poly_json(r.candidates[c].poly)},
                     {"count", r.candidate_counts[c]}});
  Json offenders = Json::array();
  for (const auto& o : r.offenders) offenders.push_back(report_json(o));
  Json errors = Json::array();
  for (const auto& e : r.errors)
    errors.push_back({{"index", e.index}, {"record", e.record}, {"message", e.message}});
  return {{"schema_version", 1},
          {"kind", "census"},
          {"filter", filter_json(r.filter)},
          {"provenance", r.provenance},
          {"convention", r.filter.connected_only ? "connected" : "all"},
          {"total_examined", r.total_examined},
          {"filtered_out", r.filtered_out},
          {"non_semisimple_count", r.non_semisimple_count},
          {"nonzero_defect_count", r.nonzero_defect_count},
          {"candidates", std::move(cands)},
          {"offenders", std::move(offenders)},
          {"errors", std::move(errors)}};
}

}  // namespace arckernel
