#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arckernel/canon.hpp"
#include "arckernel/graph.hpp"
#include "arckernel/graph6.hpp"
#include "arckernel/walk.hpp"

namespace arckernel {

/// Largest order the built-in generator enumerates in general, and with a
/// regular-valency filter (which prunes the augmentation tree).
inline constexpr int kGeneratorMaxOrder = 8;
inline constexpr int kRegularGeneratorMaxOrder = 10;

/// Conjunctive graph predicates for enumeration and census runs.
struct GraphFilter {
  int n = -1;  // any order when negative
  bool connected_only = true;
  int min_degree = 0;
  std::optional<int> regular_only;
  /// Literal "no vertex of degree 1"; isolated vertices pass.
  bool no_degree_one = false;

  bool accepts(const Graph& g) const { return accepts(g, structure_summary(g)); }
  bool accepts(const Graph& g, const StructureSummary& s) const {
    if (n >= 0 && g.n() != n) return false;
    if (connected_only && s.c > 1) return false;
    if (g.n() > 0 && s.min_degree < min_degree) return false;
    if (regular_only && (s.regular_valency() != regular_only)) return false;
    if (no_degree_one && std::count(s.degrees.begin(), s.degrees.end(), 1) > 0) return false;
    return true;
  }
};

/// One representative per isomorphism class of graphs on n vertices passing
/// the filter, canonically labeled and sorted by graph6.
///
/// Vertex-by-vertex augmentation with canonical-form deduplication at every
/// level. Every induced subgraph of a graph with minimum degree d on n
/// vertices has, on j vertices, minimum degree >= d - (n - j); with a
/// regular filter the maximum degree is bounded too. Intermediate levels are
/// pruned by these bounds.
inline std::vector<Graph> generate_nonisomorphic(int n, const GraphFilter& f) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const int limit = f.regular_only ? kRegularGeneratorMaxOrder : kGeneratorMaxOrder;
  if (n > limit)
    throw std::invalid_argument("built-in generator supports n <= " + std::to_string(limit) +
                                "; supply an external graph6 stream instead");
  GraphFilter filter = f;
  filter.n = n;
  const int floor_degree = std::max(f.min_degree, f.regular_only.value_or(0));
  const int ceil_degree = f.regular_only.value_or(n);

  std::vector<SmallGraph> level;
  level.emplace_back(std::min(n, 1));
  for (int j = 1; j < n; ++j) {
    std::unordered_map<CanonCode, SmallGraph> next;
    const int lo = floor_degree - (n - (j + 1));
    for (const SmallGraph& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << j); ++mask) {
        if (__builtin_popcount(mask) > ceil_degree) continue;
        SmallGraph h(j + 1);
        for (int v = 0; v < j; ++v) h.adj[v] = g.adj[v];
        for (int v = 0; v < j; ++v)
          if ((mask >> v) & 1u) h.add_edge(v, j);
        bool ok = true;
        for (int v = 0; v <= j && ok; ++v) ok = h.degree(v) >= lo && h.degree(v) <= ceil_degree;
        if (!ok) continue;
        CanonicalForm cf = canonical_form(h);
        if (next.count(cf.code) == 0) next.emplace(cf.code, relabel(h, cf.order));
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }

  std::vector<std::pair<std::string, Graph>> keyed;
  for (const SmallGraph& s : level) {
    Graph g = s.to_graph();
    if (!filter.accepts(g)) continue;
    std::string key = to_graph6(g);
    keyed.emplace_back(std::move(key), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

/// One input record of a census; `graph` is empty when the record failed to parse.
struct CensusEntry {
  std::string record;
  std::optional<Graph> graph;
  std::string error;
};

inline std::vector<CensusEntry> entries_from_graphs(const std::vector<Graph>& graphs) {
  std::vector<CensusEntry> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back({to_graph6(g), g, {}});
  return out;
}

/// One graph6 record per non-blank line. Bad records become error entries.
inline std::vector<CensusEntry> read_graph6_stream(std::istream& in) {
  std::vector<CensusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    CensusEntry e{line, std::nullopt, {}};
    try {
      e.graph = parse_graph6(line);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct CensusError {
  std::size_t index = 0;  // position in the input stream
  std::string record;
  std::string message;
};

struct CensusReport {
  std::size_t total_examined = 0;
  std::size_t filtered_out = 0;
  std::size_t non_semisimple_count = 0;
  std::size_t nonzero_defect_count = 0;  // non-semi-simple at a nonzero eigenvalue
  std::vector<Candidate> candidates;
  std::vector<std::size_t> candidate_counts;  // parallel to candidates
  std::vector<SemisimplicityReport> offenders;  // sorted by graph6
  std::vector<CensusError> errors;
  GraphFilter filter;
  std::string provenance;  // "built-in" or "external:<path>"
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Evaluates semi-simplicity of T for every accepted graph. Workers share no
/// mutable state; results are merged in input order and offenders sorted by
/// graph6, so the report is independent of `jobs` and of input order.
inline CensusReport run_census(const std::vector<CensusEntry>& source,
                               const std::vector<Candidate>& candidates, const GraphFilter& f,
                               std::string provenance, unsigned jobs = 1,
                               const ProgressFn& progress = {}) {
  CensusReport report;
  report.candidates = candidates;
  report.candidate_counts.assign(candidates.size(), 0);
  report.filter = f;
  report.provenance = std::move(provenance);

  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto& e = source[i];
    if (!e.graph) {
      report.errors.push_back({i, e.record, e.error});
      continue;
    }
    if (!f.accepts(*e.graph)) {
      ++report.filtered_out;
      continue;
    }
    work.push_back(i);
  }

  std::vector<std::optional<SemisimplicityReport>> results(work.size());
  std::vector<std::string> failures(work.size());
  std::atomic<std::size_t> cursor{0}, done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= work.size()) return;
      const Graph& g = *source[work[k]].graph;
      try {
        // edgeless graphs have a 0x0 operator: trivially semi-simple
        if (g.m() > 0) results[k] = semisimplicity_report(g, candidates);
      } catch (const std::exception& ex) {
        failures[k] = ex.what();
      }
      const std::size_t d = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(d, work.size());
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t k = 0; k < work.size(); ++k) {
    if (!failures[k].empty()) {
      report.errors.push_back({work[k], source[work[k]].record, failures[k]});
      continue;
    }
    ++report.total_examined;
    if (!results[k] || results[k]->is_semisimple) continue;
    ++report.non_semisimple_count;
    if (results[k]->nonzero_defect) ++report.nonzero_defect_count;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (std::find(results[k]->matched_candidates.begin(), results[k]->matched_candidates.end(),
                    candidates[c].name) != results[k]->matched_candidates.end())
        ++report.candidate_counts[c];
    report.offenders.push_back(std::move(*results[k]));
  }
  std::sort(report.offenders.begin(), report.offenders.end(),
            [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  std::sort(report.errors.begin(), report.errors.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return report;
}

}  // namespace arckernel
