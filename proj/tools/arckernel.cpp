// arckernel command-line interface.
//
//   arckernel analyze --graph6 'C~'
//   arckernel analyze --edges graph.txt --basis bipartite
//   arckernel census --census-n 7 --no-degree-one
//   arckernel census --census-n 8 --no-degree-one --candidates default --jobs 8
//
// Exit codes: 0 success, 2 input error, 3 precondition violation,
// 4 internal invariant breach.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "arckernel/analysis.hpp"
#include "arckernel/census.hpp"
#include "arckernel/graph6.hpp"
#include "arckernel/serialize.hpp"

namespace {

using namespace arckernel;

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInvariant = 4;

/// "default", or ';'-separated ascending coefficient lists ("2,0,1;2,1,1").
std::vector<Candidate> parse_candidates(const std::string& text) {
  if (text.empty() || text == "default") return default_candidates();
  if (text == "none") return {};
  std::vector<Candidate> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(make_candidate(parse_poly_coefficients(item)));
  return out;
}

void emit(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

struct AnalyzeArgs {
  std::string graph6, edges, basis = "all", candidates = "default", out;
  bool identities = false, semisimple = false;
};

int run_analyze(const AnalyzeArgs& a) {
  Graph g;
  try {
    if (!a.graph6.empty()) {
      g = parse_graph6(a.graph6);
    } else {
      std::ifstream f(a.edges);
      if (!f) {
        std::cerr << "error: cannot open edge list " << a.edges << "\n";
        return kExitInput;
      }
      g = parse_edge_list(f);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  AnalysisOptions opt;
  try {
    opt.candidates = parse_candidates(a.candidates);
  } catch (const std::exception& e) {
    std::cerr << "error: bad --candidates: " << e.what() << "\n";
    return kExitInput;
  }
  opt.basis_direct = a.basis == "direct" || a.basis == "all";
  opt.basis_h = a.basis == "h" || a.basis == "all";
  opt.basis_bipartite_required = a.basis == "bipartite";
  opt.basis_bipartite_if_possible = a.basis == "all";
  if (a.identities || a.semisimple) {
    opt.identities = a.identities;
    opt.semisimple = a.semisimple;
  }

  try {
    const Json doc = analyze(g, opt);
    emit(doc, a.out);
    std::cerr << "n=" << g.n() << " m=" << g.m()
              << " dim L=" << doc["dimensions"]["dim_L"].get<long>() << "\n";
  } catch (const NotBipartiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InvariantBreach& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}

struct CensusArgs {
  int n = -1;
  std::string source, candidates = "default", out;
  bool all = false, connected = false, no_degree_one = false, quiet = false;
  int min_degree = 0;
  std::optional<int> regular;
  unsigned jobs = 1;
};

int run_census_cmd(const CensusArgs& a) {
  GraphFilter f;
  f.n = a.n;
  f.connected_only = !a.all;
  f.min_degree = a.min_degree;
  f.no_degree_one = a.no_degree_one;
  f.regular_only = a.regular;

  std::vector<Candidate> candidates;
  try {
    candidates = parse_candidates(a.candidates);
  } catch (const std::exception& e) {
    std::cerr << "error: bad --candidates: " << e.what() << "\n";
    return kExitInput;
  }

  std::vector<CensusEntry> entries;
  std::string provenance;
  if (!a.source.empty()) {
    std::ifstream in(a.source);
    if (!in) {
      std::cerr << "error: cannot open " << a.source << "\n";
      return kExitInput;
    }
    entries = read_graph6_stream(in);
    provenance = "external:" + a.source;
  } else {
    if (a.n < 0) {
      std::cerr << "error: --census-n is required without --source\n";
      return kExitInput;
    }
    try {
      entries = entries_from_graphs(generate_nonisomorphic(a.n, f));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
    provenance = "built-in";
  }
  ProgressFn progress;
  if (!a.quiet)
    progress = [](std::size_t done, std::size_t total) {
      if (done % 500 == 0 || done == total)
        std::cerr << "census: " << done << "/" << total << "\n";
    };
  const CensusReport r = run_census(entries, candidates, f, provenance, a.jobs, progress);
  emit(census_json(r), a.out);
  if (!a.quiet) {
    std::cerr << "examined " << r.total_examined << ", non-semi-simple " << r.non_semisimple_count;
    for (std::size_t c = 0; c < r.candidates.size(); ++c)
      std::cerr << ", (" << r.candidates[c].name << ")^2: " << r.candidate_counts[c];
    std::cerr << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc-space kernels, walk operators and Bass-Hashimoto semi-simplicity"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one graph");
  auto* g6_opt = analyze_cmd->add_option("--graph6", aa.graph6, "graph6 record");
  auto* edges_opt = analyze_cmd->add_option("--edges", aa.edges, "edge-list file ('n m' then 'u v' lines)");
  g6_opt->excludes(edges_opt);
  analyze_cmd->add_option("--basis", aa.basis, "direct|h|bipartite|all")
      ->check(CLI::IsMember({"direct", "h", "bipartite", "all", "none"}));
  analyze_cmd->add_flag("--identities", aa.identities, "run the operator identity suite");
  analyze_cmd->add_flag("--semisimple", aa.semisimple, "report semi-simplicity of T");
  analyze_cmd->add_option("--candidates", aa.candidates,
                          "'default', 'none', or ';'-separated ascending coefficient lists");
  analyze_cmd->add_option("--out", aa.out, "output path (default stdout)");

  CensusArgs ca;
  auto* census_cmd = app.add_subcommand("census", "Semi-simplicity census over a graph stream");
  census_cmd->add_option("--census-n,-n", ca.n, "vertex count");
  census_cmd->add_option("--source", ca.source, "graph6 file, one record per line");
  auto* all_flag = census_cmd->add_flag("--all", ca.all, "include disconnected graphs");
  census_cmd->add_flag("--connected", ca.connected, "connected graphs only (default)")->excludes(all_flag);
  census_cmd->add_flag("--no-degree-one", ca.no_degree_one, "exclude graphs with a degree-1 vertex");
  census_cmd->add_option("--min-degree", ca.min_degree, "minimum degree bound")->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--regular", ca.regular, "only k-regular graphs")->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--candidates", ca.candidates,
                         "'default', 'none', or ';'-separated ascending coefficient lists");
  census_cmd->add_option("--jobs", ca.jobs, "worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--out", ca.out, "output path (default stdout)");
  census_cmd->add_flag("--quiet", ca.quiet, "suppress progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (aa.graph6.empty() && aa.edges.empty()) {
        std::cerr << "error: one of --graph6 or --edges is required\n";
        return kExitInput;
      }
      return run_analyze(aa);
    }
    return run_census_cmd(ca);
  } catch (const InvariantBreach& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
