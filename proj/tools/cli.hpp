#pragma once

// Command-line front end. `run_cli` is the whole program; main() only forwards
// argv and the standard streams so the tests can drive it in-process.
//
// Exit codes: 0 success / pass, 1 verified failure or budget-limited result,
// 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "drs/drs.hpp"
#include "drs/json_io.hpp"

namespace drs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Input problem the user can fix; reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline LandmarkSet parse_vertex_list(const std::string& text) {
  LandmarkSet out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in vertex list");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 9)
      throw UsageError("bad vertex id '" + item + "'");
    out.push_back(static_cast<VertexId>(std::stoul(item)));
  }
  if (out.empty()) throw UsageError("vertex list is empty");
  return out;
}

struct GraphSource {
  std::string graph_file;
  std::string family;

  void add_options(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", graph_file, "edge-list file");
    auto* f = cmd->add_option("--family", family, "q<n>, f<n> or h<n>,<q>");
    g->excludes(f);
    f->excludes(g);
  }

  bool is_family() const { return !family.empty(); }

  Graph load() const {
    if (graph_file.empty() == family.empty())
      throw UsageError("give exactly one of --graph or --family");
    if (is_family()) return build_graph(parse_family(family));
    std::ifstream in(graph_file);
    if (!in) throw UsageError("cannot open " + graph_file);
    return read_edge_list(in);
  }
};

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

// --- verify -----------------------------------------------------------------

struct VerifyCmd {
  GraphSource source;
  std::string set;
  std::string kind;
  std::optional<VertexId> anchor;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "check a landmark set");
    source.add_options(cmd);
    cmd->add_option("--set", set, "comma-separated vertex ids")->required();
    cmd->add_option("--kind", kind, "resolving | doubly | ddrs")
        ->required()
        ->check(CLI::IsMember({"resolving", "doubly", "ddrs"}));
    cmd->add_option("--anchor", anchor, "reference vertex for ddrs");
  }

  int run(std::ostream& out) const {
    if (kind == "ddrs" && !anchor) throw UsageError("--kind ddrs needs --anchor");
    const Graph g = source.load();
    const LandmarkSet s = parse_vertex_list(set);
    Verdict v;
    if (kind == "resolving") {
      v = is_resolving(g, s);
    } else if (kind == "doubly") {
      v = is_doubly_resolving(g, s);
    } else {
      v = is_ddrs(g, *anchor, s);
    }
    out << dump(to_json(kind, v));
    return v.passed ? kExitOk : kExitFail;
  }
};

// --- solve ------------------------------------------------------------------

struct SolveCmd {
  GraphSource source;
  std::string objective;
  std::optional<VertexId> anchor;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("solve", "exact minimum landmark set");
    source.add_options(cmd);
    cmd->add_option("--objective", objective, "beta | psi | phi")
        ->required()
        ->check(CLI::IsMember({"beta", "psi", "phi"}));
    cmd->add_option("--anchor", anchor,
                    "phi: reference vertex; psi: vertex forced into the set");
    cmd->add_option("--budget", budget, "search-node budget");
    cmd->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);
  }

  int run(std::ostream& out) const {
    const Graph g = source.load();
    SolveOptions opt;
    opt.budget = budget;
    opt.threads = threads;
    opt.vertex_transitive = source.is_family();
    SolveResult r;
    switch (parse_objective(objective)) {
      case Objective::kBeta:
        r = solve_beta(g, opt);
        break;
      case Objective::kPsi:
        r = anchor ? solve_cover_exact(build_psi_cover_anchored(g, *anchor),
                                       opt.budget)
                   : solve_psi_general(g, opt);
        break;
      case Objective::kPhi:
        r = anchor ? solve_phi(g, *anchor, opt) : solve_phi_max(g, opt);
        break;
    }
    out << dump(to_json(r));
    return r.optimal ? kExitOk : kExitFail;
  }
};

// --- bounds -----------------------------------------------------------------

struct BoundsCmd {
  std::size_t upto = 0;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "bounds", "upper bounds P(n) on the doubly resolving number of Q_n");
    cmd->add_option("--upto", upto, "largest n")->required()->check(
        CLI::PositiveNumber);
  }

  int run(std::ostream& out) const {
    out << bounds_upto(upto).to_csv();
    return kExitOk;
  }
};

// --- construct --------------------------------------------------------------

struct ConstructCmd {
  std::string family;
  std::string kind;
  std::string input_set;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("construct", "explicit constructions");
    cmd->add_option("--family", family, "source family")->required();
    cmd->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"ddrs-odd", "ddrs-even", "hamming-const",
                               "hamming-levels", "fold", "unfold", "double"}));
    cmd->add_option("--input-set", input_set,
                    "resolving set to transfer (default: a minimum one)");
  }

  int run(std::ostream& out) const {
    const Family f = parse_family(family);
    Json j;
    j["kind"] = kind;
    LandmarkSet set;
    Verdict verdict;
    std::string target;
    std::string check;

    auto need = [&](bool ok, const char* what) {
      if (!ok) throw UsageError("--kind " + kind + " needs " + what);
    };
    auto source_set = [&](auto const& metric) {
      if (!input_set.empty()) return parse_vertex_list(input_set);
      return solve_beta(metric).witness;
    };

    if (kind == "ddrs-odd" || kind == "ddrs-even") {
      need(f.kind == Family::Kind::kFolded, "a folded family f<n>");
      set = kind == "ddrs-odd" ? folded_ddrs_odd(f.n) : folded_ddrs_even(f.n);
      target = to_string(f);
      check = "ddrs";
      verdict = is_ddrs(FoldedMetric(f.n), 0, set);
    } else if (kind == "hamming-const" || kind == "hamming-levels") {
      need(f.kind != Family::Kind::kFolded, "a Hamming family h<n>,<q> or q<n>");
      set = kind == "hamming-const" ? hamming_ddrs_constant(f.n, f.q)
                                    : hamming_ddrs_levels(f.n, f.q);
      target = to_string(f);
      check = "ddrs";
      verdict = is_ddrs(HammingMetric(f.n, f.q), 0, set);
    } else if (kind == "fold") {
      need(f.kind == Family::Kind::kFolded, "a folded family f<n>");
      const FoldedMetric src(f.n, kGraphVertexCap);
      set = fold_resolving_map(f.n, source_set(src));
      target = to_string(Family::cube(f.n));
      check = "resolving";
      verdict = is_resolving(CubeMetric(f.n), set);
    } else {
      need(f.kind == Family::Kind::kCube, "a hypercube family q<n>");
      const CubeMetric src(f.n, kGraphVertexCap);
      const LandmarkSet in = source_set(src);
      const int target_n = kind == "unfold" ? f.n : f.n + 1;
      set = kind == "unfold" ? unfold_resolving_map(f.n, in)
                             : double_resolving_map(f.n, in);
      target = to_string(Family::folded(target_n));
      check = "resolving";
      verdict = is_resolving(FoldedMetric(target_n), set);
    }
    j["family"] = target;
    if (check == "ddrs") j["anchor"] = 0;
    j["set"] = set;
    j["size"] = set.size();
    j["check"] = check;
    j["verdict"] = verdict.passed ? "pass" : "fail";
    out << dump(j);
    return verdict.passed ? kExitOk : kExitFail;
  }
};

// --- gadget -----------------------------------------------------------------

struct GadgetCmd {
  std::string file;
  std::string variant = "bipartite";
  int copies = 1;
  std::string matching;
  std::string edges_file;
  std::string roles_file;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "gadget", "reduction graph from a 3-dimensional matching instance");
    cmd->add_option("--3dm", file, "instance file")->required();
    cmd->add_option("--variant", variant)
        ->check(CLI::IsMember({"split", "bipartite", "cobipartite"}));
    cmd->add_option("--copies", copies)->check(CLI::PositiveNumber);
    cmd->add_option("--matching", matching,
                    "perfect matching (triple indices), used in every copy");
    cmd->add_option("--edges", edges_file, "write the edge list here");
    cmd->add_option("--roles", roles_file, "write the role map here");
  }

  int run(std::ostream& out) const {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open " + file);
    const ThreeDMInstance inst = parse_3dm(in);
    const GadgetGraph g = build_gadget(inst, parse_variant(variant), copies);
    const GapArithmetic gap = gap_arithmetic(g);

    if (!edges_file.empty()) {
      std::ofstream eo(edges_file);
      if (!eo) throw UsageError("cannot write " + edges_file);
      write_edge_list(eo, g.graph());
    }
    if (!roles_file.empty()) {
      std::ofstream ro(roles_file);
      if (!ro) throw UsageError("cannot write " + roles_file);
      write_roles(ro, g);
    }

    Json j;
    j["variant"] = variant;
    j["copies"] = copies;
    j["n"] = inst.n;
    j["triples"] = inst.triples.size();
    j["vertices"] = g.graph().vertex_count();
    j["edges"] = g.graph().edge_count();
    j["I"] = g.i_size();
    j["J"] = g.j_size();
    j["v"] = gap.v;
    j["n_prime"] = gap.n_prime;
    j["K"] = gap.k;
    j["cost_threshold"] = gap.cost_threshold;
    int code = kExitOk;
    if (!matching.empty()) {
      std::vector<std::size_t> m;
      for (VertexId x : parse_vertex_list(matching)) m.push_back(x);
      const LandmarkSet l = witness_set(g, inst, m);
      const Verdict doubly = is_doubly_resolving(g.graph(), l);
      const Verdict resolving = is_resolving(g.graph(), l);
      Json w;
      w["set"] = l;
      w["size"] = l.size();
      w["doubly_resolving"] = doubly.passed ? "pass" : "fail";
      w["resolving"] = resolving.passed ? "pass" : "fail";
      j["witness"] = w;
      if (!doubly.passed || !resolving.passed) code = kExitFail;
    }
    out << dump(j);
    return code;
  }
};

// --- tables -----------------------------------------------------------------

struct TablesCmd {
  int which = 0;
  int limit = 6;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("tables", "reproduce the result tables");
    cmd->add_option("--which", which, "table 1..5")
        ->required()
        ->check(CLI::Range(1, 5));
    cmd->add_option("--limit", limit, "largest n solved exactly (tables 1, 5)");
    cmd->add_option("--budget", budget, "search-node budget per solve");
    cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  }

  int run(std::ostream& out) const {
    if (which >= 2 && which <= 4) {
      const auto table = bounds_upto(93);
      const auto [lo, hi] = which == 2   ? std::pair{1, 22}
                            : which == 3 ? std::pair{23, 28}
                                         : std::pair{29, 93};
      out << "n,P\n";
      for (int n = lo; n <= hi; ++n) out << n << ',' << table(n) << '\n';
      return kExitOk;
    }

    bool all_optimal = true;
    SolveOptions opt;
    opt.budget = budget;
    opt.threads = threads;
    opt.vertex_transitive = true;
    auto cell = [&](const SolveResult& r) {
      all_optimal = all_optimal && r.optimal;
      return (r.optimal ? "" : "<=") + std::to_string(r.value);
    };

    if (which == 1) {
      out << "n,beta_Q,beta_F\n";
      for (int n = 1; n <= 9; ++n) {
        out << n << ',';
        out << (n <= limit ? cell(solve_beta(CubeMetric(n), opt)) : "skipped");
        out << ',';
        if (n == 1) {
          out << '-';
        } else {
          out << (n <= limit ? cell(solve_beta(FoldedMetric(n), opt))
                             : "skipped");
        }
        out << '\n';
      }
    } else {
      out << "n,beta_F,psi_F,phi_F\n";
      for (int n = 2; n <= 10; ++n) {
        out << n;
        if (n > limit) {
          out << ",skipped,skipped,skipped\n";
          continue;
        }
        const FoldedMetric f(n);
        out << ',' << cell(solve_beta(f, opt)) << ','
            << cell(solve_psi_general(f, opt)) << ','
            << cell(solve_phi_max(f, opt)) << '\n';
      }
    }
    return all_optimal ? kExitOk : kExitFail;
  }
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Resolving, doubly resolving and doubly distance resolving sets",
               "drs"};
  app.require_subcommand(1, 1);
  VerifyCmd verify;
  SolveCmd solve;
  BoundsCmd bounds;
  ConstructCmd construct;
  GadgetCmd gadget;
  TablesCmd tables;
  verify.add(app);
  solve.add(app);
  bounds.add(app);
  construct.add(app);
  gadget.add(app);
  tables.add(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "verify") return verify.run(out);
    if (name == "solve") return solve.run(out);
    if (name == "bounds") return bounds.run(out);
    if (name == "construct") return construct.run(out);
    if (name == "gadget") return gadget.run(out);
    return tables.run(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace drs::cli
