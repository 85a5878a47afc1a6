#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "kforce/error.hpp"
#include "kforce/generators.hpp"
#include "kforce/graph.hpp"
#include "kforce/graph_io.hpp"
#include "kforce/propagation.hpp"
#include "kforce/serialize.hpp"
#include "kforce/solvers.hpp"
#include "kforce/transforms.hpp"
#include "kforce/verifier.hpp"

namespace kforce {
namespace cli {

namespace cli_detail {

inline std::vector<int> parse_id_list(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw ParseError("empty entry in vertex id list '" + csv + "'");
    }
    token = token.substr(b, e - b + 1);
    try {
      std::size_t pos = 0;
      int v = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument("trailing characters");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("invalid vertex id '" + token + "' in list");
    }
  }
  return out;
}

inline PartitionSpec read_partition_file(const std::string& path, int universe) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open partition file: " + path);
  json doc = json::parse(in);
  if (!doc.is_array()) {
    throw ParseError("partition file must be a JSON array of arrays of vertex ids");
  }
  PartitionSpec spec;
  for (const json& part : doc) {
    if (!part.is_array()) {
      throw ParseError("partition file must be a JSON array of arrays of vertex ids");
    }
    std::vector<int> ids;
    for (const json& v : part) {
      if (!v.is_number_integer()) {
        throw ParseError("partition file must be a JSON array of arrays of vertex ids");
      }
      ids.push_back(v.get<int>());
    }
    spec.parts.push_back(VertexSet::from(universe, ids));
  }
  return spec;
}

inline void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace cli_detail

/// Runs the command-line front end on already-split arguments (argv[0]
/// excluded). Exit codes: 0 success, 1 verification failure, 2 usage or
/// input error, 3 enumeration budget exceeded, 4 bound hypothesis not met.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-forcing and k-power domination toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a named graph and its metadata sidecar");
  std::string gen_family;
  std::string gen_out_path;
  int gp = 0, gn = 0, gk = 0, gq = 0, gc = 0, gr = 0, ga = 0, gb = 0, gcap = 10000;
  double gprob = 0.5;
  std::uint64_t gseed = 0;
  gen->add_option("family", gen_family, "one of: path cycle complete star complete_bipartite sierpinski uq lq tkc gpr random")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "complete_bipartite",
                             "sierpinski", "uq", "lq", "tkc", "gpr", "random"}));
  auto* opt_p = gen->add_option("--p", gp, "base (sierpinski) or pendants per path vertex (gpr)");
  auto* opt_n = gen->add_option("--n", gn, "order, leaf count (star), or depth (sierpinski)");
  auto* opt_k = gen->add_option("-k,--k", gk, "propagation parameter the gadget is built for");
  auto* opt_q = gen->add_option("--q", gq, "gadget size parameter");
  auto* opt_c = gen->add_option("--c", gc, "branch count");
  auto* opt_r = gen->add_option("--r", gr, "path length");
  auto* opt_a = gen->add_option("--a", ga, "first part size");
  auto* opt_b = gen->add_option("--b", gb, "second part size");
  auto* opt_prob = gen->add_option("--prob", gprob, "edge probability");
  auto* opt_seed = gen->add_option("--seed", gseed, "random seed");
  gen->add_option("--cap", gcap, "size cap for the recursive family");
  gen->add_option("-o,--output", gen_out_path, "graph file to write")->required();
  gen->callback([&] {
    auto need = [&](const std::vector<std::pair<CLI::Option*, std::string>>& wanted) {
      for (const auto& [opt, name] : wanted) {
        if (opt->count() == 0) {
          throw ParseError("family '" + gen_family + "' requires " + name);
        }
      }
    };
    Graph g(1, {});
    json params = json::object();
    std::optional<VertexSet> x;
    if (gen_family == "path" || gen_family == "cycle" || gen_family == "complete" ||
        gen_family == "star") {
      need({{opt_n, "--n"}});
      g = standard_family(gen_family, {gn});
      params["n"] = gn;
    } else if (gen_family == "complete_bipartite") {
      need({{opt_a, "--a"}, {opt_b, "--b"}});
      g = standard_family(gen_family, {ga, gb});
      params["a"] = ga;
      params["b"] = gb;
    } else if (gen_family == "sierpinski") {
      need({{opt_p, "--p"}, {opt_n, "--n"}});
      g = sierpinski(gp, gn, gcap);
      params["p"] = gp;
      params["n"] = gn;
    } else if (gen_family == "uq") {
      need({{opt_k, "-k"}, {opt_q, "--q"}});
      Gadget gadget = gadget_uq(gk, gq);
      g = gadget.graph;
      x = gadget.x;
      params["k"] = gk;
      params["q"] = gq;
    } else if (gen_family == "lq") {
      need({{opt_k, "-k"}, {opt_q, "--q"}});
      Gadget gadget = gadget_lq(gk, gq);
      g = gadget.graph;
      x = gadget.x;
      params["k"] = gk;
      params["q"] = gq;
    } else if (gen_family == "tkc") {
      need({{opt_k, "-k"}, {opt_c, "--c"}});
      Gadget gadget = gadget_tkc(gk, gc);
      g = gadget.graph;
      x = gadget.x;
      params["k"] = gk;
      params["c"] = gc;
    } else if (gen_family == "gpr") {
      need({{opt_k, "-k"}, {opt_p, "--p"}, {opt_r, "--r"}});
      g = gadget_gpr(gk, gp, gr);
      params["k"] = gk;
      params["p"] = gp;
      params["r"] = gr;
    } else {
      need({{opt_n, "--n"}, {opt_prob, "--prob"}, {opt_seed, "--seed"}});
      g = random_connected(gn, gprob, gseed);
      params["n"] = gn;
      params["prob"] = gprob;
      params["seed"] = gseed;
    }
    write_graph_file(gen_out_path, g);
    json meta{{"family", gen_family},
              {"params", params},
              {"order", g.order()},
              {"edges", g.edge_count()}};
    meta["x_set"] = x ? set_json(*x) : json(nullptr);
    std::string meta_path = gen_out_path + ".meta.json";
    std::ofstream meta_stream(meta_path);
    if (!meta_stream) throw IoError("cannot write metadata file: " + meta_path);
    meta_stream << meta.dump(2) << "\n";
    cli_detail::emit_json(out, meta);
    rc = 0;
  });

  // ---- closure ----
  auto* closure = app.add_subcommand("closure", "run one propagation to its fixpoint");
  std::string cl_mode, cl_seed_csv, cl_file;
  int cl_k = 0;
  closure->add_option("--mode", cl_mode, "forcing or power")
      ->required()
      ->check(CLI::IsMember({"forcing", "power"}));
  closure->add_option("-k,--k", cl_k, "propagation parameter")->required();
  closure->add_option("--seed-set", cl_seed_csv, "comma-separated vertex ids")->required();
  closure->add_option("file", cl_file, "graph file")->required();
  closure->callback([&] {
    Graph g = read_graph_file(cl_file);
    VertexSet seed = VertexSet::from(g.order(), cli_detail::parse_id_list(cl_seed_csv));
    PropagationTrace trace =
        cl_mode == "forcing" ? forcing_closure(g, cl_k, seed) : power_closure(g, cl_k, seed);
    cli_detail::emit_json(out, trace_json(trace));
    rc = 0;
  });

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "compute a minimum seed set exactly");
  std::string so_param, so_file;
  int so_k = 0;
  SolveOptions so_opts;
  solve->add_option("--param", so_param, "zk, pdk, or gamma")
      ->required()
      ->check(CLI::IsMember({"zk", "pdk", "gamma"}));
  auto* so_k_opt = solve->add_option("-k,--k", so_k, "propagation parameter");
  solve->add_option("--budget", so_opts.budget, "candidate-set budget");
  solve->add_option("--workers", so_opts.workers, "worker threads");
  solve->add_option("file", so_file, "graph file")->required();
  solve->callback([&] {
    if (so_param != "gamma" && so_k_opt->count() == 0) {
      throw ParseError("solve --param " + so_param + " requires -k");
    }
    if (so_param == "gamma" && so_k_opt->count() > 0 && so_k != 0) {
      throw ParseError("solve --param gamma fixes k = 0; drop -k or pass -k 0");
    }
    Graph g = read_graph_file(so_file);
    SolveResult result;
    std::string name;
    int k_out = so_k;
    if (so_param == "zk") {
      result = min_k_forcing(g, so_k, so_opts);
      name = "Zk";
    } else if (so_param == "pdk") {
      result = min_k_power_dominating(g, so_k, so_opts);
      name = "gammaPk";
    } else {
      result = min_dominating(g, so_opts);
      name = "gamma";
      k_out = 0;
    }
    cli_detail::emit_json(out, solve_json(name, k_out, result));
    rc = 0;
  });

  // ---- contract ----
  auto* contract_cmd = app.add_subcommand("contract", "contract a vertex set to one vertex");
  std::string co_set_csv, co_out_path, co_file;
  contract_cmd->add_option("--set", co_set_csv, "comma-separated vertex ids")->required();
  contract_cmd->add_option("-o,--output", co_out_path, "graph file to write")->required();
  contract_cmd->add_option("file", co_file, "graph file")->required();
  contract_cmd->callback([&] {
    Graph g = read_graph_file(co_file);
    VertexSet x = VertexSet::from(g.order(), cli_detail::parse_id_list(co_set_csv));
    ContractionResult result = contract(g, x);
    write_graph_file(co_out_path, result.graph);
    cli_detail::emit_json(out, contraction_json(result));
    rc = 0;
  });

  // ---- xhat ----
  auto* xhat_cmd = app.add_subcommand("xhat", "cut out a vertex set and pin its boundary with pendants");
  std::string xh_set_csv, xh_out_path, xh_file;
  xhat_cmd->add_option("--set", xh_set_csv, "comma-separated vertex ids")->required();
  xhat_cmd->add_option("-o,--output", xh_out_path, "graph file to write")->required();
  xhat_cmd->add_option("file", xh_file, "graph file")->required();
  xhat_cmd->callback([&] {
    Graph g = read_graph_file(xh_file);
    VertexSet x = VertexSet::from(g.order(), cli_detail::parse_id_list(xh_set_csv));
    XHatResult result = build_xhat(g, x);
    write_graph_file(xh_out_path, result.graph);
    cli_detail::emit_json(out, xhat_json(result));
    rc = 0;
  });

  // ---- bound ----
  auto* bound = app.add_subcommand("bound", "two-sided bounds from contractions and partitions");
  bound->require_subcommand(1);

  auto* bc = bound->add_subcommand("contraction", "bound the full graph through one contraction");
  std::string bc_param, bc_set_csv, bc_file;
  int bc_k = 0;
  SolveOptions bc_opts;
  bc->add_option("--param", bc_param, "pdk or zk")
      ->required()
      ->check(CLI::IsMember({"pdk", "zk"}));
  bc->add_option("-k,--k", bc_k, "propagation parameter")->required();
  bc->add_option("--set", bc_set_csv, "comma-separated vertex ids")->required();
  bc->add_option("--budget", bc_opts.budget, "candidate-set budget");
  bc->add_option("--workers", bc_opts.workers, "worker threads");
  bc->add_option("file", bc_file, "graph file")->required();
  bc->callback([&] {
    Graph g = read_graph_file(bc_file);
    VertexSet x = VertexSet::from(g.order(), cli_detail::parse_id_list(bc_set_csv));
    if (bc_param == "pdk") {
      ContractionBoundResult result = pd_contraction_bounds(g, bc_k, x, bc_opts);
      cli_detail::emit_json(out, pd_contraction_json(bc_k, result));
      rc = 0;
    } else {
      ZfContractionBoundResult result = zf_contraction_bounds(g, bc_k, x, bc_opts);
      cli_detail::emit_json(out, zf_contraction_json(bc_k, result));
      rc = result.hypothesis.holds ? 0 : 4;
    }
  });

  auto* bp = bound->add_subcommand("partition", "bound the full graph part by part");
  std::string bp_param, bp_parts_path, bp_file;
  int bp_k = 0, bp_workers = 1;
  SolveOptions bp_opts;
  bp->add_option("--param", bp_param, "pdk or zk")
      ->required()
      ->check(CLI::IsMember({"pdk", "zk"}));
  bp->add_option("-k,--k", bp_k, "propagation parameter")->required();
  bp->add_option("--parts", bp_parts_path, "JSON file: array of arrays of vertex ids")->required();
  bp->add_option("--workers", bp_workers, "parts solved concurrently");
  bp->add_option("--budget", bp_opts.budget, "candidate-set budget");
  bp->add_option("file", bp_file, "graph file")->required();
  bp->callback([&] {
    Graph g = read_graph_file(bp_file);
    PartitionSpec spec = cli_detail::read_partition_file(bp_parts_path, g.order());
    if (bp_param == "pdk") {
      PartitionBoundResult result = pd_partition_bound(g, bp_k, spec, bp_workers, bp_opts);
      cli_detail::emit_json(out, partition_json("gammaPk", bp_k, result));
      rc = 0;
    } else {
      PartitionBoundResult result = zf_partition_bound(g, bp_k, spec, bp_workers, bp_opts);
      cli_detail::emit_json(out, partition_json("Zk", bp_k, result));
      rc = result.hypotheses_hold ? 0 : 4;
    }
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "evaluate every applicable proved bound");
  std::string ve_file, ve_format = "text";
  int ve_k = 0;
  VerifyOptions ve_opts;
  verify->add_option("-k,--k", ve_k, "propagation parameter");
  verify->add_option("--seed", ve_opts.seed, "seed for edge sampling");
  verify->add_option("--budget", ve_opts.solve.budget, "candidate-set budget");
  verify->add_option("--format", ve_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("file", ve_file, "graph file");

  auto* vs = verify->add_subcommand("sierpinski", "check the closed-form value of the recursive family");
  int vs_p = 0, vs_n = 0, vs_k = 0;
  std::string vs_mode = "auto", vs_format = "text";
  vs->add_option("--p", vs_p, "base")->required();
  vs->add_option("--n", vs_n, "depth")->required();
  vs->add_option("-k,--k", vs_k, "propagation parameter")->required();
  vs->add_option("--mode", vs_mode, "auto, exact, or witness")
      ->check(CLI::IsMember({"auto", "exact", "witness"}));
  vs->add_option("--format", vs_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  vs->callback([&] {
    SierpinskiMode mode = SierpinskiMode::exact;
    if (vs_mode == "witness" || (vs_mode == "auto" && vs_n > 3)) {
      mode = SierpinskiMode::witness;
    }
    SierpinskiCheckReport report = check_sierpinski_formula(vs_p, vs_n, vs_k, mode);
    if (vs_format == "json") {
      cli_detail::emit_json(out, sierpinski_report_json(report));
    } else {
      out << sierpinski_report_text(report);
    }
    rc = report.passed ? 0 : 1;
  });

  verify->callback([&] {
    if (vs->parsed()) return;
    if (ve_file.empty()) throw ParseError("verify requires a graph file (or the sierpinski subcommand)");
    if (verify->count("-k") == 0) throw ParseError("verify requires -k");
    Graph g = read_graph_file(ve_file);
    BoundReport report = run_inequality_suite(g, ve_k, ve_opts);
    if (ve_format == "json") {
      cli_detail::emit_json(out, report_json(report));
    } else {
      out << report_text(report);
    }
    rc = report.all_passed() ? 0 : 1;
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
    return rc;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: invalid JSON input: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace kforce
