// Command-line front end: winner determination, control solving, the
// brute-force oracle, instance generation, reduction verification, and
// graph-problem solving over the line-oriented text formats.
//
// Exit codes: 0 success/YES/AGREE, 1 NO/DISAGREE, 2 input error,
// 3 resource cap exceeded, 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "agenda_control/io.hpp"
#include "agenda_control/random_gen.hpp"
#include "agenda_control/reductions.hpp"
#include "agenda_control/solvers.hpp"

namespace ac = agenda_control;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ac::input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ac::input_error("cannot write file: " + path);
  out << text;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::string cur;
  for (char ch : text + " ") {
    if (ch == ' ' || ch == ',' || ch == '\t') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return ids;
}

void print_solution(const ac::Solution& sol, bool porcelain) {
  if (porcelain) {
    std::cout << "decision=" << (sol.decision ? "yes" : "no") << "\n";
    std::cout << "algorithm=" << sol.algorithm << "\n";
    std::cout << "rationale=" << sol.rationale << "\n";
    std::cout << "minimal=" << (sol.minimal ? "true" : "false") << "\n";
    for (const auto& c : sol.witness.deleted_candidates) std::cout << "delete-candidate=" << c << "\n";
    for (const auto& c : sol.witness.added_candidates) std::cout << "add-candidate=" << c << "\n";
    for (const auto& v : sol.witness.deleted_votes) {
      std::cout << "delete-vote=" << v.multiplicity << ":";
      for (std::size_t i = 0; i < v.order.size(); ++i) std::cout << (i ? ">" : "") << v.order[i];
      std::cout << "\n";
    }
    for (const auto& v : sol.witness.added_votes) {
      std::cout << "add-vote=" << v.multiplicity << ":";
      for (std::size_t i = 0; i < v.order.size(); ++i) std::cout << (i ? ">" : "") << v.order[i];
      std::cout << "\n";
    }
    return;
  }
  std::cout << ac::serialize_report(sol);
}

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for sequential parliamentary voting and election control"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "emit key=value lines for scripting");

  // winner
  auto* winner = app.add_subcommand("winner", "determine a procedure winner");
  std::string w_election, w_agenda, w_procedure = "successive";
  bool w_trace = false;
  winner->add_option("--election", w_election, "election file")->required();
  winner->add_option("--agenda", w_agenda, "agenda as space- or comma-separated ids")->required();
  winner->add_option("--procedure", w_procedure,
                     "successive | 'amendment h=<k>' | 'amendment h=m-<d>'");
  winner->add_flag("--trace", w_trace, "print the elimination trace");

  // solve / oracle
  auto* solve = app.add_subcommand("solve", "solve a control instance via the routed algorithm");
  std::string s_instance;
  bool s_minimal = false;
  solve->add_option("--instance", s_instance, "control-instance file")->required();
  solve->add_flag("--minimal", s_minimal, "fail unless the witness is provably minimal");

  auto* oracle = app.add_subcommand("oracle", "solve a control instance by exhaustive search");
  std::string o_instance;
  int o_jobs = 1;
  oracle->add_option("--instance", o_instance, "control-instance file")->required();
  oracle->add_option("--jobs", o_jobs, "worker threads for the enumeration");

  // generate
  auto* generate = app.add_subcommand("generate", "generate instances");
  generate->require_subcommand(1);
  auto* gen_red = generate->add_subcommand("reduction", "build a catalog reduction instance");
  std::string gr_kind, gr_graph, gr_out;
  int gr_h = 1, gr_kappa = -1;
  std::uint64_t gr_seed = 0;
  gen_red->add_option("--kind", gr_kind, "catalog tag")->required();
  gen_red->add_option("--graph", gr_graph, "source graph file")->required();
  gen_red->add_option("--h", gr_h, "step parameter for lifted entries");
  gen_red->add_option("--kappa", gr_kappa, "override the source kappa");
  gen_red->add_option("--seed", gr_seed, "permutes agenda positions the construction leaves free");
  gen_red->add_option("--out", gr_out, "output file")->required();

  auto* gen_rand = generate->add_subcommand("random", "build a random control instance");
  std::string ra_problem = "CCDC", ra_out, ra_procedure = "amendment h=1";
  int ra_candidates = 4, ra_votes = 5, ra_budget = 1, ra_unreg = 0, ra_unreg_votes = 0;
  std::uint64_t ra_seed = 1;
  gen_rand->add_option("--candidates", ra_candidates, "registered candidates")->required();
  gen_rand->add_option("--votes", ra_votes, "registered votes")->required();
  gen_rand->add_option("--problem", ra_problem, "control problem name")->required();
  gen_rand->add_option("--seed", ra_seed, "rng seed")->required();
  gen_rand->add_option("--out", ra_out, "output file")->required();
  gen_rand->add_option("--budget", ra_budget, "edit budget");
  gen_rand->add_option("--procedure", ra_procedure, "procedure spec");
  gen_rand->add_option("--unregistered", ra_unreg, "unregistered candidates (AC problems)");
  gen_rand->add_option("--unregistered-votes", ra_unreg_votes, "unregistered votes (AV problems)");

  // verify-reduction
  auto* verify = app.add_subcommand("verify-reduction", "check a reduction against both oracles");
  std::string v_kind, v_graph;
  int v_h = 1, v_kappa = -1;
  std::uint64_t v_seed = 0;
  verify->add_option("--kind", v_kind, "catalog tag")->required();
  verify->add_option("--graph", v_graph, "source graph file")->required();
  verify->add_option("--h", v_h, "step parameter for lifted entries");
  verify->add_option("--kappa", v_kappa, "override the source kappa");
  verify->add_option("--seed", v_seed, "agenda permutation seed");

  // graph-solve
  auto* gsolve = app.add_subcommand("graph-solve", "solve an auxiliary graph problem");
  std::string g_problem, g_graph;
  int g_kappa = -1;
  gsolve->add_option("--problem", g_problem, "rbds | clique | biclique | perfect-code")
      ->required();
  gsolve->add_option("--graph", g_graph, "graph file")->required();
  gsolve->add_option("--kappa", g_kappa, "witness size");

  // canonicalize
  auto* canon = app.add_subcommand("canonicalize", "re-emit a document in canonical form");
  std::string c_in, c_out;
  canon->add_option("--in", c_in, "input document")->required();
  canon->add_option("--out", c_out, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);
  const ac::SolveCaps caps = ac::SolveCaps::from_env();

  if (*winner) {
    const ac::Election e = ac::parse_election(read_file(w_election));
    const ac::Agenda agenda{split_ids(w_agenda)};
    const ac::ProcedureSpec spec = ac::procedure_from_string(w_procedure);
    ac::EliminationTrace trace;
    ac::Candidate win;
    if (spec.kind == ac::ProcedureKind::successive) {
      std::tie(win, trace) = ac::successive_winner(e, agenda);
    } else {
      std::tie(win, trace) = ac::h_amendment_winner(e, agenda, spec);
    }
    if (porcelain) {
      std::cout << "winner=" << win << "\n";
    } else {
      std::cout << win << "\n";
    }
    if (w_trace) {
      for (const auto& round : trace.rounds) {
        std::cout << (porcelain ? "round=" : "round: ") << round.considered << " eliminates";
        for (const auto& c : round.eliminated) std::cout << " " << c;
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (*solve || *oracle) {
    const bool use_oracle = static_cast<bool>(*oracle);
    const ac::ControlInstance inst =
        ac::parse_control_instance(read_file(use_oracle ? o_instance : s_instance));
    ac::SolveCaps run_caps = caps;
    if (use_oracle) run_caps.jobs = o_jobs;
    const ac::Solution sol =
        use_oracle ? ac::brute_force_solve(inst, run_caps) : ac::dispatch_solve(inst, run_caps);
    if (!use_oracle && s_minimal && sol.decision && !sol.minimal)
      throw ac::resource_error("the routed algorithm does not certify witness minimality here");
    print_solution(sol, porcelain);
    return sol.decision ? 0 : 1;
  }

  if (*gen_red) {
    ac::GraphInstance src = ac::parse_graph_instance(read_file(gr_graph));
    if (gr_kappa >= 0) src.kappa = gr_kappa;
    ac::ReductionKind kind{ac::reduction_tag_from_name(gr_kind), gr_h};
    src.kind = ac::reduction_source_problem(kind.tag);
    const ac::ControlInstance inst = ac::build_reduction(kind, src, gr_seed);
    write_file(gr_out, ac::serialize_control_instance(inst));
    if (porcelain) {
      std::cout << "written=" << gr_out << "\n";
    } else {
      std::cout << "wrote " << gr_out << "\n";
    }
    return 0;
  }

  if (*gen_rand) {
    ac::Rng rng(ra_seed);
    ac::RandomInstanceOptions opt;
    opt.problem = ac::control_problem_from_name(ra_problem);
    opt.procedure = ac::procedure_from_string(ra_procedure);
    opt.num_candidates = ra_candidates;
    opt.num_votes = ra_votes;
    opt.budget = ra_budget;
    opt.num_unregistered = ra_unreg;
    opt.num_unregistered_votes = ra_unreg_votes;
    if (opt.num_unregistered == 0 &&
        (opt.problem == ac::ControlProblem::CCAC || opt.problem == ac::ControlProblem::DCAC)) {
      opt.num_unregistered = 2;
    }
    if (opt.num_unregistered_votes == 0 &&
        (opt.problem == ac::ControlProblem::CCAV || opt.problem == ac::ControlProblem::DCAV)) {
      opt.num_unregistered_votes = ra_votes;
    }
    const ac::ControlInstance inst = ac::random_control_instance(rng, opt);
    write_file(ra_out, ac::serialize_control_instance(inst));
    if (porcelain) {
      std::cout << "written=" << ra_out << "\n";
    } else {
      std::cout << "wrote " << ra_out << "\n";
    }
    return 0;
  }

  if (*verify) {
    ac::GraphInstance src = ac::parse_graph_instance(read_file(v_graph));
    if (v_kappa >= 0) src.kappa = v_kappa;
    ac::ReductionKind kind{ac::reduction_tag_from_name(v_kind), v_h};
    src.kind = ac::reduction_source_problem(kind.tag);
    const ac::ReductionReport report = ac::verify_reduction(kind, src, v_seed);
    if (porcelain) {
      std::cout << "agree=" << (report.agree ? "true" : "false") << "\n";
      std::cout << "source=" << (report.source_yes ? "yes" : "no") << "\n";
      std::cout << "target=" << (report.target_yes ? "yes" : "no") << "\n";
    } else {
      std::cout << (report.agree ? "AGREE" : "DISAGREE") << " " << report.detail << "\n";
    }
    return report.agree ? 0 : 1;
  }

  if (*gsolve) {
    ac::GraphInstance inst = ac::parse_graph_instance(read_file(g_graph));
    inst.kind = ac::graph_problem_from_name(g_problem);
    if (g_kappa >= 0) inst.kappa = g_kappa;
    inst.validate();
    std::vector<std::string> witness;
    bool yes = false;
    switch (inst.kind) {
      case ac::GraphProblem::rbds: {
        auto r = ac::solve_rbds(inst.bipartite(), inst.kappa);
        if (r) {
          yes = true;
          witness = *r;
        }
        break;
      }
      case ac::GraphProblem::clique: {
        auto r = ac::solve_clique(inst.general(), inst.kappa);
        if (r) {
          yes = true;
          witness = *r;
        }
        break;
      }
      case ac::GraphProblem::biclique: {
        auto r = ac::solve_biclique(inst.bipartite(), inst.kappa);
        if (r) {
          yes = true;
          witness = r->first;
          witness.insert(witness.end(), r->second.begin(), r->second.end());
        }
        break;
      }
      case ac::GraphProblem::perfect_code: {
        auto r = ac::solve_perfect_code(inst.general(), inst.kappa);
        if (r) {
          yes = true;
          witness = *r;
        }
        break;
      }
    }
    if (porcelain) {
      std::cout << "decision=" << (yes ? "yes" : "no") << "\n";
      for (const auto& v : witness) std::cout << "witness=" << v << "\n";
    } else {
      std::cout << (yes ? "YES" : "NO");
      for (const auto& v : witness) std::cout << " " << v;
      std::cout << "\n";
    }
    return yes ? 0 : 1;
  }

  if (*canon) {
    const std::string text = ac::canonicalize_document(read_file(c_in));
    if (c_out.empty()) {
      std::cout << text;
    } else {
      write_file(c_out, text);
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ac::input_error& e) {
    std::cerr << "input error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const ac::resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const ac::internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
