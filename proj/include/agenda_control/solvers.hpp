#pragma once

// Exact decision-and-witness solvers for the eight standard control
// problems and their exact-budget generalizations: a multimode brute-force
// oracle, the polynomial/FPT routines (dynamic programs over beating
// paths, reduction rules, set-cover subroutines, configuration + ILP
// machinery), and a dispatcher that routes each instance to the most
// specific exact algorithm.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agenda_control/control.hpp"
#include "agenda_control/graphs.hpp"
#include "agenda_control/ilp.hpp"

namespace agenda_control {

struct SolveCaps {
  // Brute-force oracle guards.
  int bf_max_candidates = 7;
  int bf_max_total_votes = 8;
  int bf_max_budget = 4;
  std::size_t bf_max_enumeration = 5'000'000;
  // Dedicated-solver guards.
  int mgcev_max_candidates = 5;
  std::size_t edcev_max_configs = 2'000'000;
  std::size_t ilp_max_nodes = 50'000'000;
  std::size_t graph_max_nodes = 20'000'000;
  int jobs = 1;

  // Applies overrides of the form "m=<int>,n=<int>,k=<int>" from the
  // AGENDA_CONTROL_CAPS environment variable.
  static SolveCaps from_env();
};

// Exhaustive search over all budget-respecting edit tuples; minimum-size
// witness, deterministic tie-break. The ground-truth oracle.
Solution brute_force_solve(const ControlInstance& inst, const SolveCaps& caps = {});

// Fast paths for amendment-family instances whose distinguished candidate
// is first in the agenda (winner-iff-Condorcet territory): immunity for
// CCAC/DCDC, counting rules for CCDC/DCAC/DCAV/DCDV.
Solution solve_first_position(const ControlInstance& inst);

// Dynamic program over unregistered predecessors and beating paths.
Solution solve_ccac_amendment(const ControlInstance& inst);

// Mandatory successor deletions plus a right-to-left table over the
// predecessors of the distinguished candidate.
Solution solve_ccdc_amendment(const ControlInstance& inst);

// Per-rival Turing reduction to the constructive candidate solvers.
Solution solve_dcac_dcdc_amendment(const ControlInstance& inst);

// Exhaustive application of the two deletion rules (unbeaten successors;
// winners preceding the distinguished candidate). Rejects the relative
// family with d >= 2, where the second rule is unsound.
Solution solve_ccdc_full_amendment(const ControlInstance& inst);

Solution solve_dcdc_full_amendment(const ControlInstance& inst);

// Constant-size solution search plus the paired-endpoints enumeration.
Solution solve_dcac_m_minus_h(const ControlInstance& inst, const SolveCaps& caps = {});

// Subset enumeration over unregistered predecessors with a red/blue
// dominating-set subroutine per branch.
Solution solve_ccac_m_minus_h_fpt(const ControlInstance& inst, const SolveCaps& caps = {});

// Majority Graph Control by Editing Voters: exact-size submultisets whose
// combined majority graph equals the target.
struct MGCEVInstance {
  std::vector<Candidate> candidates;
  std::vector<Vote> registered_pool;    // V
  std::vector<Vote> unregistered_pool;  // W
  OrientedGraph target;
  int keep_registered = 0;    // |V'| = k
  int keep_unregistered = 0;  // |W'| = k'
};

using VotePair = std::pair<std::vector<Vote>, std::vector<Vote>>;

std::optional<VotePair> solve_mgcev(const MGCEVInstance& inst, const SolveCaps& caps = {});

// Exact Constructive/Destructive Control by Editing Voters.
struct ExactEditInstance {
  std::vector<Candidate> candidates;
  Candidate distinguished;
  std::vector<Vote> registered_pool;    // V
  std::vector<Vote> unregistered_pool;  // W
  Agenda agenda;
  int keep_registered = 0;    // |V'| = k
  int keep_unregistered = 0;  // |W'| = k'
  Goal goal = Goal::destructive;
  ProcedureSpec procedure;
};

// Configuration enumeration over the agenda prefix around the
// distinguished candidate, delegating each surviving configuration to the
// majority-graph solver.
std::optional<VotePair> solve_edcev_h_amendment(const ExactEditInstance& inst,
                                                const SolveCaps& caps = {});

// Feasibility program over the 2^l signature classes of votes.
std::optional<VotePair> solve_eccev_successive(const ExactEditInstance& inst,
                                               const SolveCaps& caps = {});

// Anti-domination greedy for the distinguished candidate, then a
// pro-domination greedy per predecessor.
std::optional<VotePair> solve_edcev_successive(const ExactEditInstance& inst);

// Subset enumeration over the successors of the distinguished candidate
// with forced predecessor deletions.
Solution solve_ccdc_successive_fpt(const ControlInstance& inst);

// Subset enumeration over unregistered successors, then single
// predecessor additions.
Solution solve_dcac_successive_fpt(const ControlInstance& inst);

// Routing metadata: which algorithm serves a (problem, procedure,
// position) cell and why.
struct Route {
  std::string algorithm;
  std::string rationale;
};

enum class ProcedureClass {
  amendment,        // absolute h = 1
  h_amendment,      // absolute h >= 2, below full at some arising size
  full_amendment,   // relative d = 1, or absolute h covering every arising size
  m_minus_h,        // relative d >= 2
  successive,
};

std::string procedure_class_name(ProcedureClass c);
ProcedureClass classify_procedure(const ControlInstance& inst);
Route routing_for(ControlProblem problem, ProcedureClass proc, bool distinguished_first);

// Routes to the most specific exact algorithm, falling back to the
// brute-force oracle for hardness-only and open cells; re-simulates every
// YES witness before returning.
Solution dispatch_solve(const ControlInstance& inst, const SolveCaps& caps = {});

}  // namespace agenda_control
