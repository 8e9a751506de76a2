#pragma once

// Control-problem instances, solution/witness types, and the oriented
// graphs used both as majority-graph targets and as McGarvey inputs.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agenda_control/core.hpp"
#include "agenda_control/procedures.hpp"

namespace agenda_control {

enum class ControlProblem { CCAV, CCDV, CCAC, CCDC, DCAV, DCDV, DCAC, DCDC, MULTIMODE };
enum class Goal { constructive, destructive };

std::string control_problem_name(ControlProblem p);
ControlProblem control_problem_from_name(const std::string& name);
bool is_constructive(ControlProblem p);  // MULTIMODE -> input_error (goal is explicit)

struct Budgets {
  int av = 0;  // unregistered votes that may be added
  int dv = 0;  // registered votes that may be deleted
  int ac = 0;  // unregistered candidates that may be added
  int dc = 0;  // registered candidates that may be deleted

  bool operator==(const Budgets&) const = default;
};

// A multimode control input. The named problem pins which budgets may be
// nonzero and which auxiliary sets may be nonempty; MULTIMODE allows all
// four edit types at once.
struct ControlInstance {
  std::vector<Candidate> registered;    // C, sorted
  std::vector<Candidate> unregistered;  // D, sorted
  Candidate distinguished;              // p, in C
  std::vector<Vote> registered_votes;   // V, over C u D
  std::vector<Vote> unregistered_votes; // W, over C u D
  Agenda agenda;                        // over C u D
  Budgets budgets;
  Goal goal = Goal::constructive;
  ControlProblem problem = ControlProblem::MULTIMODE;
  ProcedureSpec procedure;

  void validate() const;

  std::vector<Candidate> all_candidates() const;  // C u D, sorted
  int total_candidates() const;
  bool has(const Candidate& c) const;

  // The unedited election: registered candidates, registered votes.
  Election base_election() const;
};

// Concrete edit sets certifying a YES answer. Votes are multisets.
struct Witness {
  std::vector<Candidate> deleted_candidates;
  std::vector<Candidate> added_candidates;
  std::vector<Vote> deleted_votes;
  std::vector<Vote> added_votes;

  int size() const;
  bool empty() const { return size() == 0; }
};

struct Solution {
  bool decision = false;
  Witness witness;
  bool minimal = false;
  std::string algorithm;
  std::string rationale;
};

// Winner of the edited election (candidate edits restrict votes and
// agenda; relative amendment steps are re-derived from the edited size).
Candidate winner_after_edit(const ControlInstance& inst, const Witness& w);

// True when the witness respects budgets/shapes and the edited election
// satisfies the instance goal. A NO solution verifies trivially.
bool verify_solution(const ControlInstance& inst, const Solution& sol);

// Directed graph with at most one arc per pair and no loops. Weights are
// optional and unused by the McGarvey construction.
struct OrientedGraph {
  std::vector<std::string> vertices;                    // sorted, unique
  std::set<std::pair<std::string, std::string>> arcs;   // (from, to)
  std::optional<std::vector<int>> weights;              // parallel to arcs when present

  OrientedGraph() = default;
  OrientedGraph(std::vector<std::string> vs, std::vector<std::pair<std::string, std::string>> as);
  bool has_arc(const std::string& a, const std::string& b) const { return arcs.count({a, b}) > 0; }
};

}  // namespace agenda_control
