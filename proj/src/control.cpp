#include "agenda_control/control.hpp"

#include <algorithm>
#include <map>

namespace agenda_control {

std::string control_problem_name(ControlProblem p) {
  switch (p) {
    case ControlProblem::CCAV: return "CCAV";
    case ControlProblem::CCDV: return "CCDV";
    case ControlProblem::CCAC: return "CCAC";
    case ControlProblem::CCDC: return "CCDC";
    case ControlProblem::DCAV: return "DCAV";
    case ControlProblem::DCDV: return "DCDV";
    case ControlProblem::DCAC: return "DCAC";
    case ControlProblem::DCDC: return "DCDC";
    case ControlProblem::MULTIMODE: return "MULTIMODE";
  }
  throw internal_error("unreachable control problem");
}

ControlProblem control_problem_from_name(const std::string& name) {
  static const std::map<std::string, ControlProblem> table = {
      {"CCAV", ControlProblem::CCAV}, {"CCDV", ControlProblem::CCDV},
      {"CCAC", ControlProblem::CCAC}, {"CCDC", ControlProblem::CCDC},
      {"DCAV", ControlProblem::DCAV}, {"DCDV", ControlProblem::DCDV},
      {"DCAC", ControlProblem::DCAC}, {"DCDC", ControlProblem::DCDC},
      {"MULTIMODE", ControlProblem::MULTIMODE}};
  auto it = table.find(name);
  if (it == table.end()) throw input_error("unknown control problem: " + name);
  return it->second;
}

bool is_constructive(ControlProblem p) {
  switch (p) {
    case ControlProblem::CCAV:
    case ControlProblem::CCDV:
    case ControlProblem::CCAC:
    case ControlProblem::CCDC:
      return true;
    case ControlProblem::DCAV:
    case ControlProblem::DCDV:
    case ControlProblem::DCAC:
    case ControlProblem::DCDC:
      return false;
    case ControlProblem::MULTIMODE:
      throw input_error("MULTIMODE carries an explicit goal");
  }
  throw internal_error("unreachable control problem");
}

std::vector<Candidate> ControlInstance::all_candidates() const {
  std::vector<Candidate> all = registered;
  all.insert(all.end(), unregistered.begin(), unregistered.end());
  std::sort(all.begin(), all.end());
  return all;
}

int ControlInstance::total_candidates() const {
  return static_cast<int>(registered.size() + unregistered.size());
}

bool ControlInstance::has(const Candidate& c) const {
  return std::binary_search(registered.begin(), registered.end(), c) ||
         std::binary_search(unregistered.begin(), unregistered.end(), c);
}

void ControlInstance::validate() const {
  if (registered.empty()) throw input_error("no registered candidates");
  if (!std::is_sorted(registered.begin(), registered.end()) ||
      !std::is_sorted(unregistered.begin(), unregistered.end()))
    throw internal_error("candidate lists must be kept sorted");
  std::vector<Candidate> all = all_candidates();
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i] == all[i + 1])
      throw input_error("duplicate_candidate", "candidate appears twice: " + all[i]);
  }
  for (const Candidate& c : all) {
    if (!valid_candidate_id(c)) throw input_error("bad_candidate_id", "invalid id: '" + c + "'");
  }
  if (!std::binary_search(registered.begin(), registered.end(), distinguished))
    throw input_error("distinguished_not_registered",
                      "distinguished candidate must be registered");
  if (!agenda.covers(all)) throw input_error("agenda_mismatch", "agenda must cover C u D");
  if (budgets.av < 0 || budgets.dv < 0 || budgets.ac < 0 || budgets.dc < 0)
    throw input_error("budgets must be nonnegative");

  auto shape_zero = [&](bool av0, bool dv0, bool ac0, bool dc0, bool w_empty, bool d_empty) {
    if ((av0 && budgets.av != 0) || (dv0 && budgets.dv != 0) || (ac0 && budgets.ac != 0) ||
        (dc0 && budgets.dc != 0) || (w_empty && !unregistered_votes.empty()) ||
        (d_empty && !unregistered.empty()))
      throw input_error("budget_shape", "instance violates the shape of " +
                                            control_problem_name(problem));
  };
  switch (problem) {
    case ControlProblem::CCAV:
    case ControlProblem::DCAV:
      shape_zero(false, true, true, true, false, true);
      break;
    case ControlProblem::CCDV:
    case ControlProblem::DCDV:
      shape_zero(true, false, true, true, true, true);
      break;
    case ControlProblem::CCAC:
    case ControlProblem::DCAC:
      shape_zero(true, true, false, true, true, false);
      break;
    case ControlProblem::CCDC:
    case ControlProblem::DCDC:
      shape_zero(true, true, true, false, true, true);
      break;
    case ControlProblem::MULTIMODE:
      break;
  }
  if (problem != ControlProblem::MULTIMODE && is_constructive(problem) != (goal == Goal::constructive))
    throw input_error("budget_shape", "goal contradicts the named problem");

  // Votes must be linear orders over C u D; Election's constructor checks.
  std::vector<Vote> all_votes = registered_votes;
  all_votes.insert(all_votes.end(), unregistered_votes.begin(), unregistered_votes.end());
  (void)Election(all, std::move(all_votes));
}

Election ControlInstance::base_election() const {
  std::set<Candidate> keep(registered.begin(), registered.end());
  std::vector<Vote> votes;
  votes.reserve(registered_votes.size());
  for (const Vote& v : registered_votes) {
    Vote r;
    r.multiplicity = v.multiplicity;
    for (const Candidate& c : v.order) {
      if (keep.count(c)) r.order.push_back(c);
    }
    votes.push_back(std::move(r));
  }
  return Election(registered, std::move(votes));
}

int Witness::size() const {
  int n = static_cast<int>(deleted_candidates.size() + added_candidates.size());
  for (const Vote& v : deleted_votes) n += v.multiplicity;
  for (const Vote& v : added_votes) n += v.multiplicity;
  return n;
}

namespace {

// Removes the witness multiset from the vote multiset; input_error when a
// deleted vote is not present often enough.
std::vector<Vote> subtract_votes(const std::vector<Vote>& from, const std::vector<Vote>& minus) {
  std::map<std::vector<Candidate>, int> counts;
  for (const Vote& v : from) counts[v.order] += v.multiplicity;
  for (const Vote& v : minus) {
    auto it = counts.find(v.order);
    if (it == counts.end() || it->second < v.multiplicity)
      throw input_error("witness deletes a vote that is not present");
    it->second -= v.multiplicity;
    if (it->second == 0) counts.erase(it);
  }
  std::vector<Vote> out;
  for (const auto& [order, mult] : counts) out.push_back({order, mult});
  return out;
}

bool contains_votes(const std::vector<Vote>& pool, const std::vector<Vote>& picked) {
  std::map<std::vector<Candidate>, int> counts;
  for (const Vote& v : pool) counts[v.order] += v.multiplicity;
  for (const Vote& v : picked) {
    auto it = counts.find(v.order);
    if (it == counts.end() || it->second < v.multiplicity) return false;
    it->second -= v.multiplicity;
  }
  return true;
}

}  // namespace

Candidate winner_after_edit(const ControlInstance& inst, const Witness& w) {
  std::set<Candidate> final_set(inst.registered.begin(), inst.registered.end());
  for (const Candidate& c : w.deleted_candidates) {
    if (!final_set.erase(c)) throw input_error("witness deletes a non-registered candidate: " + c);
  }
  for (const Candidate& c : w.added_candidates) {
    if (!std::binary_search(inst.unregistered.begin(), inst.unregistered.end(), c))
      throw input_error("witness adds a non-unregistered candidate: " + c);
    if (!final_set.insert(c).second) throw input_error("witness adds a candidate twice: " + c);
  }
  if (final_set.empty()) throw input_error("witness leaves no candidates");

  std::vector<Vote> votes = subtract_votes(inst.registered_votes, w.deleted_votes);
  if (!contains_votes(inst.unregistered_votes, w.added_votes))
    throw input_error("witness adds votes that are not unregistered");
  votes.insert(votes.end(), w.added_votes.begin(), w.added_votes.end());

  // Restrict votes to the final candidate set.
  std::vector<Vote> restricted;
  restricted.reserve(votes.size());
  for (const Vote& v : votes) {
    Vote r;
    r.multiplicity = v.multiplicity;
    for (const Candidate& c : v.order) {
      if (final_set.count(c)) r.order.push_back(c);
    }
    restricted.push_back(std::move(r));
  }
  Election e(std::vector<Candidate>(final_set.begin(), final_set.end()), std::move(restricted));
  return procedure_winner(e, inst.agenda.restricted(final_set), inst.procedure);
}

bool verify_solution(const ControlInstance& inst, const Solution& sol) {
  if (!sol.decision) return true;
  const Witness& w = sol.witness;
  int dv = 0, av = 0;
  for (const Vote& v : w.deleted_votes) dv += v.multiplicity;
  for (const Vote& v : w.added_votes) av += v.multiplicity;
  if (static_cast<int>(w.deleted_candidates.size()) > inst.budgets.dc) return false;
  if (static_cast<int>(w.added_candidates.size()) > inst.budgets.ac) return false;
  if (dv > inst.budgets.dv || av > inst.budgets.av) return false;
  for (const Candidate& c : w.deleted_candidates) {
    if (c == inst.distinguished) return false;
  }
  try {
    const Candidate winner = winner_after_edit(inst, w);
    const bool p_wins = (winner == inst.distinguished);
    return inst.goal == Goal::constructive ? p_wins : !p_wins;
  } catch (const input_error&) {
    return false;
  }
}

OrientedGraph::OrientedGraph(std::vector<std::string> vs,
                             std::vector<std::pair<std::string, std::string>> as)
    : vertices(std::move(vs)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::set<std::string> known(vertices.begin(), vertices.end());
  for (auto& [a, b] : as) {
    if (a == b) throw input_error("oriented graph has a loop at " + a);
    if (!known.count(a) || !known.count(b))
      throw input_error("oriented graph arc references an undeclared vertex");
    if (arcs.count({b, a})) throw input_error("oriented graph has a 2-cycle: " + a + "," + b);
    arcs.emplace(a, b);
  }
}

}  // namespace agenda_control
