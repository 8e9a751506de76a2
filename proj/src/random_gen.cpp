#include "agenda_control/random_gen.hpp"

#include <algorithm>
#include <limits>

namespace agenda_control {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw input_error("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

int Rng::range(int lo, int hi) {
  if (hi < lo) throw input_error("Rng::range: empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<Candidate> default_candidate_names(int m) {
  if (m < 1 || m > 26) throw input_error("default candidate names support 1..26 candidates");
  std::vector<Candidate> names;
  for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

Vote random_vote(Rng& rng, const std::vector<Candidate>& universe) {
  Vote v;
  v.order = universe;
  rng.shuffle(v.order);
  v.multiplicity = 1;
  return v;
}

Election random_election(Rng& rng, int num_candidates, int num_votes) {
  std::vector<Candidate> names = default_candidate_names(num_candidates);
  std::vector<Vote> votes;
  for (int i = 0; i < num_votes; ++i) votes.push_back(random_vote(rng, names));
  return Election(std::move(names), std::move(votes));
}

OrientedGraph random_oriented_graph(Rng& rng, int num_vertices) {
  std::vector<std::string> vs;
  for (int i = 0; i < num_vertices; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> arcs;
  for (int i = 0; i < num_vertices; ++i) {
    for (int j = i + 1; j < num_vertices; ++j) {
      switch (rng.below(3)) {
        case 0: arcs.emplace_back(vs[i], vs[j]); break;
        case 1: arcs.emplace_back(vs[j], vs[i]); break;
        default: break;
      }
    }
  }
  return OrientedGraph(std::move(vs), std::move(arcs));
}

Graph random_graph(Rng& rng, int num_vertices, int percent_edge) {
  std::vector<std::string> vs;
  for (int i = 0; i < num_vertices; ++i) vs.push_back("u" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < num_vertices; ++i) {
    for (int j = i + 1; j < num_vertices; ++j) {
      if (static_cast<int>(rng.below(100)) < percent_edge) edges.emplace_back(vs[i], vs[j]);
    }
  }
  return Graph(std::move(vs), std::move(edges));
}

BipartiteGraph random_bipartite_graph(Rng& rng, int num_red, int num_blue, int percent_edge) {
  std::vector<std::string> rs, bs;
  for (int i = 0; i < num_red; ++i) rs.push_back("r" + std::to_string(i));
  for (int i = 0; i < num_blue; ++i) bs.push_back("b" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& r : rs) {
    for (const auto& b : bs) {
      if (static_cast<int>(rng.below(100)) < percent_edge) edges.emplace_back(r, b);
    }
  }
  return BipartiteGraph(std::move(rs), std::move(bs), std::move(edges));
}

ControlInstance random_control_instance(Rng& rng, const RandomInstanceOptions& opt) {
  const bool adds_candidates =
      opt.problem == ControlProblem::CCAC || opt.problem == ControlProblem::DCAC ||
      (opt.problem == ControlProblem::MULTIMODE && opt.num_unregistered > 0);
  const bool adds_votes =
      opt.problem == ControlProblem::CCAV || opt.problem == ControlProblem::DCAV ||
      (opt.problem == ControlProblem::MULTIMODE && opt.num_unregistered_votes > 0);

  const int m_total = opt.num_candidates + (adds_candidates ? opt.num_unregistered : 0);
  std::vector<Candidate> names = default_candidate_names(m_total);

  ControlInstance inst;
  inst.problem = opt.problem;
  inst.procedure = opt.procedure;
  inst.goal = opt.problem == ControlProblem::MULTIMODE
                  ? (rng.coin() ? Goal::constructive : Goal::destructive)
                  : (is_constructive(opt.problem) ? Goal::constructive : Goal::destructive);

  // Agenda: uniformly random permutation of all candidates.
  std::vector<Candidate> agenda_order = names;
  rng.shuffle(agenda_order);

  // Distinguished candidate by agenda position.
  int p_pos;
  if (opt.distinguished_position >= 1 && opt.distinguished_position <= m_total) {
    p_pos = opt.distinguished_position;
  } else {
    p_pos = 1 + static_cast<int>(rng.below(m_total));
  }
  inst.distinguished = agenda_order[p_pos - 1];

  // Unregistered candidates: a random subset of the non-distinguished ones.
  std::set<Candidate> unreg;
  if (adds_candidates) {
    std::vector<Candidate> pool;
    for (const Candidate& c : names) {
      if (c != inst.distinguished) pool.push_back(c);
    }
    rng.shuffle(pool);
    for (int i = 0; i < opt.num_unregistered && i < static_cast<int>(pool.size()); ++i) {
      unreg.insert(pool[i]);
    }
  }
  for (const Candidate& c : names) {
    if (unreg.count(c)) {
      inst.unregistered.push_back(c);
    } else {
      inst.registered.push_back(c);
    }
  }
  std::sort(inst.registered.begin(), inst.registered.end());
  std::sort(inst.unregistered.begin(), inst.unregistered.end());
  inst.agenda = Agenda(agenda_order);

  for (int i = 0; i < opt.num_votes; ++i)
    inst.registered_votes.push_back(random_vote(rng, names));
  if (adds_votes) {
    for (int i = 0; i < opt.num_unregistered_votes; ++i)
      inst.unregistered_votes.push_back(random_vote(rng, names));
  }

  switch (opt.problem) {
    case ControlProblem::CCAV:
    case ControlProblem::DCAV: inst.budgets.av = opt.budget; break;
    case ControlProblem::CCDV:
    case ControlProblem::DCDV: inst.budgets.dv = opt.budget; break;
    case ControlProblem::CCAC:
    case ControlProblem::DCAC: inst.budgets.ac = opt.budget; break;
    case ControlProblem::CCDC:
    case ControlProblem::DCDC: inst.budgets.dc = opt.budget; break;
    case ControlProblem::MULTIMODE:
      inst.budgets.av = adds_votes ? opt.budget : 0;
      inst.budgets.dv = opt.budget;
      inst.budgets.ac = adds_candidates ? opt.budget : 0;
      inst.budgets.dc = opt.budget;
      break;
  }
  inst.validate();
  return inst;
}

}  // namespace agenda_control
