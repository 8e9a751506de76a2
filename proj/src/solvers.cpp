#include "agenda_control/solvers.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace agenda_control {

namespace {

// ---------------------------------------------------------------------
// Index-space context: candidates numbered by agenda position, votes
// grouped with dense rank arrays. Pairwise supports over subsets of the
// candidates never change when candidates are added or removed, so the
// registered-vote support matrix is computed once.
// ---------------------------------------------------------------------

struct VoteGroup {
  std::vector<Candidate> order;  // original order over C u D
  std::vector<int> rank;         // rank[candidate idx] = position in the vote
  int mult = 0;
  bool registered = true;
};

struct Ctx {
  const ControlInstance* inst = nullptr;
  std::vector<Candidate> order;  // agenda order over C u D
  std::unordered_map<std::string, int> idx;
  int m = 0;
  int p = 0;  // agenda index of the distinguished candidate
  std::vector<char> is_reg;
  std::vector<VoteGroup> groups;  // registered groups first
  int num_v_groups = 0;
  int v_total = 0, w_total = 0;
  std::vector<long long> supv;  // supports over registered votes, m*m

  long long sup(int a, int b) const { return supv[a * m + b]; }
  bool beats(int a, int b) const { return sup(a, b) > sup(b, a); }
  bool beats_or_ties(int a, int b) const { return sup(a, b) >= sup(b, a); }
};

Ctx make_ctx(const ControlInstance& inst) {
  Ctx c;
  c.inst = &inst;
  c.order = inst.agenda.order();
  c.m = static_cast<int>(c.order.size());
  for (int i = 0; i < c.m; ++i) c.idx.emplace(c.order[i], i);
  c.p = c.idx.at(inst.distinguished);
  c.is_reg.assign(c.m, 0);
  for (const Candidate& r : inst.registered) c.is_reg[c.idx.at(r)] = 1;

  auto add_groups = [&c](const std::vector<Vote>& votes, bool registered) {
    std::map<std::vector<Candidate>, int> merged;
    for (const Vote& v : votes) merged[v.order] += v.multiplicity;
    for (const auto& [order, mult] : merged) {
      VoteGroup g;
      g.order = order;
      g.mult = mult;
      g.registered = registered;
      g.rank.assign(c.m, 0);
      for (int r = 0; r < c.m; ++r) g.rank[c.idx.at(order[r])] = r;
      c.groups.push_back(std::move(g));
      if (registered) {
        c.v_total += mult;
      } else {
        c.w_total += mult;
      }
    }
  };
  add_groups(inst.registered_votes, true);
  c.num_v_groups = static_cast<int>(c.groups.size());
  add_groups(inst.unregistered_votes, false);

  c.supv.assign(static_cast<std::size_t>(c.m) * c.m, 0);
  for (int g = 0; g < c.num_v_groups; ++g) {
    const VoteGroup& vg = c.groups[g];
    for (int a = 0; a < c.m; ++a) {
      for (int b = 0; b < c.m; ++b) {
        if (a != b && vg.rank[a] < vg.rank[b]) c.supv[a * c.m + b] += vg.mult;
      }
    }
  }
  return c;
}

// Winner over an active candidate subset (ascending agenda indices) with
// explicit per-group multiplicities covering all groups of the context.
int eval_winner(const Ctx& c, const std::vector<int>& active, const std::vector<int>& mult,
                const ProcedureSpec& proc) {
  const int len = static_cast<int>(active.size());
  if (len == 0) throw internal_error("winner evaluation over an empty candidate set");
  if (len == 1) return active[0];

  if (proc.kind == ProcedureKind::successive) {
    long long total = 0;
    for (std::size_t g = 0; g < c.groups.size(); ++g) total += mult[g];
    // Per group, suffix minima of ranks along the active list.
    for (int i = 0; i < len; ++i) {
      long long dominating = 0;
      for (std::size_t g = 0; g < c.groups.size(); ++g) {
        if (mult[g] == 0) continue;
        const std::vector<int>& rank = c.groups[g].rank;
        int suffix_min = c.m + 1;
        for (int j = len - 1; j > i; --j) suffix_min = std::min(suffix_min, rank[active[j]]);
        if (rank[active[i]] < suffix_min) dominating += mult[g];
      }
      if (2 * dominating > total) return active[i];
    }
    throw internal_error("successive winner evaluation fell through");
  }

  // Amendment family: pairwise supports over the active set.
  std::vector<long long> sup(static_cast<std::size_t>(len) * len, 0);
  for (std::size_t g = 0; g < c.groups.size(); ++g) {
    if (mult[g] == 0) continue;
    const std::vector<int>& rank = c.groups[g].rank;
    for (int i = 0; i < len; ++i) {
      for (int j = 0; j < len; ++j) {
        if (i != j && rank[active[i]] < rank[active[j]]) sup[i * len + j] += mult[g];
      }
    }
  }
  const ResolvedStep rs = resolve_h(proc, len);
  if (rs.first_candidate_rule) return active[0];
  std::vector<int> cur(len);
  std::iota(cur.begin(), cur.end(), 0);
  while (cur.size() > 1) {
    const int head = cur.front();
    const int window = std::min<int>(rs.step, static_cast<int>(cur.size()) - 1);
    bool all = true;
    for (int i = 1; i <= window && all; ++i) {
      const int other = cur[i];
      if (!(sup[head * len + other] > sup[other * len + head])) all = false;
    }
    if (all) {
      cur.erase(cur.begin() + 1, cur.begin() + 1 + window);
    } else {
      cur.erase(cur.begin());
    }
  }
  return active[cur.front()];
}

// Winner when the votes are exactly the registered multiset (candidate
// control). Uses the precomputed support matrix for amendment rounds.
int eval_winner_candidates_only(const Ctx& c, const std::vector<int>& active,
                                const ProcedureSpec& proc) {
  const int len = static_cast<int>(active.size());
  if (len == 0) throw internal_error("winner evaluation over an empty candidate set");
  if (len == 1) return active[0];
  if (proc.kind == ProcedureKind::successive) {
    for (int i = 0; i < len; ++i) {
      long long dominating = 0;
      for (int g = 0; g < c.num_v_groups; ++g) {
        const std::vector<int>& rank = c.groups[g].rank;
        int suffix_min = c.m + 1;
        for (int j = len - 1; j > i; --j) suffix_min = std::min(suffix_min, rank[active[j]]);
        if (rank[active[i]] < suffix_min) dominating += c.groups[g].mult;
      }
      if (2 * dominating > c.v_total) return active[i];
    }
    throw internal_error("successive winner evaluation fell through");
  }
  const ResolvedStep rs = resolve_h(proc, len);
  if (rs.first_candidate_rule) return active[0];
  std::vector<int> cur = active;
  while (cur.size() > 1) {
    const int head = cur.front();
    const int window = std::min<int>(rs.step, static_cast<int>(cur.size()) - 1);
    bool all = true;
    for (int i = 1; i <= window && all; ++i) {
      if (!c.beats(head, cur[i])) all = false;
    }
    if (all) {
      cur.erase(cur.begin() + 1, cur.begin() + 1 + window);
    } else {
      cur.erase(cur.begin());
    }
  }
  return cur.front();
}

std::vector<int> registered_actives(const Ctx& c) {
  std::vector<int> active;
  for (int i = 0; i < c.m; ++i) {
    if (c.is_reg[i]) active.push_back(i);
  }
  return active;
}

bool goal_met(const Ctx& c, int winner) {
  const bool p_wins = winner == c.p;
  return c.inst->goal == Goal::constructive ? p_wins : !p_wins;
}

std::vector<Candidate> names_of(const Ctx& c, const std::vector<int>& ids) {
  std::vector<Candidate> out;
  out.reserve(ids.size());
  for (int i : ids) out.push_back(c.order[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Solution yes_solution(Witness w, bool minimal, std::string algorithm) {
  Solution s;
  s.decision = true;
  s.witness = std::move(w);
  s.minimal = minimal;
  s.algorithm = std::move(algorithm);
  return s;
}

Solution no_solution(std::string algorithm) {
  Solution s;
  s.decision = false;
  s.minimal = true;
  s.algorithm = std::move(algorithm);
  return s;
}

// All subsets of pool with size <= cap, ordered by size then
// lexicographically by element sequence.
std::vector<std::vector<int>> subsets_up_to(const std::vector<int>& pool, int cap) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(pool.size());
  cap = std::min(cap, n);
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) return;
    for (int i = from; i < n; ++i) {
      pick.push_back(pool[i]);
      out.push_back(pick);
      self(self, i + 1, remaining - 1);
      pick.pop_back();
    }
  };
  out.push_back({});
  rec(rec, 0, cap);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

// Count vectors over `limits` with per-slot 0..limits[i] and total <= cap,
// ordered by total then lexicographically.
std::vector<std::vector<int>> count_vectors_up_to(const std::vector<int>& limits, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(limits.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == limits.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(limits[i], cap - used); ++v) {
      cur[i] = v;
      self(self, i + 1, used + v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return out;
}

}  // namespace

SolveCaps SolveCaps::from_env() {
  SolveCaps caps;
  const char* raw = std::getenv("AGENDA_CONTROL_CAPS");
  if (!raw) return caps;
  std::stringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw input_error("AGENDA_CONTROL_CAPS expects k=v pairs");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (...) {
      throw input_error("AGENDA_CONTROL_CAPS: bad value in '" + item + "'");
    }
    if (key == "m") {
      caps.bf_max_candidates = value;
    } else if (key == "n") {
      caps.bf_max_total_votes = value;
    } else if (key == "k") {
      caps.bf_max_budget = value;
    } else {
      throw input_error("AGENDA_CONTROL_CAPS: unknown key '" + key + "'");
    }
  }
  return caps;
}

// ---------------------------------------------------------------------
// Brute-force oracle.
// ---------------------------------------------------------------------

Solution brute_force_solve(const ControlInstance& inst, const SolveCaps& caps) {
  inst.validate();
  Ctx c = make_ctx(inst);
  if (c.m > caps.bf_max_candidates)
    throw resource_error("brute force: candidate count " + std::to_string(c.m) +
                         " exceeds cap " + std::to_string(caps.bf_max_candidates));
  if (c.v_total + c.w_total > caps.bf_max_total_votes)
    throw resource_error("brute force: vote count exceeds cap");
  const Budgets& b = inst.budgets;
  if (std::max({b.av, b.dv, b.ac, b.dc}) > caps.bf_max_budget)
    throw resource_error("brute force: budget exceeds cap");

  std::vector<int> deletable, addable;
  for (int i = 0; i < c.m; ++i) {
    if (c.is_reg[i] && i != c.p) deletable.push_back(i);
    if (!c.is_reg[i]) addable.push_back(i);
  }
  const auto cand_dels = subsets_up_to(deletable, b.dc);
  const auto cand_adds = subsets_up_to(addable, b.ac);

  std::vector<int> v_limits, w_limits;
  for (int g = 0; g < c.num_v_groups; ++g) v_limits.push_back(c.groups[g].mult);
  for (std::size_t g = c.num_v_groups; g < c.groups.size(); ++g)
    w_limits.push_back(c.groups[g].mult);
  const auto vote_dels = count_vectors_up_to(v_limits, b.dv);
  const auto vote_adds = count_vectors_up_to(w_limits, b.av);

  const std::size_t total = cand_dels.size() * cand_adds.size() * vote_dels.size() *
                            vote_adds.size();
  if (total > caps.bf_max_enumeration)
    throw resource_error("brute force: enumeration space " + std::to_string(total) +
                         " exceeds cap");

  struct Best {
    bool found = false;
    int size = 0;
    std::size_t rank = 0;
    std::vector<int> cd, ca, vd, va;
  };

  auto edit_size = [](const std::vector<int>& cd, const std::vector<int>& ca,
                      const std::vector<int>& vd, const std::vector<int>& va) {
    return static_cast<int>(cd.size() + ca.size()) +
           std::accumulate(vd.begin(), vd.end(), 0) + std::accumulate(va.begin(), va.end(), 0);
  };

  auto evaluate_range = [&](std::size_t lo, std::size_t hi, Best& best) {
    std::vector<int> mult(c.groups.size(), 0);
    const std::size_t na = cand_adds.size(), nd = vote_dels.size(), nv = vote_adds.size();
    for (std::size_t rank = lo; rank < hi; ++rank) {
      std::size_t rest = rank;
      const std::size_t iva = rest % nv;
      rest /= nv;
      const std::size_t ivd = rest % nd;
      rest /= nd;
      const std::size_t ica = rest % na;
      const std::size_t icd = rest / na;
      const auto& cd = cand_dels[icd];
      const auto& ca = cand_adds[ica];
      const auto& vd = vote_dels[ivd];
      const auto& va = vote_adds[iva];
      const int size = edit_size(cd, ca, vd, va);
      if (best.found && size >= best.size) continue;

      std::vector<char> active_mask(c.m, 0);
      for (int i = 0; i < c.m; ++i) active_mask[i] = c.is_reg[i];
      for (int i : cd) active_mask[i] = 0;
      for (int i : ca) active_mask[i] = 1;
      std::vector<int> active;
      for (int i = 0; i < c.m; ++i) {
        if (active_mask[i]) active.push_back(i);
      }
      for (int g = 0; g < c.num_v_groups; ++g) mult[g] = c.groups[g].mult - vd[g];
      for (std::size_t g = 0; g < va.size(); ++g) mult[c.num_v_groups + g] = va[g];

      const int winner = eval_winner(c, active, mult, inst.procedure);
      if (goal_met(c, winner)) {
        best.found = true;
        best.size = size;
        best.rank = rank;
        best.cd = cd;
        best.ca = ca;
        best.vd = vd;
        best.va = va;
        if (size == 0) return;
      }
    }
  };

  Best best;
  const int jobs = std::max(1, caps.jobs);
  if (jobs == 1 || total < 1024) {
    evaluate_range(0, total, best);
  } else {
    std::vector<Best> bests(jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::size_t lo = std::min(total, j * chunk);
      const std::size_t hi = std::min(total, lo + chunk);
      workers.emplace_back([&, lo, hi, j] { evaluate_range(lo, hi, bests[j]); });
    }
    for (auto& w : workers) w.join();
    for (const Best& cand : bests) {
      if (!cand.found) continue;
      if (!best.found || cand.size < best.size ||
          (cand.size == best.size && cand.rank < best.rank)) {
        best = cand;
      }
    }
  }

  if (!best.found) return no_solution("brute-force");
  Witness w;
  w.deleted_candidates = names_of(c, best.cd);
  w.added_candidates = names_of(c, best.ca);
  for (int g = 0; g < c.num_v_groups; ++g) {
    if (best.vd[g] > 0) w.deleted_votes.push_back({c.groups[g].order, best.vd[g]});
  }
  for (std::size_t g = 0; g < best.va.size(); ++g) {
    if (best.va[g] > 0)
      w.added_votes.push_back({c.groups[c.num_v_groups + g].order, best.va[g]});
  }
  return yes_solution(std::move(w), true, "brute-force");
}

// ---------------------------------------------------------------------
// MGCEV: exact-size submultisets realizing a target majority graph.
// ---------------------------------------------------------------------

namespace {

struct PoolGroup {
  std::vector<Candidate> order;  // restricted order (key)
  int mult = 0;
  std::vector<std::pair<std::vector<Candidate>, int>> sources;  // original votes
};

std::vector<PoolGroup> group_restricted(const std::vector<Vote>& pool,
                                        const std::vector<Candidate>& keep) {
  std::set<Candidate> keep_set(keep.begin(), keep.end());
  std::map<std::vector<Candidate>, PoolGroup> grouped;
  for (const Vote& v : pool) {
    std::vector<Candidate> restricted;
    for (const Candidate& c : v.order) {
      if (keep_set.count(c)) restricted.push_back(c);
    }
    PoolGroup& g = grouped[restricted];
    g.order = restricted;
    g.mult += v.multiplicity;
    g.sources.emplace_back(v.order, v.multiplicity);
  }
  std::vector<PoolGroup> out;
  for (auto& [key, g] : grouped) out.push_back(std::move(g));
  return out;
}

std::vector<Vote> pick_from_groups(const std::vector<PoolGroup>& groups,
                                   const std::vector<long long>& counts) {
  std::vector<Vote> out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    long long take = counts[g];
    for (const auto& [order, mult] : groups[g].sources) {
      if (take <= 0) break;
      const int t = static_cast<int>(std::min<long long>(take, mult));
      out.push_back({order, t});
      take -= t;
    }
    if (take > 0) throw internal_error("vote pick exceeded group multiplicity");
  }
  return out;
}

// Feasibility + reconstruction for a target graph over `candidates` with
// pre-grouped pools.
std::optional<VotePair> mgcev_grouped(const std::vector<Candidate>& candidates,
                                      const std::vector<PoolGroup>& vg,
                                      const std::vector<PoolGroup>& wg,
                                      const OrientedGraph& target, int k, int kp,
                                      const SolveCaps& caps) {
  IntegerProgram prog;
  std::vector<int> xs, ys;
  for (std::size_t g = 0; g < vg.size(); ++g)
    xs.push_back(prog.add_variable("x" + std::to_string(g), 0, vg[g].mult));
  for (std::size_t g = 0; g < wg.size(); ++g)
    ys.push_back(prog.add_variable("y" + std::to_string(g), 0, wg[g].mult));

  std::vector<std::pair<int, long long>> sum_x, sum_y;
  for (int v : xs) sum_x.emplace_back(v, 1);
  for (int v : ys) sum_y.emplace_back(v, 1);
  prog.add_constraint(sum_x, Rel::eq, k);
  prog.add_constraint(sum_y, Rel::eq, kp);

  auto ranks_before = [](const PoolGroup& g, const Candidate& a, const Candidate& b) {
    for (const Candidate& c : g.order) {
      if (c == a) return true;
      if (c == b) return false;
    }
    throw internal_error("pair missing from restricted vote");
  };

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Candidate& a = candidates[i];
      const Candidate& b = candidates[j];
      const bool ab = target.has_arc(a, b), ba = target.has_arc(b, a);
      // Support terms for the pair ordered (winner, loser); ties use (a, b).
      const Candidate& hi = ba ? b : a;
      const Candidate& lo = ba ? a : b;
      std::vector<std::pair<int, long long>> terms;
      for (std::size_t g = 0; g < vg.size(); ++g) {
        if (ranks_before(vg[g], hi, lo)) terms.emplace_back(xs[g], 1);
      }
      for (std::size_t g = 0; g < wg.size(); ++g) {
        if (ranks_before(wg[g], hi, lo)) terms.emplace_back(ys[g], 1);
      }
      if (ab || ba) {
        prog.add_constraint(std::move(terms), Rel::gt, k + kp, 2);
      } else {
        prog.add_constraint(std::move(terms), Rel::eq, k + kp, 2);
      }
    }
  }

  IlpBudget budget;
  budget.max_nodes = caps.ilp_max_nodes;
  auto assignment = solve_feasibility(prog, budget);
  if (!assignment) return std::nullopt;
  std::vector<long long> xcounts(vg.size()), ycounts(wg.size());
  for (std::size_t g = 0; g < vg.size(); ++g) xcounts[g] = (*assignment)[xs[g]];
  for (std::size_t g = 0; g < wg.size(); ++g) ycounts[g] = (*assignment)[ys[g]];
  return VotePair{pick_from_groups(vg, xcounts), pick_from_groups(wg, ycounts)};
}

}  // namespace

std::optional<VotePair> solve_mgcev(const MGCEVInstance& inst, const SolveCaps& caps) {
  const int m = static_cast<int>(inst.candidates.size());
  if (m > caps.mgcev_max_candidates)
    throw resource_error("mgcev: " + std::to_string(m) + " candidates exceed cap " +
                         std::to_string(caps.mgcev_max_candidates));
  std::vector<Candidate> sorted = inst.candidates;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != inst.target.vertices)
    throw input_error("mgcev target graph must cover exactly the candidate set");
  int v_total = 0, w_total = 0;
  for (const Vote& v : inst.registered_pool) v_total += v.multiplicity;
  for (const Vote& v : inst.unregistered_pool) w_total += v.multiplicity;
  if (inst.keep_registered < 0 || inst.keep_unregistered < 0)
    throw input_error("mgcev requires nonnegative target sizes");
  if (inst.keep_registered > v_total || inst.keep_unregistered > w_total) return std::nullopt;

  const auto vg = group_restricted(inst.registered_pool, inst.candidates);
  const auto wg = group_restricted(inst.unregistered_pool, inst.candidates);
  return mgcev_grouped(inst.candidates, vg, wg, inst.target, inst.keep_registered,
                       inst.keep_unregistered, caps);
}

// ---------------------------------------------------------------------
// Exact edits, successive procedure.
// ---------------------------------------------------------------------

namespace {

void check_exact_edit(const ExactEditInstance& inst) {
  if (!inst.agenda.covers(inst.candidates))
    throw input_error("agenda_mismatch", "exact-edit agenda must cover the candidates");
  int v_total = 0, w_total = 0;
  for (const Vote& v : inst.registered_pool) v_total += v.multiplicity;
  for (const Vote& v : inst.unregistered_pool) w_total += v.multiplicity;
  if (inst.keep_registered < 0 || inst.keep_registered > v_total ||
      inst.keep_unregistered < 0 || inst.keep_unregistered > w_total)
    throw input_error("exact-edit sizes must fit the pools");
}

Election exact_edit_election(const ExactEditInstance& inst, const VotePair& picks) {
  std::vector<Vote> votes = picks.first;
  votes.insert(votes.end(), picks.second.begin(), picks.second.end());
  return Election(inst.candidates, std::move(votes));
}

}  // namespace

std::optional<VotePair> solve_eccev_successive(const ExactEditInstance& inst,
                                               const SolveCaps& caps) {
  check_exact_edit(inst);
  if (inst.goal != Goal::constructive)
    throw input_error("eccev handles the constructive goal");
  if (inst.procedure.kind != ProcedureKind::successive)
    throw input_error("eccev handles the successive procedure");
  const auto& order = inst.agenda.order();
  const int m = static_cast<int>(order.size());
  const int ell = inst.agenda.position(inst.distinguished);  // p = order[ell-1]
  if (ell > 62) throw resource_error("eccev: distinguished position too deep for signatures");

  // Signature bit i (0-based, i < ell): some successor of order[i] is
  // ranked before order[i] in the vote.
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < m; ++i) idx.emplace(order[i], i);
  auto signature = [&](const std::vector<Candidate>& vote) {
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) rank[idx.at(vote[r])] = r;
    std::uint64_t sig = 0;
    for (int i = 0; i < ell; ++i) {
      int best_successor = m + 1;
      for (int j = i + 1; j < m; ++j) best_successor = std::min(best_successor, rank[j]);
      if (best_successor < rank[i]) sig |= (1ULL << i);
    }
    return sig;
  };

  struct Class {
    std::uint64_t sig;
    PoolGroup group;
  };
  auto classify = [&](const std::vector<Vote>& pool) {
    std::map<std::uint64_t, PoolGroup> classes;
    for (const Vote& v : pool) {
      const std::uint64_t sig = signature(v.order);
      PoolGroup& g = classes[sig];
      g.mult += v.multiplicity;
      g.sources.emplace_back(v.order, v.multiplicity);
    }
    std::vector<Class> out;
    for (auto& [sig, g] : classes) out.push_back({sig, std::move(g)});
    return out;
  };
  const auto vc = classify(inst.registered_pool);
  const auto wc = classify(inst.unregistered_pool);

  IntegerProgram prog;
  std::vector<int> xs, ys;
  for (std::size_t g = 0; g < vc.size(); ++g)
    xs.push_back(prog.add_variable("x" + std::to_string(g), 0, vc[g].group.mult));
  for (std::size_t g = 0; g < wc.size(); ++g)
    ys.push_back(prog.add_variable("y" + std::to_string(g), 0, wc[g].group.mult));
  std::vector<std::pair<int, long long>> sum_x, sum_y;
  for (int v : xs) sum_x.emplace_back(v, 1);
  for (int v : ys) sum_y.emplace_back(v, 1);
  const int k = inst.keep_registered, kp = inst.keep_unregistered;
  prog.add_constraint(sum_x, Rel::eq, k);
  prog.add_constraint(sum_y, Rel::eq, kp);

  for (int i = 0; i < ell; ++i) {
    std::vector<std::pair<int, long long>> terms;
    for (std::size_t g = 0; g < vc.size(); ++g) {
      if (vc[g].sig & (1ULL << i)) terms.emplace_back(xs[g], 1);
    }
    for (std::size_t g = 0; g < wc.size(); ++g) {
      if (wc[g].sig & (1ULL << i)) terms.emplace_back(ys[g], 1);
    }
    if (i < ell - 1) {
      // Predecessor order[i] must fail to majority-dominate its successors.
      prog.add_constraint(std::move(terms), Rel::ge, k + kp, 2);
    } else {
      // The distinguished candidate must majority-dominate its successors.
      prog.add_constraint(std::move(terms), Rel::lt, k + kp, 2);
    }
  }

  IlpBudget budget;
  budget.max_nodes = caps.ilp_max_nodes;
  auto assignment = solve_feasibility(prog, budget);
  if (!assignment) return std::nullopt;
  std::vector<long long> xcounts(vc.size()), ycounts(wc.size());
  for (std::size_t g = 0; g < vc.size(); ++g) xcounts[g] = (*assignment)[xs[g]];
  for (std::size_t g = 0; g < wc.size(); ++g) ycounts[g] = (*assignment)[ys[g]];
  std::vector<PoolGroup> vgroups, wgroups;
  for (const Class& cl : vc) vgroups.push_back(cl.group);
  for (const Class& cl : wc) wgroups.push_back(cl.group);
  VotePair picks{pick_from_groups(vgroups, xcounts), pick_from_groups(wgroups, ycounts)};

  const Election result = exact_edit_election(inst, picks);
  if (successive_winner(result, inst.agenda).first != inst.distinguished)
    throw internal_error("eccev produced an edit that does not elect the target");
  return picks;
}

std::optional<VotePair> solve_edcev_successive(const ExactEditInstance& inst) {
  check_exact_edit(inst);
  if (inst.goal != Goal::destructive)
    throw input_error("edcev handles the destructive goal");
  if (inst.procedure.kind != ProcedureKind::successive)
    throw input_error("this solver handles the successive procedure");
  const auto& order = inst.agenda.order();
  const int m = static_cast<int>(order.size());
  const int pos_p = inst.agenda.position(inst.distinguished);
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < m; ++i) idx.emplace(order[i], i);

  // Votes ranking candidate order[i-1] above all its agenda successors.
  auto ranks_top = [&](const std::vector<Candidate>& vote, int pos_1_based) {
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) rank[idx.at(vote[r])] = r;
    int suffix_min = m + 1;
    for (int j = m - 1; j >= pos_1_based; --j) suffix_min = std::min(suffix_min, rank[j]);
    return rank[pos_1_based - 1] < suffix_min;
  };

  // Greedy exact-size pick preferring votes with `prefer` true (or false).
  auto greedy_pick = [&](const std::vector<Vote>& pool, int want, int pos, bool prefer) {
    std::vector<Vote> picked;
    int remaining = want;
    for (int pass = 0; pass < 2 && remaining > 0; ++pass) {
      const bool wanted = pass == 0 ? prefer : !prefer;
      for (const Vote& v : pool) {
        if (remaining <= 0) break;
        if (ranks_top(v.order, pos) != wanted) continue;
        const int take = std::min(remaining, v.multiplicity);
        picked.push_back({v.order, take});
        remaining -= take;
      }
    }
    if (remaining > 0) throw internal_error("greedy pick ran out of votes");
    return picked;
  };

  auto not_p_winner = [&](const VotePair& picks) {
    const Election result = exact_edit_election(inst, picks);
    return successive_winner(result, inst.agenda).first != inst.distinguished;
  };

  // First try to deny the distinguished candidate its domination.
  {
    VotePair picks{greedy_pick(inst.registered_pool, inst.keep_registered, pos_p, false),
                   greedy_pick(inst.unregistered_pool, inst.keep_unregistered, pos_p, false)};
    if (not_p_winner(picks)) return picks;
  }
  // Otherwise try to hand domination to some predecessor.
  for (int pos = 1; pos < pos_p; ++pos) {
    VotePair picks{greedy_pick(inst.registered_pool, inst.keep_registered, pos, true),
                   greedy_pick(inst.unregistered_pool, inst.keep_unregistered, pos, true)};
    if (not_p_winner(picks)) return picks;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Exact destructive edits, amendment family: configuration enumeration
// over the agenda prefix, each surviving configuration delegated to the
// majority-graph solver.
// ---------------------------------------------------------------------

namespace {

struct PairWiggle {
  // Achievable support range for (a before b) across exact-size picks.
  long long lo = 0, hi = 0;
};

PairWiggle pair_wiggle(const std::vector<PoolGroup>& vg, const std::vector<PoolGroup>& wg,
                       const Candidate& a, const Candidate& b, int k, int kp) {
  auto count_before = [](const std::vector<PoolGroup>& groups, const Candidate& x,
                         const Candidate& y) {
    long long n = 0;
    for (const PoolGroup& g : groups) {
      for (const Candidate& c : g.order) {
        if (c == x) {
          n += g.mult;
          break;
        }
        if (c == y) break;
      }
    }
    return n;
  };
  const long long nv_ab = count_before(vg, a, b);
  const long long nv_ba = count_before(vg, b, a);
  const long long nw_ab = count_before(wg, a, b);
  const long long nw_ba = count_before(wg, b, a);
  PairWiggle w;
  w.hi = std::min<long long>(k, nv_ab) + std::min<long long>(kp, nw_ab);
  w.lo = std::max<long long>(0, k - nv_ba) + std::max<long long>(0, kp - nw_ba);
  return w;
}

}  // namespace

std::optional<VotePair> solve_edcev_h_amendment(const ExactEditInstance& inst,
                                                const SolveCaps& caps) {
  check_exact_edit(inst);
  if (inst.goal != Goal::destructive)
    throw input_error("edcev handles the destructive goal");
  if (inst.procedure.kind != ProcedureKind::amendment)
    throw input_error("this solver handles the amendment family");
  const auto& order = inst.agenda.order();
  const int m = static_cast<int>(order.size());
  const int pos_p = inst.agenda.position(inst.distinguished);
  const int k = inst.keep_registered, kp = inst.keep_unregistered;

  const ResolvedStep rs = resolve_h(inst.procedure, m);
  if (rs.first_candidate_rule) {
    // Winner is the agenda head no matter the votes.
    if (pos_p == 1) return std::nullopt;
    std::vector<PoolGroup> vg = group_restricted(inst.registered_pool, inst.candidates);
    std::vector<PoolGroup> wg = group_restricted(inst.unregistered_pool, inst.candidates);
    std::vector<long long> xc(vg.size(), 0), yc(wg.size(), 0);
    long long need = k;
    for (std::size_t g = 0; g < vg.size() && need > 0; ++g) {
      xc[g] = std::min<long long>(need, vg[g].mult);
      need -= xc[g];
    }
    need = kp;
    for (std::size_t g = 0; g < wg.size() && need > 0; ++g) {
      yc[g] = std::min<long long>(need, wg[g].mult);
      need -= yc[g];
    }
    return VotePair{pick_from_groups(vg, xc), pick_from_groups(wg, yc)};
  }
  // Vote edits never change the candidate count, so the relative family is
  // just a fixed-step amendment procedure here.
  const int h_eff = rs.step;
  const ProcedureSpec eff = ProcedureSpec::amendment_abs(h_eff);

  const int ell = pos_p - 1;
  const int ell_prime = std::min(ell + h_eff + 1, m);
  const std::vector<Candidate> prefix(order.begin(), order.begin() + ell_prime);

  struct PairStates {
    Candidate a, b;              // a earlier in the agenda
    std::vector<int> states;     // 0: a->b, 1: b->a, 2: tie
  };

  // Feasible per-pair states over a candidate subset, or nullopt when some
  // pair admits none (the whole enumeration is then empty).
  auto feasible_states = [&](const std::vector<Candidate>& cands,
                             const std::vector<PoolGroup>& vg,
                             const std::vector<PoolGroup>& wg)
      -> std::optional<std::vector<PairStates>> {
    std::vector<PairStates> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        PairStates ps;
        ps.a = cands[i];
        ps.b = cands[j];
        const PairWiggle ab = pair_wiggle(vg, wg, ps.a, ps.b, k, kp);
        const long long total = k + kp;
        if (2 * ab.hi >= total + 1) ps.states.push_back(0);
        // b beats a iff support(b,a) > total/2 iff support(a,b) < ceil
        if (2 * ab.lo <= total - 1) ps.states.push_back(1);
        if (total % 2 == 0 && 2 * ab.lo <= total && total <= 2 * ab.hi) ps.states.push_back(2);
        if (ps.states.empty()) return std::nullopt;
        out.push_back(std::move(ps));
      }
    }
    return out;
  };

  auto enumerate = [&](const std::vector<PairStates>& pairs, auto&& on_config) {
    std::vector<std::size_t> choice(pairs.size(), 0);
    std::size_t visited = 0;
    while (true) {
      if (++visited > caps.edcev_max_configs)
        throw resource_error("edcev: configuration enumeration exceeds cap");
      std::vector<std::pair<Candidate, Candidate>> arcs;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const int s = pairs[i].states[choice[i]];
        if (s == 0) arcs.emplace_back(pairs[i].a, pairs[i].b);
        if (s == 1) arcs.emplace_back(pairs[i].b, pairs[i].a);
      }
      if (on_config(arcs)) return true;
      std::size_t i = 0;
      for (; i < pairs.size(); ++i) {
        if (++choice[i] < pairs[i].states.size()) break;
        choice[i] = 0;
      }
      if (i == pairs.size()) return false;
    }
  };

  const auto vg_prefix = group_restricted(inst.registered_pool, prefix);
  const auto wg_prefix = group_restricted(inst.unregistered_pool, prefix);
  const auto prefix_pairs = feasible_states(prefix, vg_prefix, wg_prefix);
  if (!prefix_pairs) return std::nullopt;

  std::optional<VotePair> found;
  auto try_config = [&](const std::vector<Candidate>& cands,
                        const std::vector<PoolGroup>& vg, const std::vector<PoolGroup>& wg,
                        const std::vector<std::pair<Candidate, Candidate>>& arcs) {
    std::vector<Candidate> sorted = cands;
    std::sort(sorted.begin(), sorted.end());
    OrientedGraph target(sorted, arcs);
    auto picks = mgcev_grouped(cands, vg, wg, target, k, kp, caps);
    if (!picks) return false;
    const Election result = exact_edit_election(inst, *picks);
    if (h_amendment_winner(result, inst.agenda, eff).first == inst.distinguished)
      throw internal_error("edcev accepted a configuration that keeps the target winning");
    found = std::move(picks);
    return true;
  };

  const bool done = enumerate(*prefix_pairs, [&](const auto& arcs) {
    std::set<std::pair<Candidate, Candidate>> arc_set(arcs.begin(), arcs.end());
    const Candidate winner = h_amendment_winner_over_relation(
        prefix, eff, [&arc_set](const Candidate& a, const Candidate& b) {
          return arc_set.count({a, b}) > 0;
        });
    if (winner != inst.distinguished) {
      // The distinguished candidate already fails within the prefix.
      return try_config(prefix, vg_prefix, wg_prefix, arcs);
    }
    if (ell_prime >= m) return false;
    // The prefix keeps the target winning; some later candidate must beat
    // or tie it.
    for (int qi = ell_prime; qi < m; ++qi) {
      std::vector<Candidate> extended = prefix;
      extended.push_back(order[qi]);
      const auto vg_ext = group_restricted(inst.registered_pool, extended);
      const auto wg_ext = group_restricted(inst.unregistered_pool, extended);
      // States for the pairs involving q only; prefix pair states are fixed.
      std::vector<PairStates> q_pairs;
      bool infeasible = false;
      for (const Candidate& c : prefix) {
        PairStates ps;
        ps.a = c;
        ps.b = order[qi];
        const PairWiggle w = pair_wiggle(vg_ext, wg_ext, c, order[qi], k, kp);
        const long long total = k + kp;
        const bool q_is_p = c == inst.distinguished;
        if (2 * w.hi >= total + 1 && !q_is_p) ps.states.push_back(0);
        if (2 * w.lo <= total - 1) ps.states.push_back(1);
        if (total % 2 == 0 && 2 * w.lo <= total && total <= 2 * w.hi) ps.states.push_back(2);
        if (ps.states.empty()) {
          infeasible = true;
          break;
        }
        q_pairs.push_back(std::move(ps));
      }
      if (infeasible) continue;
      const bool hit = enumerate(q_pairs, [&](const auto& q_arcs) {
        std::vector<std::pair<Candidate, Candidate>> all_arcs = arcs;
        all_arcs.insert(all_arcs.end(), q_arcs.begin(), q_arcs.end());
        return try_config(extended, vg_ext, wg_ext, all_arcs);
      });
      if (hit) return true;
    }
    return false;
  });
  (void)done;
  return found;
}

// ---------------------------------------------------------------------
// Amendment (h=1) candidate control: beating-path dynamic programs.
// ---------------------------------------------------------------------

namespace {

// (to <- from)-beating path over `active` (ascending agenda indices):
// walks right to left; every new element is beaten by or ties with the
// previous one and beats every active candidate skipped between them.
bool beating_path_idx(const Ctx& c, const std::vector<int>& active, int from, int to) {
  const int n = static_cast<int>(active.size());
  int src = -1, dst = -1;
  for (int i = 0; i < n; ++i) {
    if (active[i] == from) src = i;
    if (active[i] == to) dst = i;
  }
  if (src < 0 || dst < 0 || dst > src) throw internal_error("bad beating path endpoints");
  if (src == dst) return true;
  std::vector<char> reach(n, 0);
  reach[src] = 1;
  for (int i = src - 1; i >= dst; --i) {
    for (int j = i + 1; j <= src && !reach[i]; ++j) {
      if (!reach[j]) continue;
      if (c.beats(active[i], active[j])) continue;
      bool ok = true;
      for (int l = i + 1; l < j && ok; ++l) {
        if (!c.beats(active[i], active[l])) ok = false;
      }
      if (ok) reach[i] = 1;
    }
  }
  return reach[dst] != 0;
}

constexpr int kNoPath = 1 << 20;

// Minimum deletions (from non-protected candidates) that make `target`
// the amendment winner of the active set; nullopt when impossible.
std::optional<std::vector<int>> ccdc_min_deletions(const Ctx& c, const std::vector<int>& active,
                                                   int target, const std::vector<char>& prot) {
  std::vector<int> deleted;
  std::vector<int> kept;
  // Mandatory: drop every successor of the target it does not beat.
  for (int x : active) {
    if (x > target && !c.beats(target, x)) {
      if (prot[x]) return std::nullopt;
      deleted.push_back(x);
    } else {
      kept.push_back(x);
    }
  }
  std::vector<int> preds;
  for (int x : kept) {
    if (x < target) preds.push_back(x);
  }
  const int t = static_cast<int>(preds.size());
  if (t == 0) return deleted;  // target leads and beats every survivor after it

  // H[i]: minimum deletions among preds after position i so that a
  // (preds[i] <- target)-beating path survives; H[t] is the target itself.
  std::vector<int> H(t + 1, kNoPath), choice(t + 1, -1);
  H[t] = 0;
  auto right_of = [&](int j) { return j == t ? target : preds[j]; };
  for (int i = t - 1; i >= 0; --i) {
    for (int j = i + 1; j <= t; ++j) {
      if (H[j] >= kNoPath) continue;
      // preds[i] must be beaten by or tie with the next path element.
      if (c.beats(preds[i], right_of(j))) continue;
      int cost = 0;
      bool valid = true;
      for (int l = i + 1; l < j && valid; ++l) {
        if (!c.beats(preds[i], preds[l])) {
          if (prot[preds[l]]) valid = false;
          ++cost;
        }
      }
      if (!valid) continue;
      if (H[j] + cost < H[i]) {
        H[i] = H[j] + cost;
        choice[i] = j;
      }
    }
  }

  int best_cost = kNoPath;
  int best_i = -1;  // -1 encodes deleting every predecessor
  bool all_preds_deletable = true;
  for (int i = 0; i < t; ++i) {
    if (prot[preds[i]]) {
      all_preds_deletable = false;
      break;
    }
  }
  if (all_preds_deletable) best_cost = t;
  bool prefix_free = true;
  for (int i = 0; i < t; ++i) {
    // Deleting the i leading predecessors requires them unprotected.
    if (i > 0 && prot[preds[i - 1]]) prefix_free = false;
    if (!prefix_free) break;
    if (H[i] < kNoPath && i + H[i] < best_cost) {
      best_cost = i + H[i];
      best_i = i;
    }
  }
  if (best_cost >= kNoPath) return std::nullopt;

  if (best_i == -1) {
    deleted.insert(deleted.end(), preds.begin(), preds.end());
  } else {
    for (int i = 0; i < best_i; ++i) deleted.push_back(preds[i]);
    int i = best_i;
    while (i != t) {
      const int j = choice[i];
      for (int l = i + 1; l < j; ++l) {
        if (!c.beats(preds[i], preds[l])) deleted.push_back(preds[l]);
      }
      i = j;
    }
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

// Minimum additions from pool (unregistered predecessors of the target)
// that make `target` the amendment winner of active u additions; the
// caller has checked that the target beats all its active successors and
// is not already winning.
std::optional<std::vector<int>> ccac_min_additions(const Ctx& c, const std::vector<int>& active,
                                                   int target, const std::vector<int>& pool) {
  const int n = static_cast<int>(pool.size());
  if (n == 0) return std::nullopt;
  // pool is ascending by agenda index; process right to left.
  std::vector<int> H(n, kNoPath), next(n, -1);
  auto with_extra = [&](std::initializer_list<int> extra) {
    std::vector<int> merged = active;
    merged.insert(merged.end(), extra.begin(), extra.end());
    std::sort(merged.begin(), merged.end());
    return merged;
  };
  for (int i = n - 1; i >= 0; --i) {
    const int d = pool[i];
    if (beating_path_idx(c, with_extra({d}), target, d)) {
      H[i] = 1;
      continue;
    }
    for (int j = i + 1; j < n; ++j) {
      if (H[j] >= kNoPath) continue;
      const int d2 = pool[j];
      if (!beating_path_idx(c, with_extra({d, d2}), d2, d)) continue;
      if (1 + H[j] < H[i]) {
        H[i] = 1 + H[j];
        next[i] = j;
      }
    }
  }
  const int cstar = active.front();  // leftmost registered candidate
  int best = kNoPath, best_i = -1;
  for (int i = 0; i < n; ++i) {
    if (H[i] >= kNoPath) continue;
    bool admissible;
    if (pool[i] < cstar) {
      admissible = true;
    } else {
      admissible = beating_path_idx(c, with_extra({pool[i]}), pool[i], cstar);
    }
    if (admissible && H[i] < best) {
      best = H[i];
      best_i = i;
    }
  }
  if (best_i < 0) return std::nullopt;
  std::vector<int> added;
  for (int i = best_i; i != -1; i = next[i]) added.push_back(pool[i]);
  std::sort(added.begin(), added.end());
  return added;
}

void require_problem(const ControlInstance& inst, ControlProblem problem) {
  if (inst.problem != problem)
    throw input_error("solver expects problem " + control_problem_name(problem));
}

void require_amendment_h1(const ControlInstance& inst) {
  if (inst.procedure.kind != ProcedureKind::amendment || inst.procedure.h_mode != HMode::absolute ||
      inst.procedure.h != 1)
    throw input_error("solver expects the amendment procedure (absolute h = 1)");
}

}  // namespace

Solution solve_ccdc_amendment(const ControlInstance& inst) {
  inst.validate();
  require_problem(inst, ControlProblem::CCDC);
  require_amendment_h1(inst);
  Ctx c = make_ctx(inst);
  std::vector<char> prot(c.m, 0);
  auto deletions = ccdc_min_deletions(c, registered_actives(c), c.p, prot);
  if (!deletions || static_cast<int>(deletions->size()) > inst.budgets.dc)
    return no_solution("ccdc-amendment-dp");
  Witness w;
  w.deleted_candidates = names_of(c, *deletions);
  return yes_solution(std::move(w), true, "ccdc-amendment-dp");
}

Solution solve_ccac_amendment(const ControlInstance& inst) {
  inst.validate();
  require_problem(inst, ControlProblem::CCAC);
  require_amendment_h1(inst);
  Ctx c = make_ctx(inst);
  const std::vector<int> active = registered_actives(c);
  // A successor of the target unbeaten by it blocks every extension.
  for (int x : active) {
    if (x > c.p && !c.beats(c.p, x)) return no_solution("ccac-amendment-dp");
  }
  if (eval_winner_candidates_only(c, active, inst.procedure) == c.p)
    return yes_solution({}, true, "ccac-amendment-dp");
  std::vector<int> pool;
  for (int i = 0; i < c.m; ++i) {
    if (!c.is_reg[i] && i < c.p) pool.push_back(i);
  }
  auto additions = ccac_min_additions(c, active, c.p, pool);
  if (!additions || static_cast<int>(additions->size()) > inst.budgets.ac)
    return no_solution("ccac-amendment-dp");
  Witness w;
  w.added_candidates = names_of(c, *additions);
  return yes_solution(std::move(w), true, "ccac-amendment-dp");
}

Solution solve_dcac_dcdc_amendment(const ControlInstance& inst) {
  inst.validate();
  require_amendment_h1(inst);
  if (inst.problem != ControlProblem::DCAC && inst.problem != ControlProblem::DCDC)
    throw input_error("solver expects DCAC or DCDC");
  Ctx c = make_ctx(inst);
  const std::vector<int> active = registered_actives(c);
  const std::string algo =
      inst.problem == ControlProblem::DCAC ? "dcac-amendment-turing" : "dcdc-amendment-turing";
  if (eval_winner_candidates_only(c, active, inst.procedure) != c.p)
    return yes_solution({}, true, algo);

  if (inst.problem == ControlProblem::DCDC) {
    std::vector<char> prot(c.m, 0);
    prot[c.p] = 1;
    std::optional<std::vector<int>> best;
    for (int rival : active) {
      if (rival == c.p) continue;
      auto deletions = ccdc_min_deletions(c, active, rival, prot);
      if (deletions && (!best || deletions->size() < best->size())) best = deletions;
    }
    if (!best || static_cast<int>(best->size()) > inst.budgets.dc) return no_solution(algo);
    Witness w;
    w.deleted_candidates = names_of(c, *best);
    return yes_solution(std::move(w), true, algo);
  }

  // DCAC: make some rival the amendment winner by adding candidates.
  std::optional<std::vector<int>> best;
  auto consider = [&best](std::vector<int> added) {
    if (!best || added.size() < best->size()) best = std::move(added);
  };
  for (int rival = 0; rival < c.m; ++rival) {
    if (rival == c.p) continue;
    std::vector<int> base = active;
    int budget_used = 0;
    if (!c.is_reg[rival]) {
      base.push_back(rival);
      std::sort(base.begin(), base.end());
      budget_used = 1;
    }
    bool blocked = false;
    for (int x : base) {
      if (x > rival && !c.beats(rival, x)) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    if (eval_winner_candidates_only(c, base, inst.procedure) == rival) {
      std::vector<int> added;
      if (budget_used) added.push_back(rival);
      consider(std::move(added));
      continue;
    }
    std::vector<int> pool;
    for (int i = 0; i < c.m; ++i) {
      if (!c.is_reg[i] && i != rival && i < rival) pool.push_back(i);
    }
    auto additions = ccac_min_additions(c, base, rival, pool);
    if (additions) {
      std::vector<int> added = *additions;
      if (budget_used) added.push_back(rival);
      std::sort(added.begin(), added.end());
      consider(std::move(added));
    }
  }
  if (!best || static_cast<int>(best->size()) > inst.budgets.ac) return no_solution(algo);
  Witness w;
  w.added_candidates = names_of(c, *best);
  return yes_solution(std::move(w), true, algo);
}

// ---------------------------------------------------------------------
// Full-amendment candidate deletion: the two reduction rules.
// ---------------------------------------------------------------------

namespace {

// Winner under the full-amendment procedure: the first active candidate
// beating all of its active successors.
int full_amendment_winner_idx(const Ctx& c, const std::vector<int>& active) {
  for (std::size_t i = 0; i < active.size(); ++i) {
    bool all = true;
    for (std::size_t j = i + 1; j < active.size() && all; ++j) {
      if (!c.beats(active[i], active[j])) all = false;
    }
    if (all) return active[i];
  }
  throw internal_error("full-amendment evaluation fell through");
}

std::optional<std::vector<int>> full_amendment_min_deletions(const Ctx& c,
                                                             std::vector<int> active, int target,
                                                             const std::vector<char>& prot) {
  std::vector<int> deleted;
  // Unbeaten successors of the target must go.
  std::vector<int> kept;
  for (int x : active) {
    if (x > target && !c.beats(target, x)) {
      if (prot[x]) return std::nullopt;
      deleted.push_back(x);
    } else {
      kept.push_back(x);
    }
  }
  active = std::move(kept);
  // Winners preceding the target must go, one at a time.
  while (true) {
    const int w = full_amendment_winner_idx(c, active);
    if (w == target) break;
    if (w > target) throw internal_error("full-amendment winner follows a dominant target");
    if (prot[w]) return std::nullopt;
    deleted.push_back(w);
    active.erase(std::find(active.begin(), active.end(), w));
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

// True when the procedure behaves as full-amendment at every candidate
// count that deletion can reach.
bool full_at_all_shrinking_sizes(const ProcedureSpec& spec, int m) {
  if (spec.kind != ProcedureKind::amendment) return false;
  if (spec.h_mode == HMode::relative) return spec.h == 1;
  return spec.h >= m - 1;
}

}  // namespace

Solution solve_ccdc_full_amendment(const ControlInstance& inst) {
  inst.validate();
  require_problem(inst, ControlProblem::CCDC);
  if (inst.procedure.kind != ProcedureKind::amendment)
    throw input_error("solver expects an amendment-family procedure");
  if (inst.procedure.h_mode == HMode::relative && inst.procedure.h >= 2)
    throw input_error("deletion rules are unsound for relative steps with d >= 2");
  Ctx c = make_ctx(inst);
  if (!full_at_all_shrinking_sizes(inst.procedure, static_cast<int>(inst.registered.size())))
    throw input_error("solver expects full-amendment behavior at every arising size");
  std::vector<char> prot(c.m, 0);
  auto deletions = full_amendment_min_deletions(c, registered_actives(c), c.p, prot);
  if (!deletions || static_cast<int>(deletions->size()) > inst.budgets.dc)
    return no_solution("ccdc-full-amendment-rules");
  Witness w;
  w.deleted_candidates = names_of(c, *deletions);
  return yes_solution(std::move(w), true, "ccdc-full-amendment-rules");
}

Solution solve_dcdc_full_amendment(const ControlInstance& inst) {
  inst.validate();
  require_problem(inst, ControlProblem::DCDC);
  if (!full_at_all_shrinking_sizes(inst.procedure, static_cast<int>(inst.registered.size())))
    throw input_error("solver expects full-amendment behavior at every arising size");
  Ctx c = make_ctx(inst);
  const std::vector<int> active = registered_actives(c);
  if (eval_winner_candidates_only(c, active, inst.procedure) != c.p)
    return yes_solution({}, true, "dcdc-full-amendment-turing");
  std::vector<char> prot(c.m, 0);
  prot[c.p] = 1;
  std::optional<std::vector<int>> best;
  for (int rival : active) {
    if (rival == c.p) continue;
    auto deletions = full_amendment_min_deletions(c, active, rival, prot);
    if (deletions && (!best || deletions->size() < best->size())) best = deletions;
  }
  if (!best || static_cast<int>(best->size()) > inst.budgets.dc)
    return no_solution("dcdc-full-amendment-turing");
  Witness w;
  w.deleted_candidates = names_of(c, *best);
  return yes_solution(std::move(w), true, "dcdc-full-amendment-turing");
}

// ---------------------------------------------------------------------
// The (m-h) family: destructive candidate addition.
// ---------------------------------------------------------------------

Solution solve_dcac_m_minus_h(const ControlInstance& inst, const SolveCaps& caps) {
  (void)caps;
  inst.validate();
  require_problem(inst, ControlProblem::DCAC);
  if (inst.procedure.kind != ProcedureKind::amendment)
    throw input_error("solver expects an amendment-family procedure");
  // Effective d: the relative parameter, or 1 for procedures that behave
  // as full-amendment throughout (sizes only grow here, so absolute h must
  // dominate the largest reachable size).
  int h_param;
  if (inst.procedure.h_mode == HMode::relative) {
    h_param = inst.procedure.h;
  } else {
    const int max_m = inst.total_candidates();
    if (inst.procedure.h < max_m - 1)
      throw input_error("absolute-step instance is not full-amendment at all reachable sizes");
    h_param = 1;
  }

  Ctx c = make_ctx(inst);
  std::vector<int> pool;
  for (int i = 0; i < c.m; ++i) {
    if (!c.is_reg[i]) pool.push_back(i);
  }
  const int k = inst.budgets.ac;
  auto p_loses_with = [&](const std::vector<int>& added) {
    std::vector<int> active = registered_actives(c);
    active.insert(active.end(), added.begin(), added.end());
    std::sort(active.begin(), active.end());
    return eval_winner_candidates_only(c, active, inst.procedure) != c.p;
  };

  // Step 1: all additions up to min(2h-1, k), ascending size.
  const int small_cap = std::min(2 * h_param - 1, k);
  for (const auto& subset : subsets_up_to(pool, small_cap)) {
    if (p_loses_with(subset)) {
      Witness w;
      w.added_candidates = names_of(c, subset);
      return yes_solution(std::move(w), true, "dcac-m-minus-h");
    }
  }
  if (h_param == 1) return no_solution("dcac-m-minus-h");  // one addition always suffices
  if (static_cast<int>(pool.size()) <= 2 * h_param - 1 || k <= 2 * h_param - 1)
    return no_solution("dcac-m-minus-h");

  // Step 2: endpoints fixed, bounded middle.
  const int side = h_param - 1;
  const int kprime = k - 2 * side;
  for (const auto& sl : subsets_up_to(pool, side)) {
    if (static_cast<int>(sl.size()) != side) continue;
    for (const auto& sr : subsets_up_to(pool, side)) {
      if (static_cast<int>(sr.size()) != side) continue;
      if (sl.back() >= sr.front()) continue;  // all of S^L precedes all of S^R
      std::vector<char> in_lr(c.m, 0);
      for (int x : sl) in_lr[x] = 1;
      for (int x : sr) in_lr[x] = 1;
      std::vector<int> slr = sl;
      slr.insert(slr.end(), sr.begin(), sr.end());
      std::sort(slr.begin(), slr.end());

      const int dlr = sl.back();   // rightmost of S^L
      const int drl = sr.front();  // leftmost of S^R
      std::vector<int> middle;     // X u Y: unchosen pool candidates between them
      for (int x : pool) {
        if (!in_lr[x] && dlr < x && x < drl) middle.push_back(x);
      }
      // Successors of the target among C u S^LR.
      int ell = 0;
      for (int x : registered_actives(c)) {
        if (x > c.p) ++ell;
      }
      for (int x : slr) {
        if (x > c.p) ++ell;
      }
      if (ell >= h_param - 1) continue;  // resolved in step 1 when solvable
      const int kpp = std::min(h_param - ell, kprime);
      for (const auto& z : subsets_up_to(middle, kpp)) {
        std::vector<int> added = slr;
        added.insert(added.end(), z.begin(), z.end());
        std::sort(added.begin(), added.end());
        if (p_loses_with(added)) {
          Witness w;
          w.added_candidates = names_of(c, added);
          return yes_solution(std::move(w), false, "dcac-m-minus-h");
        }
      }
    }
  }
  return no_solution("dcac-m-minus-h");
}

// ---------------------------------------------------------------------
// The (m-h) family: constructive candidate addition via dominating sets.
// ---------------------------------------------------------------------

Solution solve_ccac_m_minus_h_fpt(const ControlInstance& inst, const SolveCaps& caps) {
  inst.validate();
  require_problem(inst, ControlProblem::CCAC);
  if (inst.procedure.kind != ProcedureKind::amendment)
    throw input_error("solver expects an amendment-family procedure");
  int d_eff;
  if (inst.procedure.h_mode == HMode::relative) {
    d_eff = inst.procedure.h;
  } else {
    const int max_m = inst.total_candidates();
    if (inst.procedure.h < max_m - 1)
      throw input_error("absolute-step instance is not full-amendment at all reachable sizes");
    d_eff = 1;
  }

  Ctx c = make_ctx(inst);
  const std::vector<int> reg = registered_actives(c);
  const int k = inst.budgets.ac;
  GraphBudget gbudget{caps.graph_max_nodes};

  // Registered successors unbeaten by the target doom every extension.
  for (int x : reg) {
    if (x > c.p && !c.beats(c.p, x)) return no_solution("ccac-m-minus-h-rbds");
  }
  if (eval_winner_candidates_only(c, reg, inst.procedure) == c.p)
    return yes_solution({}, true, "ccac-m-minus-h-rbds");

  std::vector<int> d1, d2p;
  for (int i = 0; i < c.m; ++i) {
    if (c.is_reg[i]) continue;
    if (i < c.p) {
      d1.push_back(i);
    } else if (c.beats(c.p, i)) {
      d2p.push_back(i);
    }
  }

  auto p_wins_with = [&](const std::vector<int>& added) {
    std::vector<int> active = reg;
    active.insert(active.end(), added.begin(), added.end());
    std::sort(active.begin(), active.end());
    return eval_winner_candidates_only(c, active, inst.procedure) == c.p;
  };

  std::optional<std::vector<int>> best;
  auto consider = [&](std::vector<int> added) {
    std::sort(added.begin(), added.end());
    if (!p_wins_with(added)) return;  // soundness gate
    if (!best || added.size() < best->size()) best = std::move(added);
  };

  // Dominating-set subinstance: reds are the spoiler predecessors, blues
  // the candidates that can be slotted after the target to break them.
  auto rbds_branch = [&](const std::vector<int>& base /*C u S (u S')*/,
                         const std::vector<int>& reds, const std::vector<int>& blues,
                         int kappa, const std::vector<int>& chosen) {
    if (kappa < 0) return;
    std::vector<std::string> red_names, blue_names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int r : reds) red_names.push_back(c.order[r]);
    for (int b : blues) blue_names.push_back(c.order[b]);
    for (int r : reds) {
      for (int b : blues) {
        if (!c.beats(r, b)) edges.emplace_back(c.order[r], c.order[b]);
      }
    }
    BipartiteGraph g(red_names, blue_names, edges);
    std::vector<std::string> cover;
    auto mincover = min_rbds_cover(g, &cover, gbudget);
    if (!mincover || *mincover > kappa) return;
    std::vector<int> added = chosen;
    for (const std::string& b : cover) added.push_back(c.idx.at(b));
    (void)base;
    consider(std::move(added));
  };

  if (d_eff == 1) {
    for (const auto& s : subsets_up_to(d1, k)) {
      std::vector<int> base = reg;
      base.insert(base.end(), s.begin(), s.end());
      std::sort(base.begin(), base.end());
      std::vector<int> reds;
      for (int x : base) {
        if (x >= c.p) break;
        // red: a predecessor of the target beating all its successors in base
        bool all = true;
        for (int y : base) {
          if (y > x && !c.beats(x, y)) {
            all = false;
            break;
          }
        }
        if (all) reds.push_back(x);
      }
      const int kappa = std::min<int>(k - static_cast<int>(s.size()),
                                      static_cast<int>(d2p.size()));
      rbds_branch(base, reds, d2p, kappa, s);
    }
  } else {
    const int sprime_cap = std::min(d_eff - 1, static_cast<int>(d2p.size()));
    for (const auto& s : subsets_up_to(d1, k)) {
      for (const auto& sp : subsets_up_to(d2p, sprime_cap)) {
        if (static_cast<int>(s.size() + sp.size()) > k) continue;
        std::vector<int> chosen = s;
        chosen.insert(chosen.end(), sp.begin(), sp.end());
        std::vector<int> base = reg;
        base.insert(base.end(), chosen.begin(), chosen.end());
        std::sort(base.begin(), base.end());
        const int m_prime = static_cast<int>(base.size());

        // Blues available: candidates of D2' before every member of S'.
        std::vector<int> blues;
        for (int b : d2p) {
          if (std::find(sp.begin(), sp.end(), b) != sp.end()) continue;
          bool before_all = true;
          for (int x : sp) {
            if (b > x) before_all = false;
          }
          if (before_all) blues.push_back(b);
        }
        const int kappa =
            std::min<int>(k - static_cast<int>(chosen.size()), static_cast<int>(blues.size()));

        const ResolvedStep rstep = resolve_h(inst.procedure, m_prime);
        if (rstep.first_candidate_rule) {
          // Degenerate regime: the window formulas below assume a real
          // step, so decide these small branches by direct simulation.
          for (const auto& extra : subsets_up_to(blues, kappa)) {
            std::vector<int> added = chosen;
            added.insert(added.end(), extra.begin(), extra.end());
            std::sort(added.begin(), added.end());
            if (p_wins_with(added)) consider(added);
          }
          continue;
        }

        // A: the last d_eff - 1 positions of the base agenda.
        const int tail_from = m_prime - (d_eff - 1);
        int p_pos_base = 0;
        for (int i = 0; i < m_prime; ++i) {
          if (base[i] == c.p) p_pos_base = i;
        }
        if (p_pos_base >= tail_from) {
          if (p_wins_with(chosen)) consider(chosen);
          continue;
        }
        std::vector<int> reds;
        const int step = m_prime - d_eff;
        for (int i = 0; i < p_pos_base; ++i) {
          const int x = base[i];
          bool red;
          if (i + 1 <= d_eff - 1) {
            // beats the next m'-h successors
            red = true;
            for (int j = i + 1; j <= std::min(i + step, m_prime - 1); ++j) {
              if (!c.beats(x, base[j])) {
                red = false;
                break;
              }
            }
          } else {
            red = true;
            for (int j = i + 1; j < m_prime; ++j) {
              if (!c.beats(x, base[j])) {
                red = false;
                break;
              }
            }
          }
          if (red) reds.push_back(x);
        }
        rbds_branch(base, reds, blues, kappa, chosen);
      }
    }
  }

  if (!best || static_cast<int>(best->size()) > k) return no_solution("ccac-m-minus-h-rbds");
  Witness w;
  w.added_candidates = names_of(c, *best);
  return yes_solution(std::move(w), d_eff == 1, "ccac-m-minus-h-rbds");
}

// ---------------------------------------------------------------------
// Successive procedure: candidate control enumerations.
// ---------------------------------------------------------------------

Solution solve_ccdc_successive_fpt(const ControlInstance& inst) {
  inst.validate();
  require_problem(inst, ControlProblem::CCDC);
  if (inst.procedure.kind != ProcedureKind::successive)
    throw input_error("solver expects the successive procedure");
  Ctx c = make_ctx(inst);
  const std::vector<int> reg = registered_actives(c);
  std::vector<int> successors;
  for (int x : reg) {
    if (x > c.p) successors.push_back(x);
  }
  const int k = inst.budgets.dc;

  std::optional<std::vector<int>> best;
  for (const auto& s0 : subsets_up_to(successors, k)) {
    std::vector<int> deleted = s0;
    std::vector<int> active;
    for (int x : reg) {
      if (std::find(deleted.begin(), deleted.end(), x) == deleted.end()) active.push_back(x);
    }
    // Forced deletions: winners preceding the target.
    while (true) {
      const int w = eval_winner_candidates_only(c, active, inst.procedure);
      if (w == c.p) {
        if (static_cast<int>(deleted.size()) <= k &&
            (!best || deleted.size() < best->size())) {
          best = deleted;
        }
        break;
      }
      if (w > c.p) break;  // a hypothesized-surviving successor wins; discard
      deleted.push_back(w);
      if (static_cast<int>(deleted.size()) > k) break;
      active.erase(std::find(active.begin(), active.end(), w));
    }
  }
  if (!best) return no_solution("ccdc-successive-enum");
  Witness w;
  w.deleted_candidates = names_of(c, *best);
  return yes_solution(std::move(w), true, "ccdc-successive-enum");
}

Solution solve_dcac_successive_fpt(const ControlInstance& inst) {
  inst.validate();
  require_problem(inst, ControlProblem::DCAC);
  if (inst.procedure.kind != ProcedureKind::successive)
    throw input_error("solver expects the successive procedure");
  Ctx c = make_ctx(inst);
  const std::vector<int> reg = registered_actives(c);
  const int k = inst.budgets.ac;
  std::vector<int> succ_pool, pred_pool;
  for (int i = 0; i < c.m; ++i) {
    if (c.is_reg[i]) continue;
    (i > c.p ? succ_pool : pred_pool).push_back(i);
  }
  auto winner_with = [&](const std::vector<int>& added) {
    std::vector<int> active = reg;
    active.insert(active.end(), added.begin(), added.end());
    std::sort(active.begin(), active.end());
    return eval_winner_candidates_only(c, active, inst.procedure);
  };

  const auto subsets = subsets_up_to(succ_pool, k);
  // Ascending total witness size: subsets of size t, then size t-1 plus a
  // single unregistered predecessor.
  for (int t = 0; t <= k; ++t) {
    for (const auto& s : subsets) {
      if (static_cast<int>(s.size()) == t && winner_with(s) != c.p) {
        Witness w;
        w.added_candidates = names_of(c, s);
        return yes_solution(std::move(w), true, "dcac-successive-enum");
      }
    }
    if (t >= 1) {
      for (const auto& s : subsets) {
        if (static_cast<int>(s.size()) != t - 1) continue;
        for (int d : pred_pool) {
          std::vector<int> added = s;
          added.push_back(d);
          if (winner_with(added) != c.p) {
            Witness w;
            w.added_candidates = names_of(c, added);
            return yes_solution(std::move(w), true, "dcac-successive-enum");
          }
        }
      }
    }
  }
  return no_solution("dcac-successive-enum");
}

// ---------------------------------------------------------------------
// First-position fast paths (amendment family, distinguished candidate
// leads the agenda: winning is equivalent to being the Condorcet winner,
// except in the degenerate relative regime where the head always wins).
// ---------------------------------------------------------------------

Solution solve_first_position(const ControlInstance& inst) {
  inst.validate();
  if (inst.procedure.kind != ProcedureKind::amendment)
    throw input_error("first-position rules apply to the amendment family");
  if (inst.agenda.position(inst.distinguished) != 1)
    throw input_error("first-position rules require the distinguished candidate to lead");
  Ctx c = make_ctx(inst);
  const std::vector<int> reg = registered_actives(c);
  const bool relative = inst.procedure.h_mode == HMode::relative;
  const int d_rel = inst.procedure.h;
  const int m_reg = static_cast<int>(reg.size());
  const bool wins_now = eval_winner_candidates_only(c, reg, inst.procedure) == c.p;
  const std::string algo = "first-position";

  switch (inst.problem) {
    case ControlProblem::CCAC:
    case ControlProblem::DCDC: {
      // Immune: the goal is achievable only when already achieved.
      const bool goal_now = (inst.goal == Goal::constructive) == wins_now;
      return goal_now ? yes_solution({}, true, algo) : no_solution(algo);
    }
    case ControlProblem::CCDC: {
      if (wins_now) return yes_solution({}, true, algo);
      // Rivals the target does not beat must go.
      std::vector<int> must;
      for (int x : reg) {
        if (x != c.p && !c.beats(c.p, x)) must.push_back(x);
      }
      int need = static_cast<int>(must.size());
      std::vector<int> chosen = must;
      if (relative && m_reg > d_rel && m_reg - d_rel < need) {
        // Cheaper: shrink below the degenerate threshold.
        need = m_reg - d_rel;
        chosen.clear();
        for (int x : reg) {
          if (x != c.p && static_cast<int>(chosen.size()) < need) chosen.push_back(x);
        }
      }
      if (need > inst.budgets.dc) return no_solution(algo);
      Witness w;
      w.deleted_candidates = names_of(c, chosen);
      return yes_solution(std::move(w), true, algo);
    }
    case ControlProblem::DCAC: {
      if (!wins_now) return yes_solution({}, true, algo);
      std::vector<int> pool;
      for (int i = 0; i < c.m; ++i) {
        if (!c.is_reg[i]) pool.push_back(i);
      }
      const int k = inst.budgets.ac;
      // Additions needed to leave the degenerate always-first regime.
      const int cross = relative ? std::max(0, d_rel - m_reg + 1) : 0;
      bool unbeaten_reg = false;
      for (int x : reg) {
        if (x != c.p && !c.beats(c.p, x)) unbeaten_reg = true;
      }
      if (unbeaten_reg && cross >= 1 && cross <= k &&
          cross <= static_cast<int>(pool.size())) {
        std::vector<int> fillers(pool.begin(), pool.begin() + cross);
        Witness w;
        w.added_candidates = names_of(c, fillers);
        return yes_solution(std::move(w), true, algo);
      }
      for (int d : pool) {
        if (c.beats(c.p, d)) continue;
        const int need = std::max(1, cross);
        if (need > k || need > static_cast<int>(pool.size())) continue;
        std::vector<int> added = {d};
        for (int filler : pool) {
          if (static_cast<int>(added.size()) >= need) break;
          if (filler != d) added.push_back(filler);
        }
        std::sort(added.begin(), added.end());
        Witness w;
        w.added_candidates = names_of(c, added);
        return yes_solution(std::move(w), need == 1, algo);
      }
      return no_solution(algo);
    }
    case ControlProblem::DCAV:
    case ControlProblem::DCDV: {
      if (!wins_now) return yes_solution({}, true, algo);
      if (relative && m_reg <= d_rel) return no_solution(algo);  // head always wins
      const bool adding = inst.problem == ControlProblem::DCAV;
      const int budget = adding ? inst.budgets.av : inst.budgets.dv;
      std::optional<Witness> best;
      int best_cost = budget + 1;
      for (int r : reg) {
        if (r == c.p) continue;
        const int deficit = static_cast<int>(c.sup(c.p, r) - c.sup(r, c.p));
        if (deficit > budget || deficit >= best_cost) continue;
        Witness w;
        int need = deficit;
        if (adding) {
          for (std::size_t g = c.num_v_groups; g < c.groups.size() && need > 0; ++g) {
            const VoteGroup& vg = c.groups[g];
            if (vg.rank[r] < vg.rank[c.p]) {
              const int take = std::min(need, vg.mult);
              w.added_votes.push_back({vg.order, take});
              need -= take;
            }
          }
        } else {
          for (int g = 0; g < c.num_v_groups && need > 0; ++g) {
            const VoteGroup& vg = c.groups[g];
            if (vg.rank[c.p] < vg.rank[r]) {
              const int take = std::min(need, vg.mult);
              w.deleted_votes.push_back({vg.order, take});
              need -= take;
            }
          }
        }
        if (need > 0) continue;  // not enough suitable votes for this rival
        best = std::move(w);
        best_cost = deficit;
      }
      if (!best) return no_solution(algo);
      return yes_solution(std::move(*best), true, algo);
    }
    default:
      throw input_error("first-position rules do not cover " +
                        control_problem_name(inst.problem));
  }
}

// ---------------------------------------------------------------------
// Routing and dispatch.
// ---------------------------------------------------------------------

std::string procedure_class_name(ProcedureClass c) {
  switch (c) {
    case ProcedureClass::amendment: return "amendment";
    case ProcedureClass::h_amendment: return "h-amendment";
    case ProcedureClass::full_amendment: return "full-amendment";
    case ProcedureClass::m_minus_h: return "m-minus-h-amendment";
    case ProcedureClass::successive: return "successive";
  }
  throw internal_error("unreachable procedure class");
}

ProcedureClass classify_procedure(const ControlInstance& inst) {
  const ProcedureSpec& spec = inst.procedure;
  if (spec.kind == ProcedureKind::successive) return ProcedureClass::successive;
  if (spec.h_mode == HMode::relative) {
    return spec.h == 1 ? ProcedureClass::full_amendment : ProcedureClass::m_minus_h;
  }
  if (spec.h == 1) return ProcedureClass::amendment;
  // Largest candidate count any edit can reach.
  int max_m = static_cast<int>(inst.registered.size());
  if (inst.budgets.ac > 0) {
    max_m += std::min<int>(inst.budgets.ac, static_cast<int>(inst.unregistered.size()));
  }
  return spec.h >= max_m - 1 ? ProcedureClass::full_amendment : ProcedureClass::h_amendment;
}

Route routing_for(ControlProblem problem, ProcedureClass proc, bool first) {
  const bool successive = proc == ProcedureClass::successive;
  const bool amendment_family = !successive;
  switch (problem) {
    case ControlProblem::CCAV:
    case ControlProblem::CCDV:
      if (successive)
        return {"eccev-successive-ilp",
                "FPT in the distinguished candidate's predecessors (signature-class program)"};
      return {"brute-force", "W[1]/W[2]-hard cell; exact search only"};
    case ControlProblem::DCAV:
    case ControlProblem::DCDV:
      if (successive) return {"edcev-successive-greedy", "polynomial domination greedy"};
      if (first) return {"first-position", "polynomial counting rules for a leading target"};
      if (proc == ProcedureClass::amendment || proc == ProcedureClass::h_amendment)
        return {"edcev-h-amendment",
                "FPT in the step plus predecessors (configurations + majority-graph edits)"};
      return {"brute-force", "W[1]/W[2]-hard cell; exact search only"};
    case ControlProblem::CCAC:
      if (first) return {"immune", "adding candidates cannot help a leading non-winner"};
      if (successive) return {"brute-force", "W[2]-hard cell; exact search only"};
      if (proc == ProcedureClass::amendment)
        return {"ccac-amendment-dp", "polynomial beating-path dynamic program"};
      if (proc == ProcedureClass::h_amendment)
        return {"brute-force", "complexity open for fixed steps >= 2; exact search only"};
      return {"ccac-m-minus-h-rbds",
              "FPT in predecessors via dominating-set subinstances"};
    case ControlProblem::CCDC:
      if (amendment_family && first)
        return {"first-position", "delete the rivals the leading target does not beat"};
      if (successive)
        return {"ccdc-successive-enum", "FPT in successors; forced-deletion enumeration"};
      if (proc == ProcedureClass::amendment)
        return {"ccdc-amendment-dp", "polynomial beating-path dynamic program"};
      if (proc == ProcedureClass::full_amendment)
        return {"ccdc-full-amendment-rules", "polynomial deletion rules"};
      if (proc == ProcedureClass::m_minus_h)
        return {"brute-force",
                "complexity open; deletion rules unsound for relative steps >= 2"};
      return {"brute-force", "complexity open for fixed steps >= 2; exact search only"};
    case ControlProblem::DCAC:
      if (successive)
        return {"dcac-successive-enum", "FPT in successors; subset-plus-single enumeration"};
      if (first) return {"first-position", "a single unbeaten addition decides"};
      if (proc == ProcedureClass::amendment)
        return {"dcac-amendment-turing", "per-rival reduction to constructive addition"};
      if (proc == ProcedureClass::h_amendment)
        return {"brute-force", "no dedicated algorithm for fixed steps >= 2"};
      return {"dcac-m-minus-h", "polynomial bounded-solution search"};
    case ControlProblem::DCDC:
      if (first) return {"immune", "deleting candidates cannot unseat a leading winner"};
      if (successive) return {"brute-force", "W[1]-hard cell; exact search only"};
      if (proc == ProcedureClass::amendment)
        return {"dcdc-amendment-turing", "per-rival reduction to constructive deletion"};
      if (proc == ProcedureClass::full_amendment)
        return {"dcdc-full-amendment-turing", "per-rival deletion rules"};
      return {"brute-force", "complexity open; exact search only"};
    case ControlProblem::MULTIMODE:
      return {"brute-force", "generalized multimode control; exact search"};
  }
  throw internal_error("unreachable control problem");
}

namespace {

int vote_total(const std::vector<Vote>& votes) {
  int n = 0;
  for (const Vote& v : votes) n += v.multiplicity;
  return n;
}

// Wraps the exact-edit solvers into budgeted vote-control solutions by
// sweeping exact sizes (fewest edits first).
Solution solve_vote_control_via_exact(const ControlInstance& inst, const SolveCaps& caps,
                                      const std::string& algo) {
  ExactEditInstance ex;
  ex.candidates = inst.registered;  // vote-control shapes have D = {}
  ex.distinguished = inst.distinguished;
  ex.registered_pool = inst.registered_votes;
  ex.unregistered_pool = inst.unregistered_votes;
  ex.agenda = inst.agenda;
  ex.goal = inst.goal;
  ex.procedure = inst.procedure;
  const int nv = vote_total(inst.registered_votes);

  auto run = [&](int keep_v, int keep_w) -> std::optional<VotePair> {
    ex.keep_registered = keep_v;
    ex.keep_unregistered = keep_w;
    if (inst.procedure.kind == ProcedureKind::successive) {
      return inst.goal == Goal::constructive ? solve_eccev_successive(ex, caps)
                                             : solve_edcev_successive(ex);
    }
    return solve_edcev_h_amendment(ex, caps);
  };

  const bool adding =
      inst.problem == ControlProblem::CCAV || inst.problem == ControlProblem::DCAV;
  const int budget = adding ? inst.budgets.av : inst.budgets.dv;
  const int limit = adding ? std::min(budget, vote_total(inst.unregistered_votes))
                           : std::min(budget, nv);
  for (int edits = 0; edits <= limit; ++edits) {
    auto picks = adding ? run(nv, edits) : run(nv - edits, 0);
    if (!picks) continue;
    Witness w;
    if (adding) {
      w.added_votes = picks->second;
    } else {
      // Deleted votes: the registered multiset minus the kept picks.
      std::map<std::vector<Candidate>, int> counts;
      for (const Vote& v : inst.registered_votes) counts[v.order] += v.multiplicity;
      for (const Vote& v : picks->first) counts[v.order] -= v.multiplicity;
      for (const auto& [order, mult] : counts) {
        if (mult < 0) throw internal_error("exact edit kept more votes than exist");
        if (mult > 0) w.deleted_votes.push_back({order, mult});
      }
    }
    return yes_solution(std::move(w), true, algo);
  }
  return no_solution(algo);
}

}  // namespace

Solution dispatch_solve(const ControlInstance& inst, const SolveCaps& caps) {
  inst.validate();
  const ProcedureClass proc = classify_procedure(inst);
  const bool first = inst.agenda.position(inst.distinguished) == 1;
  Route route = routing_for(inst.problem, proc, first);

  const bool vote_problem =
      inst.problem == ControlProblem::CCAV || inst.problem == ControlProblem::CCDV ||
      inst.problem == ControlProblem::DCAV || inst.problem == ControlProblem::DCDV;
  // Degenerate relative regime for vote control: the agenda head wins no
  // matter what the votes are.
  if (vote_problem && inst.procedure.kind == ProcedureKind::amendment &&
      inst.procedure.h_mode == HMode::relative &&
      static_cast<int>(inst.registered.size()) <= inst.procedure.h) {
    const bool goal_now = (inst.goal == Goal::constructive) == first;
    Solution s = goal_now ? yes_solution({}, true, "first-candidate-rule")
                          : no_solution("first-candidate-rule");
    s.rationale = "degenerate relative step: the agenda head always wins";
    return s;
  }

  auto run_route = [&](const Route& r) -> Solution {
    const std::string& a = r.algorithm;
    if (a == "immune") {
      Ctx c = make_ctx(inst);
      const bool wins_now =
          eval_winner_candidates_only(c, registered_actives(c), inst.procedure) == c.p;
      const bool goal_now = (inst.goal == Goal::constructive) == wins_now;
      Solution s = goal_now ? yes_solution({}, true, "immune") : no_solution("immune");
      return s;
    }
    if (a == "first-position") return solve_first_position(inst);
    if (a == "eccev-successive-ilp" || a == "edcev-successive-greedy" ||
        a == "edcev-h-amendment") {
      return solve_vote_control_via_exact(inst, caps, a);
    }
    if (a == "ccac-amendment-dp") return solve_ccac_amendment(inst);
    if (a == "ccdc-amendment-dp") return solve_ccdc_amendment(inst);
    if (a == "dcac-amendment-turing" || a == "dcdc-amendment-turing")
      return solve_dcac_dcdc_amendment(inst);
    if (a == "ccdc-full-amendment-rules") return solve_ccdc_full_amendment(inst);
    if (a == "dcdc-full-amendment-turing") return solve_dcdc_full_amendment(inst);
    if (a == "dcac-m-minus-h") return solve_dcac_m_minus_h(inst, caps);
    if (a == "ccac-m-minus-h-rbds") return solve_ccac_m_minus_h_fpt(inst, caps);
    if (a == "ccdc-successive-enum") return solve_ccdc_successive_fpt(inst);
    if (a == "dcac-successive-enum") return solve_dcac_successive_fpt(inst);
    return brute_force_solve(inst, caps);
  };

  Solution sol;
  try {
    sol = run_route(route);
  } catch (const resource_error&) {
    // Dedicated solver over its cap; fall back to the oracle when the
    // instance is small enough, otherwise report the blocked route.
    try {
      sol = brute_force_solve(inst, caps);
      sol.algorithm = "brute-force";
      route.rationale += " (dedicated route over its cap; served by exact search)";
    } catch (const resource_error&) {
      throw resource_error("instance exceeds the caps of both '" + route.algorithm +
                           "' and the exact-search oracle");
    }
  }
  sol.rationale = route.rationale;
  if (sol.decision && !verify_solution(inst, sol))
    throw internal_error("solver '" + sol.algorithm + "' produced a witness that fails re-simulation");
  return sol;
}

}  // namespace agenda_control
