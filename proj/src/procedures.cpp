#include "agenda_control/procedures.hpp"

#include <algorithm>

namespace agenda_control {

ResolvedStep resolve_h(const ProcedureSpec& spec, int m) {
  if (m < 1) throw input_error("resolve_h requires m >= 1");
  if (spec.kind != ProcedureKind::amendment)
    throw input_error("resolve_h applies to amendment procedures only");
  if (spec.h_mode == HMode::absolute) {
    // With m <= h the winner is determined by the (m-1)-amendment rounds.
    return {false, std::min(spec.h, std::max(m - 1, 0))};
  }
  if (m <= spec.h) return {true, 0};
  return {false, m - spec.h};
}

static void check_agenda(const Election& e, const Agenda& agenda) {
  if (!agenda.covers(e.universe()))
    throw input_error("agenda_mismatch", "agenda does not cover the election's universe");
}

std::pair<Candidate, EliminationTrace> successive_winner(const Election& e, const Agenda& agenda) {
  check_agenda(e, agenda);
  const auto& order = agenda.order();
  const int m = agenda.size();
  EliminationTrace trace;
  for (int i = 0; i < m; ++i) {
    std::set<Candidate> successors(order.begin() + i + 1, order.end());
    if (e.majority_dominates(order[i], successors)) {
      trace.winner = order[i];
      if (!successors.empty()) {
        trace.rounds.push_back({order[i], std::vector<Candidate>(order.begin() + i + 1, order.end())});
      }
      return {order[i], trace};
    }
    trace.rounds.push_back({order[i], {order[i]}});
  }
  throw internal_error("successive procedure found no winner");  // last candidate dominates {}
}

namespace {

template <typename BeatsFn>
std::pair<Candidate, EliminationTrace> run_amendment_rounds(std::vector<Candidate> current,
                                                            int step, BeatsFn&& beats) {
  EliminationTrace trace;
  while (current.size() > 1) {
    const Candidate& head = current.front();
    const int window = std::min<int>(step, static_cast<int>(current.size()) - 1);
    bool beats_all = true;
    for (int i = 1; i <= window && beats_all; ++i) {
      if (!beats(head, current[i])) beats_all = false;
    }
    if (beats_all && window > 0) {
      std::vector<Candidate> gone(current.begin() + 1, current.begin() + 1 + window);
      trace.rounds.push_back({head, gone});
      current.erase(current.begin() + 1, current.begin() + 1 + window);
    } else {
      trace.rounds.push_back({head, {head}});
      current.erase(current.begin());
    }
  }
  trace.winner = current.front();
  return {current.front(), trace};
}

}  // namespace

std::pair<Candidate, EliminationTrace> h_amendment_winner(const Election& e, const Agenda& agenda,
                                                          const ProcedureSpec& spec) {
  check_agenda(e, agenda);
  if (spec.kind != ProcedureKind::amendment)
    throw input_error("h_amendment_winner requires an amendment procedure");
  const ResolvedStep rs = resolve_h(spec, agenda.size());
  if (rs.first_candidate_rule) {
    EliminationTrace trace;
    trace.winner = agenda.at(1);
    return {trace.winner, trace};
  }
  return run_amendment_rounds(agenda.order(), rs.step,
                              [&e](const Candidate& a, const Candidate& b) { return e.beats(a, b); });
}

Candidate procedure_winner(const Election& e, const Agenda& agenda, const ProcedureSpec& spec) {
  if (spec.kind == ProcedureKind::successive) return successive_winner(e, agenda).first;
  return h_amendment_winner(e, agenda, spec).first;
}

Candidate h_amendment_winner_over_relation(
    const std::vector<Candidate>& agenda_order, const ProcedureSpec& spec,
    const std::function<bool(const Candidate&, const Candidate&)>& beats) {
  if (agenda_order.empty()) throw input_error("empty agenda");
  const ResolvedStep rs = resolve_h(spec, static_cast<int>(agenda_order.size()));
  if (rs.first_candidate_rule) return agenda_order.front();
  return run_amendment_rounds(agenda_order, rs.step, beats).first;
}

bool beating_path_exists(const Election& e, const Agenda& agenda,
                         const std::set<Candidate>& active_set, const Candidate& c,
                         const Candidate& c2) {
  if (!active_set.count(c) || !active_set.count(c2))
    throw input_error("beating path endpoints must belong to the active candidate set");
  if (agenda.position(c) > agenda.position(c2))
    throw input_error("beating path target must not follow the source in the agenda");

  // Active candidates in agenda order.
  std::vector<Candidate> active;
  for (const Candidate& x : agenda.order()) {
    if (active_set.count(x)) active.push_back(x);
  }
  const int n = static_cast<int>(active.size());
  int src = -1, dst = -1;
  for (int i = 0; i < n; ++i) {
    if (active[i] == c2) src = i;
    if (active[i] == c) dst = i;
  }
  if (src == dst) return true;  // trivial path

  // Right-to-left reachability: reach[i] = a path from c2 down to active[i].
  std::vector<char> reach(n, 0);
  reach[src] = 1;
  for (int i = src - 1; i >= dst; --i) {
    for (int j = i + 1; j <= src && !reach[i]; ++j) {
      if (!reach[j]) continue;
      if (e.beats(active[i], active[j])) continue;  // must be beaten by or tie with
      bool beats_between = true;
      for (int l = i + 1; l < j && beats_between; ++l) {
        if (!e.beats(active[i], active[l])) beats_between = false;
      }
      if (beats_between) reach[i] = 1;
    }
  }
  return reach[dst] != 0;
}

bool amendment_winner_via_paths(const Election& e, const Agenda& agenda, const Candidate& c) {
  check_agenda(e, agenda);
  const int pos = agenda.position(c);
  for (int i = pos + 1; i <= agenda.size(); ++i) {
    if (!e.beats(c, agenda.at(i))) return false;
  }
  std::set<Candidate> all(e.universe().begin(), e.universe().end());
  return beating_path_exists(e, agenda, all, agenda.at(1), c);
}

}  // namespace agenda_control
