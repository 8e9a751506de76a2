#pragma once

// Winner determination for the successive procedure and the h-amendment
// family, plus the beating-path characterization of amendment winners.

#include <functional>
#include <utility>

#include "agenda_control/core.hpp"

namespace agenda_control {

enum class ProcedureKind { successive, amendment };
enum class HMode { absolute, relative };

// Which procedure decides a winner. For the amendment family the step is
// either a fixed h ("amendment h=3") or tied to the candidate count
// ("amendment h=m-2", i.e. relative with d=2).
struct ProcedureSpec {
  ProcedureKind kind = ProcedureKind::successive;
  HMode h_mode = HMode::absolute;
  int h = 1;  // absolute step, or the d of h = m - d

  static ProcedureSpec successive() { return {ProcedureKind::successive, HMode::absolute, 1}; }
  static ProcedureSpec amendment_abs(int h) {
    if (h < 1) throw input_error("amendment procedure requires h >= 1");
    return {ProcedureKind::amendment, HMode::absolute, h};
  }
  static ProcedureSpec amendment_rel(int d) {
    if (d < 1) throw input_error("amendment procedure requires d >= 1 in h = m - d");
    return {ProcedureKind::amendment, HMode::relative, d};
  }

  bool operator==(const ProcedureSpec& other) const = default;
};

// Effective per-round step size for a given candidate count, or the
// degenerate rule that the agenda's first candidate wins outright (the
// relative family with m <= d).
struct ResolvedStep {
  bool first_candidate_rule = false;
  int step = 0;
};

ResolvedStep resolve_h(const ProcedureSpec& spec, int m);

// Round-by-round record of a winner determination.
struct EliminationTrace {
  struct Round {
    Candidate considered;
    std::vector<Candidate> eliminated;
  };
  std::vector<Round> rounds;
  Candidate winner;
};

std::pair<Candidate, EliminationTrace> successive_winner(const Election& e, const Agenda& agenda);

std::pair<Candidate, EliminationTrace> h_amendment_winner(const Election& e, const Agenda& agenda,
                                                          const ProcedureSpec& spec);

// Winner under either procedure kind.
Candidate procedure_winner(const Election& e, const Agenda& agenda, const ProcedureSpec& spec);

// Amendment-family winner over an abstract beats relation (used when a
// majority graph rather than an election is given). beats(a, b) must be
// asymmetric; a "tie" is beats(a,b) == beats(b,a) == false.
Candidate h_amendment_winner_over_relation(
    const std::vector<Candidate>& agenda_order, const ProcedureSpec& spec,
    const std::function<bool(const Candidate&, const Candidate&)>& beats);

// Whether a (c <- c2)-beating path exists with respect to the election
// restricted to active_set and the agenda: a right-to-left sequence from
// c2 down to c in which every new element is beaten by or ties with its
// predecessor in the sequence and beats every active candidate skipped
// between them. The trivial (c <- c) path always exists.
bool beating_path_exists(const Election& e, const Agenda& agenda,
                         const std::set<Candidate>& active_set, const Candidate& c,
                         const Candidate& c2);

// Characterization of amendment (h=1) winners: c wins iff c beats all its
// agenda successors and a (first <- c)-beating path exists.
bool amendment_winner_via_paths(const Election& e, const Agenda& agenda, const Candidate& c);

}  // namespace agenda_control
