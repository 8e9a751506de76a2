#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "agenda_control/control.hpp"
#include "agenda_control/core.hpp"

namespace test_util {

inline std::vector<std::string> ids(const std::string& spaced) {
  std::istringstream in(spaced);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Election from "a b c", {"a b c", "c b a", ...}; repeated entries merge.
inline agenda_control::Election make_election(const std::string& candidates,
                                              const std::vector<std::string>& votes) {
  std::vector<agenda_control::Vote> vs;
  for (const std::string& v : votes) vs.push_back({ids(v), 1});
  return agenda_control::Election(ids(candidates), vs);
}

inline agenda_control::Agenda make_agenda(const std::string& order) {
  return agenda_control::Agenda(ids(order));
}

// The worked example used throughout: three votes over {a, b, c, d} whose
// majority graph is a -> b -> c -> a (cycle), a -> d, b -> d, d -> c.
inline agenda_control::Election example1() {
  return make_election("a b c d", {"b d c a", "c a b d", "a d b c"});
}

// Condorcet winner a, successive winner b under (a, b, c, d).
inline agenda_control::Election condorcet_split() {
  return make_election("a b c d", {"a b c d", "d a b c", "b c a d"});
}

// example1 extended by e (beaten by d, beats a, b, c).
inline agenda_control::Election example1_extended() {
  return make_election("a b c d e", {"b d e c a", "e c a b d", "a d e b c"});
}

}  // namespace test_util
