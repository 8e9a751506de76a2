#pragma once

// Core data model for sequential voting: candidates, votes, elections,
// agendas, and exact pairwise-majority queries. All arithmetic is integer;
// tie semantics are load-bearing everywhere downstream.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace agenda_control {

// Malformed input (unknown candidate, bad vote, violated precondition).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
  input_error(const std::string& code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_ = "input";
};

// A configured search budget was exceeded; never a silent wrong answer.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; corresponds to CLI exit code 4.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

using Candidate = std::string;

// Identifiers are nonempty strings over [A-Za-z0-9_].
bool valid_candidate_id(const std::string& id);

// A strict linear order over the whole universe, with an integer
// multiplicity so that reductions can emit thousands of identical votes
// compactly.
struct Vote {
  std::vector<Candidate> order;
  int multiplicity = 1;

  bool operator==(const Vote& other) const = default;
};

class MajorityRecord;

// An immutable election (C, V). Votes are canonicalized on construction:
// grouped by identical order (multiplicities summed) and sorted
// lexicographically, so equality and serialization are deterministic.
class Election {
 public:
  Election(std::vector<Candidate> universe, std::vector<Vote> votes);

  const std::vector<Candidate>& universe() const { return universe_; }
  const std::vector<Vote>& votes() const { return votes_; }
  int num_votes() const { return total_; }
  int num_candidates() const { return static_cast<int>(universe_.size()); }

  bool contains(const Candidate& c) const;
  int candidate_index(const Candidate& c) const;  // input_error if unknown

  // n_V(a, b): number of votes ranking a before b.
  int pairwise_support(const Candidate& a, const Candidate& b) const;
  bool beats(const Candidate& a, const Candidate& b) const;
  bool ties(const Candidate& a, const Candidate& b) const;

  // True iff strictly more than n/2 votes rank c before every member of
  // S; vacuously true for empty S.
  bool majority_dominates(const Candidate& c, const std::set<Candidate>& S) const;

  std::optional<Candidate> condorcet_winner() const;

  // Election restricted to keep, votes retaining their relative order.
  Election restricted(const std::set<Candidate>& keep) const;

  MajorityRecord majority_record() const;

 private:
  std::vector<Candidate> universe_;  // sorted lexicographically
  std::vector<Vote> votes_;          // canonical: grouped + sorted
  std::unordered_map<Candidate, int> index_;
  std::vector<int> support_;  // m*m matrix, weighted by multiplicity
  int total_ = 0;
};

// Pairwise support table detached from the election it came from.
class MajorityRecord {
 public:
  MajorityRecord(std::vector<Candidate> candidates, std::vector<int> support, int n);

  const std::vector<Candidate>& candidates() const { return candidates_; }
  int n() const { return n_; }
  int support(const Candidate& a, const Candidate& b) const;
  bool beats(const Candidate& a, const Candidate& b) const;

 private:
  std::vector<Candidate> candidates_;
  std::unordered_map<Candidate, int> index_;
  std::vector<int> support_;
  int n_ = 0;
};

// A strict consideration order over some candidate set.
class Agenda {
 public:
  Agenda() = default;
  explicit Agenda(std::vector<Candidate> order);

  const std::vector<Candidate>& order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  bool contains(const Candidate& c) const { return pos_.count(c) > 0; }
  int position(const Candidate& c) const;  // 1-based
  const Candidate& at(int position_1_based) const;

  // True iff the agenda is a permutation of the given universe.
  bool covers(const std::vector<Candidate>& universe) const;

  Agenda restricted(const std::set<Candidate>& keep) const;

  bool operator==(const Agenda& other) const { return order_ == other.order_; }

 private:
  std::vector<Candidate> order_;
  std::unordered_map<Candidate, int> pos_;
};

}  // namespace agenda_control
