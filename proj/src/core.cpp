#include "agenda_control/core.hpp"

#include <algorithm>
#include <cctype>

namespace agenda_control {

bool valid_candidate_id(const std::string& id) {
  if (id.empty()) return false;
  for (char ch : id) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

Election::Election(std::vector<Candidate> universe, std::vector<Vote> votes)
    : universe_(std::move(universe)) {
  if (universe_.empty()) throw input_error("election requires a nonempty candidate universe");
  std::sort(universe_.begin(), universe_.end());
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!valid_candidate_id(universe_[i]))
      throw input_error("bad_candidate_id", "invalid candidate id: '" + universe_[i] + "'");
    if (i > 0 && universe_[i] == universe_[i - 1])
      throw input_error("duplicate_candidate", "duplicate candidate: " + universe_[i]);
    index_.emplace(universe_[i], static_cast<int>(i));
  }

  const int m = num_candidates();
  // Canonicalize: merge identical orders, sort lexicographically.
  std::sort(votes.begin(), votes.end(),
            [](const Vote& a, const Vote& b) { return a.order < b.order; });
  for (const Vote& v : votes) {
    if (v.multiplicity < 1) throw input_error("vote multiplicity must be >= 1");
    if (static_cast<int>(v.order.size()) != m)
      throw input_error("vote_universe_mismatch",
                        "vote does not cover the candidate universe");
    std::vector<char> seen(m, 0);
    for (const Candidate& c : v.order) {
      auto it = index_.find(c);
      if (it == index_.end())
        throw input_error("vote_universe_mismatch", "vote mentions unknown candidate: " + c);
      if (seen[it->second]++)
        throw input_error("vote_universe_mismatch", "vote repeats candidate: " + c);
    }
    if (!votes_.empty() && votes_.back().order == v.order) {
      votes_.back().multiplicity += v.multiplicity;
    } else {
      votes_.push_back(v);
    }
  }

  support_.assign(static_cast<std::size_t>(m) * m, 0);
  for (const Vote& v : votes_) {
    total_ += v.multiplicity;
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) rank[index_.at(v.order[r])] = r;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b && rank[a] < rank[b]) support_[a * m + b] += v.multiplicity;
      }
    }
  }
}

bool Election::contains(const Candidate& c) const { return index_.count(c) > 0; }

int Election::candidate_index(const Candidate& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw input_error("unknown_candidate", "unknown candidate: " + c);
  return it->second;
}

int Election::pairwise_support(const Candidate& a, const Candidate& b) const {
  if (a == b) throw input_error("pairwise_support requires two distinct candidates");
  const int ia = candidate_index(a), ib = candidate_index(b);
  return support_[ia * num_candidates() + ib];
}

bool Election::beats(const Candidate& a, const Candidate& b) const {
  return pairwise_support(a, b) > pairwise_support(b, a);
}

bool Election::ties(const Candidate& a, const Candidate& b) const {
  return pairwise_support(a, b) == pairwise_support(b, a);
}

bool Election::majority_dominates(const Candidate& c, const std::set<Candidate>& S) const {
  if (S.count(c)) throw input_error("majority_dominates: candidate is in the target set");
  const int ic = candidate_index(c);
  std::vector<int> targets;
  targets.reserve(S.size());
  for (const Candidate& s : S) targets.push_back(candidate_index(s));
  if (targets.empty()) return true;

  const int m = num_candidates();
  int dominating = 0;
  for (const Vote& v : votes_) {
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) rank[index_.at(v.order[r])] = r;
    bool above_all = true;
    for (int t : targets) {
      if (rank[t] < rank[ic]) {
        above_all = false;
        break;
      }
    }
    if (above_all) dominating += v.multiplicity;
  }
  return 2 * dominating > total_;
}

std::optional<Candidate> Election::condorcet_winner() const {
  const int m = num_candidates();
  for (int a = 0; a < m; ++a) {
    bool all = true;
    for (int b = 0; b < m && all; ++b) {
      if (a != b && support_[a * m + b] <= support_[b * m + a]) all = false;
    }
    if (all) return universe_[a];
  }
  return std::nullopt;
}

Election Election::restricted(const std::set<Candidate>& keep) const {
  if (keep.empty()) throw input_error("restriction requires a nonempty candidate set");
  for (const Candidate& c : keep) {
    if (!contains(c)) throw input_error("unknown_candidate", "restriction to unknown candidate: " + c);
  }
  std::vector<Candidate> universe(keep.begin(), keep.end());
  std::vector<Vote> votes;
  votes.reserve(votes_.size());
  for (const Vote& v : votes_) {
    Vote r;
    r.multiplicity = v.multiplicity;
    for (const Candidate& c : v.order) {
      if (keep.count(c)) r.order.push_back(c);
    }
    votes.push_back(std::move(r));
  }
  return Election(std::move(universe), std::move(votes));
}

MajorityRecord Election::majority_record() const {
  return MajorityRecord(universe_, support_, total_);
}

MajorityRecord::MajorityRecord(std::vector<Candidate> candidates, std::vector<int> support, int n)
    : candidates_(std::move(candidates)), support_(std::move(support)), n_(n) {
  for (std::size_t i = 0; i < candidates_.size(); ++i)
    index_.emplace(candidates_[i], static_cast<int>(i));
}

int MajorityRecord::support(const Candidate& a, const Candidate& b) const {
  auto ia = index_.find(a), ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end() || a == b)
    throw input_error("majority record: bad candidate pair");
  return support_[ia->second * candidates_.size() + ib->second];
}

bool MajorityRecord::beats(const Candidate& a, const Candidate& b) const {
  return support(a, b) > support(b, a);
}

Agenda::Agenda(std::vector<Candidate> order) : order_(std::move(order)) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!pos_.emplace(order_[i], static_cast<int>(i) + 1).second)
      throw input_error("duplicate_candidate", "agenda repeats candidate: " + order_[i]);
  }
}

int Agenda::position(const Candidate& c) const {
  auto it = pos_.find(c);
  if (it == pos_.end()) throw input_error("unknown_candidate", "agenda: unknown candidate: " + c);
  return it->second;
}

const Candidate& Agenda::at(int position_1_based) const {
  if (position_1_based < 1 || position_1_based > size())
    throw input_error("agenda position out of range");
  return order_[position_1_based - 1];
}

bool Agenda::covers(const std::vector<Candidate>& universe) const {
  if (universe.size() != order_.size()) return false;
  for (const Candidate& c : universe) {
    if (!pos_.count(c)) return false;
  }
  return true;
}

Agenda Agenda::restricted(const std::set<Candidate>& keep) const {
  std::vector<Candidate> order;
  order.reserve(keep.size());
  for (const Candidate& c : order_) {
    if (keep.count(c)) order.push_back(c);
  }
  return Agenda(std::move(order));
}

}  // namespace agenda_control
