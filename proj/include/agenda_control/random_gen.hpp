#pragma once

// Deterministic random generation of elections, graphs, and control
// instances. All sampling goes through Rng::below (rejection sampling on
// mt19937_64), so identical seeds give identical bytes on every platform.

#include <cstdint>
#include <random>

#include "agenda_control/control.hpp"
#include "agenda_control/graphs.hpp"

namespace agenda_control {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi);

  bool coin() { return below(2) == 1; }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// m candidates named "a", "b", ... with n uniformly random linear orders.
Election random_election(Rng& rng, int num_candidates, int num_votes);

std::vector<Candidate> default_candidate_names(int m);

Vote random_vote(Rng& rng, const std::vector<Candidate>& universe);

// Uniformly random orientation choice per vertex pair: arc either way or
// no arc.
OrientedGraph random_oriented_graph(Rng& rng, int num_vertices);

Graph random_graph(Rng& rng, int num_vertices, int percent_edge = 50);

BipartiteGraph random_bipartite_graph(Rng& rng, int num_red, int num_blue, int percent_edge = 50);

struct RandomInstanceOptions {
  ControlProblem problem = ControlProblem::CCDC;
  ProcedureSpec procedure = ProcedureSpec::amendment_abs(1);
  int num_candidates = 4;       // registered
  int num_unregistered = 0;     // candidates in D (AC problems)
  int num_votes = 5;            // registered votes
  int num_unregistered_votes = 0;  // votes in W (AV problems)
  int budget = 1;
  // Forces the distinguished candidate's agenda position (1-based) when
  // positive; <= 0 places it uniformly at random.
  int distinguished_position = 0;
};

ControlInstance random_control_instance(Rng& rng, const RandomInstanceOptions& opt);

}  // namespace agenda_control
