#include "doctest.h"

#include <set>

#include "agenda_control/core.hpp"
#include "agenda_control/random_gen.hpp"
#include "test_util.hpp"

using namespace agenda_control;
using test_util::example1;
using test_util::ids;
using test_util::make_election;

TEST_CASE("pairwise support counts votes ranking a before b") {
  const Election e = example1();
  // a before b in votes 2 and 3 only.
  CHECK(e.pairwise_support("a", "b") == 2);
  CHECK(e.beats("a", "b"));

  const Election single = make_election("x y", {"x y"});
  CHECK(single.pairwise_support("x", "y") == 1);

  CHECK_THROWS_AS(e.pairwise_support("a", "a"), input_error);
  CHECK_THROWS_AS(e.pairwise_support("a", "zz"), input_error);
}

TEST_CASE("pairwise support matches a direct per-vote recount") {
  Rng rng(20240917);
  for (int trial = 0; trial < 20; ++trial) {
    const Election e = random_election(rng, 5, 5);
    for (const Candidate& a : e.universe()) {
      for (const Candidate& b : e.universe()) {
        if (a == b) continue;
        int direct = 0;
        for (const Vote& v : e.votes()) {
          for (const Candidate& c : v.order) {
            if (c == a) {
              direct += v.multiplicity;
              break;
            }
            if (c == b) break;
          }
        }
        CHECK(e.pairwise_support(a, b) == direct);
        CHECK(e.pairwise_support(a, b) + e.pairwise_support(b, a) == e.num_votes());
      }
    }
  }
}

TEST_CASE("majority domination") {
  const Election e1 = example1();
  CHECK(e1.majority_dominates("d", {}));  // empty set rule

  const Election e2 = test_util::condorcet_split();
  CHECK(e2.majority_dominates("b", {"c", "d"}));  // 2 of 3 votes

  // a above all of b, c, d only in the third vote.
  CHECK_FALSE(e1.majority_dominates("a", {"b", "c", "d"}));

  CHECK_THROWS_AS(e1.majority_dominates("a", {"a", "b"}), input_error);
}

TEST_CASE("condorcet winner") {
  CHECK(test_util::condorcet_split().condorcet_winner() == Candidate("a"));
  CHECK(make_election("x", {"x"}).condorcet_winner() == Candidate("x"));
  // example1's majority graph has the cycle a -> b -> c -> a.
  CHECK_FALSE(example1().condorcet_winner().has_value());
}

TEST_CASE("restriction keeps relative order and multiplicities") {
  const Election e = example1();
  const Election r = e.restricted({"a", "d"});
  REQUIRE(r.universe() == ids("a d"));
  // (d,a) once and (a,d) twice, canonicalized.
  REQUIRE(r.votes().size() == 2);
  CHECK(r.votes()[0].order == ids("a d"));
  CHECK(r.votes()[0].multiplicity == 2);
  CHECK(r.votes()[1].order == ids("d a"));
  CHECK(r.votes()[1].multiplicity == 1);

  const Election full = e.restricted({"a", "b", "c", "d"});
  CHECK(full.votes() == e.votes());

  const Agenda agenda = test_util::make_agenda("a q b p");
  CHECK(agenda.restricted({"a", "q", "p"}).order() == ids("a q p"));

  CHECK_THROWS_AS(e.restricted({"a", "zz"}), input_error);
}

TEST_CASE("restriction preserves pairwise support inside the kept set") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Election e = random_election(rng, 5, 4);
    const std::set<Candidate> keep = {"a", "c", "d"};
    const Election r = e.restricted(keep);
    for (const Candidate& x : keep) {
      for (const Candidate& y : keep) {
        if (x != y) CHECK(r.pairwise_support(x, y) == e.pairwise_support(x, y));
      }
    }
  }
}

TEST_CASE("domination implies beating every member") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Election e = random_election(rng, 4, 5);
    const std::set<Candidate> s = {"b", "c"};
    if (e.majority_dominates("a", s)) {
      for (const Candidate& x : s) CHECK(e.beats("a", x));
    }
  }
}

TEST_CASE("zero-vote elections tie every pair") {
  const Election e(ids("a b"), {});
  CHECK(e.num_votes() == 0);
  CHECK(e.ties("a", "b"));
  CHECK_FALSE(e.condorcet_winner().has_value());
  CHECK_FALSE(e.majority_dominates("a", {"b"}));
}

TEST_CASE("vote validation") {
  CHECK_THROWS_AS(make_election("a b", {"a b", "a a"}), input_error);
  CHECK_THROWS_AS(make_election("a b", {"a"}), input_error);
  CHECK_THROWS_AS(make_election("a b", {"a c"}), input_error);
  CHECK_THROWS_AS(Election(ids("a a"), {}), input_error);
  CHECK(valid_candidate_id("x_1"));
  CHECK_FALSE(valid_candidate_id(""));
  CHECK_FALSE(valid_candidate_id("a#b"));
}

TEST_CASE("majority record mirrors election supports") {
  const Election e = example1();
  const MajorityRecord rec = e.majority_record();
  CHECK(rec.n() == 3);
  CHECK(rec.support("a", "b") == 2);
  CHECK(rec.beats("d", "c"));
  CHECK_FALSE(rec.beats("c", "d"));
}
