#include <doctest.h>

#include <filesystem>
#include <random>

#include "fixtures.hpp"
#include "mwvote/axioms.hpp"
#include "mwvote/search.hpp"
#include "profiles.hpp"

using namespace mwvote;
using mwvote::testing::com;
using mwvote::testing::letters;
using mwvote::testing::profile;

namespace {

AxiomVerdict check(RuleId rule, Axiom axiom, const Election& e, int k, int t = 2) {
  RuleEvaluator eval(rule);
  CheckParams p;
  p.k = k;
  p.t_lo = p.t_hi = t;
  return check_axiom(axiom, eval, e, p);
}

AxiomVerdict violated_and_replays(RuleId rule, Axiom axiom, const Election& e, int k, int t = 2) {
  const AxiomVerdict v = check(rule, axiom, e, k, t);
  REQUIRE(v.violated());
  REQUIRE(v.witness);
  CHECK(replay_witness(*v.witness));
  return v;
}

}  // namespace

TEST_CASE("committee monotonicity") {
  const Election stv = profile("stv_committee_monotonicity");
  const AxiomVerdict v = violated_and_replays(RuleId::Stv, Axiom::CommitteeMonotonicity, stv, 1);
  CHECK(v.witness->outcomes[0].second.is_unique(com(stv, "c")));
  CHECK(v.witness->outcomes[1].second.is_unique(com(stv, "ad")));
  violated_and_replays(RuleId::L1Cc, Axiom::CommitteeMonotonicity, profile("cc_committee_monotonicity"), 1);
  violated_and_replays(RuleId::Bloc, Axiom::CommitteeMonotonicity, profile("bloc_committee_monotonicity"), 1);
  std::mt19937_64 rng(1);
  RuleEvaluator sntv(RuleId::Sntv);
  for (int trial = 0; trial < 200; ++trial) {
    const Election e = impartial_culture(rng, 4, static_cast<int>(uniform_int(rng, 1, 7)));
    CHECK(check_committee_monotonicity(sntv, e, 1, 3).holds());
  }
}

TEST_CASE("solid coalitions") {
  const Election nine = profile("solid_coalitions");
  const AxiomVerdict v = violated_and_replays(RuleId::L1Cc, Axiom::SolidCoalitions, nine, 3);
  CHECK(v.witness->candidate == nine.roster().id_of("d"));
  CHECK(check(RuleId::GreedyMonroe, Axiom::SolidCoalitions, nine, 3).holds());
  CHECK(check(RuleId::L1Cc, Axiom::SolidCoalitions, letters({"abcd", "bcda", "cdab"}), 1).holds());
}

TEST_CASE("consensus committee") {
  const Election e = profile("consensus_committee");
  REQUIRE(consensus_committee(e, 2) == com(e, "ab"));
  violated_and_replays(RuleId::KBorda, Axiom::ConsensusCommittee, e, 2);
  CHECK(check(RuleId::L1Monroe, Axiom::ConsensusCommittee, e, 2).holds());
  const Election none = letters({"abcd", "abcd", "abcd", "bacd"});
  CHECK_FALSE(consensus_committee(none, 2).has_value());
  CHECK(check(RuleId::KBorda, Axiom::ConsensusCommittee, none, 2).holds());
}

TEST_CASE("unanimity") {
  const Election same = letters({"cabd", "cabd", "cabd"});
  CHECK(check(RuleId::Sntv, Axiom::WeakUnanimity, same, 2).holds());
  violated_and_replays(RuleId::Sntv, Axiom::StrongUnanimity, same, 2);
  const Election shuffled = letters({"abcd", "bacd", "abdc", "badc", "abcd", "bacd"});
  CHECK(check(RuleId::Stv, Axiom::StrongUnanimity, shuffled, 2).holds());
  CHECK_FALSE(unanimous_top_set(letters({"abc", "cab"}), 1).has_value());
  CHECK(check(RuleId::Sntv, Axiom::StrongUnanimity, letters({"abc", "cab"}), 1).holds());
}

TEST_CASE("fixed majority") {
  const Election e = letters({"abcd", "bacd", "abdc", "cdab", "dcba"});
  REQUIRE(majority_top_set(e, 2) == com(e, "ab"));
  CHECK(check(RuleId::Bloc, Axiom::FixedMajority, e, 2).holds());
  const AxiomVerdict found = search_counterexample(RuleId::KBorda, Axiom::FixedMajority, SearchBounds{});
  REQUIRE(found.violated());
  CHECK(found.witness->k == 1);
  CHECK(replay_witness(*found.witness));
  CHECK_FALSE(majority_top_set(letters({"abc", "bca", "cab"}), 1).has_value());
}

TEST_CASE("monotonicity") {
  const Election nc = profile("noncrossing_monotonicity");
  violated_and_replays(RuleId::L1Cc, Axiom::NonCrossingMonotonicity, nc, 2);
  const Election eq2 = profile("monroe_candidate_monotonicity");
  const AxiomVerdict v = violated_and_replays(RuleId::LminMonroe, Axiom::CandidateMonotonicity, eq2, 2);
  CHECK(v.witness->shift == Shift{3, eq2.roster().id_of("a")});
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Election e = impartial_culture(rng, 4, static_cast<int>(uniform_int(rng, 1, 5)));
    const int k = static_cast<int>(uniform_int(rng, 1, 3));
    for (RuleId r : {RuleId::Sntv, RuleId::Bloc, RuleId::KBorda, RuleId::L1Cc})
      CHECK(check(r, Axiom::CandidateMonotonicity, e, k).holds());
  }
}

TEST_CASE("consistency and homogeneity") {
  RuleEvaluator monroe(RuleId::L1Monroe);
  const Election e1 = profile("monroe_consistency_1");
  const Election e2 = profile("monroe_consistency_2");
  const AxiomVerdict v = check_consistency(monroe, e1, e2, 2);
  REQUIRE(v.violated());
  CHECK(v.witness->split == e1.num_voters());
  CHECK(replay_witness(*v.witness));
  violated_and_replays(RuleId::L1Monroe, Axiom::Homogeneity, profile("monroe_homogeneity"), 2, 2);
  std::mt19937_64 rng(6);
  RuleEvaluator kborda(RuleId::KBorda);
  for (int trial = 0; trial < 100; ++trial) {
    const Election a = impartial_culture(rng, 4, static_cast<int>(uniform_int(rng, 1, 4)));
    const Election b = impartial_culture(rng, 4, static_cast<int>(uniform_int(rng, 1, 4)));
    CHECK(check_consistency(kborda, a, b, 2).holds());
  }
}

TEST_CASE("nonimposition") {
  const SearchBounds b{4, 4, 4, 3, SearchMode::Exhaustive, 1, 0};
  CHECK(check_nonimposition(RuleId::KBorda, 3, 2, b).holds());
  CHECK(check_nonimposition(RuleId::Sntv, 3, 2, b).holds());
  CHECK(check_nonimposition(RuleId::Bloc, 4, 2, b).holds());
  RuleEvaluator eval(RuleId::Sntv);
  CHECK_THROWS_AS(check_axiom(Axiom::Nonimposition, eval, letters({"abc"}), CheckParams{}), DomainError);
}

TEST_CASE("witness files round-trip and replay") {
  const auto dir = std::filesystem::temp_directory_path() / "mwvote_witness_test";
  std::filesystem::create_directories(dir);
  const Election nine = profile("solid_coalitions");
  const AxiomVerdict v = check(RuleId::L1Monroe, Axiom::SolidCoalitions, nine, 3);
  REQUIRE(v.violated());
  const auto path = dir / "w.elect";
  write_witness_file(path, *v.witness);
  const Witness back = read_witness_file(path);
  CHECK(back.rule == RuleId::L1Monroe);
  CHECK(back.axiom == Axiom::SolidCoalitions);
  CHECK(back.k == 3);
  CHECK(back.candidate == v.witness->candidate);
  CHECK(back.committee == v.witness->committee);
  CHECK(back.breach == v.witness->breach);
  CHECK(back.election.flat_rankings().size() == nine.flat_rankings().size());
  CHECK(replay_witness(back));
  CHECK(format_witness(back) == format_witness(*v.witness));

  RuleEvaluator monroe(RuleId::L1Monroe);
  const AxiomVerdict pair =
      check_consistency(monroe, profile("monroe_consistency_1"), profile("monroe_consistency_2"), 2);
  write_witness_file(dir / "pair.elect", *pair.witness);
  const Witness pair_back = read_witness_file(dir / "pair.elect");
  CHECK(pair_back.split == pair.witness->split);
  CHECK(replay_witness(pair_back));

  const AxiomVerdict shift = check(RuleId::L1Cc, Axiom::NonCrossingMonotonicity, profile("noncrossing_monotonicity"), 2);
  write_witness_file(dir / "shift.elect", *shift.witness);
  CHECK(read_witness_file(dir / "shift.elect").shift == shift.witness->shift);
  std::filesystem::remove_all(dir);
}

TEST_CASE("a tampered witness does not replay") {
  const AxiomVerdict v = check(RuleId::L1Cc, Axiom::SolidCoalitions, profile("solid_coalitions"), 3);
  Witness w = *v.witness;
  w.rule = RuleId::GreedyMonroe;
  CHECK_FALSE(replay_witness(w));
}
