#include <doctest.h>

#include "fixtures.hpp"
#include "mwvote/exact_rules.hpp"
#include "profiles.hpp"

using namespace mwvote;
using mwvote::testing::com;
using mwvote::testing::letters;
using mwvote::testing::profile;

TEST_CASE("droop quota") {
  CHECK(droop_quota(24, 1) == 13);
  CHECK(droop_quota(24, 2) == 9);
  CHECK(droop_quota(5, 2) == 2);
}

TEST_CASE("stv on the 24-voter profile") {
  const Election e = profile("stv_committee_monotonicity");
  CHECK(elect_stv(e, 1).is_unique(com(e, "c")));
  CHECK(elect_stv(e, 2).is_unique(com(e, "ad")));
  CHECK_FALSE(elect_stv(e, 2).value().has_value());
}

TEST_CASE("lexicographic stv agrees on the 24-voter profile") {
  const Election e = profile("stv_committee_monotonicity");
  StvConfig cfg;
  cfg.tie_mode = TieMode::Lexicographic;
  CHECK(elect_stv(e, 2, cfg).is_unique(com(e, "ad")));
  CHECK(elect_stv(e, 1, cfg).is_unique(com(e, "c")));
}

TEST_CASE("stv with a unanimous favourite") {
  const Election e = letters({"abc", "acb", "abc"});
  CHECK(elect_stv(e, 1).is_unique(com(e, "a")));
}

TEST_CASE("stv elects a shared top set ranked in different orders") {
  const Election e = letters({"abcd", "bacd", "abdc", "badc", "abcd", "bacd"});
  CHECK(elect_stv(e, 2).is_unique(com(e, "ab")));
}

TEST_CASE("stv explores every tied elimination") {
  const Election e = letters({"abc", "bca", "cab"});
  CHECK(elect_stv(e, 1).size() == 3);
  StvConfig cfg;
  cfg.tie_mode = TieMode::Lexicographic;
  CHECK(elect_stv(e, 1, cfg).size() == 1);
}

TEST_CASE("stv reports an exhausted budget with partial results") {
  const Election e = letters({"abcde", "bcdea", "cdeab", "deabc", "eabcd"});
  StvConfig cfg;
  cfg.universe_cap = 1;
  CHECK_THROWS_AS(elect_stv(e, 2, cfg), BudgetExhausted);
}
