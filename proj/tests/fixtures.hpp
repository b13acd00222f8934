#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mwvote/election.hpp"

namespace mwvote::testing {

/// Election over single-letter candidates; each vote is a string such as "acbd".
/// Candidates are the letters of the first vote in alphabetical order.
inline Election letters(std::vector<std::string> votes) {
  std::string alphabet = votes.at(0);
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<std::string> labels;
  for (char ch : alphabet) labels.emplace_back(1, ch);
  auto roster = std::make_shared<const Roster>(labels);
  std::vector<CandidateId> flat;
  for (const auto& v : votes)
    for (char ch : v) flat.push_back(roster->id_of(std::string(1, ch)));
  return Election(roster, std::move(flat));
}

/// Committee by letters, e.g. "ab" -> {a,b}, relative to the roster of `e`.
inline Committee com(const Election& e, const std::string& members) {
  std::vector<CandidateId> ids;
  for (char ch : members) ids.push_back(e.roster().id_of(std::string(1, ch)));
  return Committee(ids);
}

inline RuleOutcome outcome(const Election& e, std::vector<std::string> committees) {
  std::vector<Committee> cs;
  for (const auto& s : committees) cs.push_back(com(e, s));
  return RuleOutcome(std::move(cs));
}

inline std::vector<Committee> committees_of(const RuleOutcome& r) {
  return {r.committees().begin(), r.committees().end()};
}

}  // namespace mwvote::testing
