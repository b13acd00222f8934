#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mwvote/election.hpp"
#include "mwvote/rules.hpp"

namespace mwvote {

enum class Axiom {
  Nonimposition,
  Consistency,
  Homogeneity,
  CandidateMonotonicity,
  NonCrossingMonotonicity,
  CommitteeMonotonicity,
  SolidCoalitions,
  ConsensusCommittee,
  WeakUnanimity,
  StrongUnanimity,
  FixedMajority,
};

std::span<const Axiom> all_axioms();
std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

/// Runs one rule, optionally memoizing outcomes by anonymous profile. Memoization
/// is only used under parallel-universes tie-breaking, where every shipped rule
/// ignores voter order.
class RuleEvaluator {
 public:
  explicit RuleEvaluator(RuleId rule, RuleOptions options = {}, bool memoize = false);

  RuleId rule() const noexcept { return rule_; }
  const RuleOptions& options() const noexcept { return options_; }
  bool applicable(const Election& e, int k) const {
    return rule_applicable(rule_, e.num_candidates(), e.num_voters(), k);
  }
  RuleOutcome operator()(const Election& e, int k);
  void clear() { memo_.clear(); }

 private:
  RuleId rule_;
  RuleOptions options_;
  bool memoize_;
  std::unordered_map<std::string, RuleOutcome> memo_;
};

/// Moving `candidate` one position forward in the vote of `voter` (0-based).
struct Shift {
  int voter = 0;
  CandidateId candidate = 0;

  friend bool operator==(const Shift&, const Shift&) = default;
};

Election shift_forward(const Election& e, const Shift& shift);

/// Everything needed to replay a violation through the public rule API.
struct Witness {
  RuleId rule = RuleId::Sntv;
  Axiom axiom = Axiom::Nonimposition;
  TieMode tie_mode = TieMode::ParallelUniverses;
  int k = 0;
  /// E, or E1 followed by E2 for consistency.
  Election election;
  /// Consistency: number of leading votes that form E1.
  int split = 0;
  /// Homogeneity: replication factor.
  int t = 0;
  std::optional<Shift> shift;
  /// The committee or candidate the breached condition talks about.
  std::optional<Committee> committee;
  std::optional<CandidateId> candidate;
  /// Outcomes observed, labelled like "R(E,k)".
  std::vector<std::pair<std::string, RuleOutcome>> outcomes;
  std::string breach;
};

enum class VerdictStatus { Holds, Violated, Inconclusive };
std::string_view status_name(VerdictStatus status);

struct AxiomVerdict {
  VerdictStatus status = VerdictStatus::Holds;
  std::optional<Witness> witness;
  std::string note;
  /// Rule instances examined (searches) or premises tested (checks).
  std::size_t instances = 0;

  bool holds() const { return status == VerdictStatus::Holds; }
  bool violated() const { return status == VerdictStatus::Violated; }
};

// Instance checks. Each returns Holds when the premise is false or the rule
// is not applicable (Monroe-type rules with k > n), Violated with a witness,
// or Inconclusive when the rule ran out of tie-breaking budget.

/// Both containment conditions between R(E,k) and R(E,k+1) for k in [k_lo, k_hi].
AxiomVerdict check_committee_monotonicity(RuleEvaluator& rule, const Election& e, int k_lo, int k_hi);
AxiomVerdict check_solid_coalitions(RuleEvaluator& rule, const Election& e, int k);
AxiomVerdict check_consensus_committee(RuleEvaluator& rule, const Election& e, int k);
AxiomVerdict check_unanimity(RuleEvaluator& rule, const Election& e, int k, bool strong);
AxiomVerdict check_fixed_majority(RuleEvaluator& rule, const Election& e, int k);
AxiomVerdict check_candidate_monotonicity(RuleEvaluator& rule, const Election& e, int k);
AxiomVerdict check_noncrossing_monotonicity(RuleEvaluator& rule, const Election& e, int k);
AxiomVerdict check_consistency(RuleEvaluator& rule, const Election& e1, const Election& e2, int k);
AxiomVerdict check_homogeneity(RuleEvaluator& rule, const Election& e, int k, int t_lo, int t_hi);

/// The consensus committee of `e` for size k, if one exists.
std::optional<Committee> consensus_committee(const Election& e, int k);
/// A k-set ranked on top by a strict majority, if one exists.
std::optional<Committee> majority_top_set(const Election& e, int k);
/// The top-k set shared by every voter, if one exists.
std::optional<Committee> unanimous_top_set(const Election& e, int k);

struct CheckParams {
  int k = 1;
  /// Committee monotonicity: last k of the range (defaults to k).
  std::optional<int> k_hi;
  const Election* second = nullptr;
  int t_lo = 2;
  int t_hi = 2;
};

/// Dispatches to the instance check for `axiom`. Nonimposition is not an
/// instance property and is rejected here.
AxiomVerdict check_axiom(Axiom axiom, RuleEvaluator& rule, const Election& e, const CheckParams& params);

/// Re-runs the breached check on the witness data and compares outcomes.
bool replay_witness(const Witness& w);

/// Election file with the breach record in leading "# key: value" lines.
std::string format_witness(const Witness& w);
void write_witness_file(const std::filesystem::path& path, const Witness& w);
Witness read_witness_file(const std::filesystem::path& path);
std::string format_outcome(const RuleOutcome& outcome, const Roster& roster);

}  // namespace mwvote
