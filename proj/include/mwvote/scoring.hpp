#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mwvote/election.hpp"

namespace mwvote {

/// Positional score table (s_1 >= s_2 >= ... >= s_m >= 0), indexed by 1-based rank.
///
/// All shipped vectors are integral. A rational table can be scaled to integers
/// by its common denominator without changing any outcome, so only integer
/// entries are stored.
class ScoreVector {
 public:
  ScoreVector() = default;
  explicit ScoreVector(std::vector<Score> values);

  static ScoreVector plurality(int m);
  static ScoreVector approval(int m, int t);
  static ScoreVector borda(int m);
  static ScoreVector zeros(int m);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const Score> values() const noexcept { return values_; }
  Score operator()(int rank) const { return values_[static_cast<std::size_t>(rank - 1)]; }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  std::vector<Score> values_;
};

/// Non-increasing map from a representative's rank to a voter's satisfaction.
class SatisfactionFunction {
 public:
  enum class Kind { Borda, Approval, Custom };

  static SatisfactionFunction borda(int m);
  static SatisfactionFunction approval(int m, int t);
  static SatisfactionFunction custom(std::vector<Score> table);

  Kind kind() const noexcept { return kind_; }
  int size() const noexcept { return table_.size(); }
  Score operator()(int rank) const { return table_(rank); }
  const ScoreVector& table() const noexcept { return table_; }
  /// Distinct values of the table, largest first.
  std::vector<Score> distinct_values() const;

 private:
  SatisfactionFunction(Kind kind, ScoreVector table) : kind_(kind), table_(std::move(table)) {}

  Kind kind_ = Kind::Custom;
  ScoreVector table_;
};

enum class CommitteeStructure { Separable, WeaklySeparable, RepresentationFocused, General };

/// f maps an increasing position vector (i_1 < ... < i_k) to a score. Only
/// increasing vectors are in the domain.
class CommitteeScoringFunction {
 public:
  using Gamma = std::function<ScoreVector(int m)>;
  using Family = std::function<ScoreVector(int m, int k)>;
  using Evaluator = std::function<Score(std::span<const int> positions, int m)>;
  using Domain = std::function<bool(int m, int k)>;

  /// f(I) = gamma(i_1) + ... + gamma(i_k), gamma independent of k.
  static CommitteeScoringFunction separable(std::string name, Gamma gamma);
  /// f(I) = alpha_k^m(i_1) + ... + alpha_k^m(i_k).
  static CommitteeScoringFunction weakly_separable(std::string name, Family family);
  /// f(I) = gamma(i_1).
  static CommitteeScoringFunction representation_focused(std::string name, Gamma gamma);
  static CommitteeScoringFunction general(std::string name, Evaluator eval, Domain domain);

  const std::string& name() const noexcept { return name_; }
  CommitteeStructure structure() const noexcept { return structure_; }
  bool defined_for(int m, int k) const;
  /// Score of one voter's sorted committee positions. Throws DomainError when
  /// (m, k) is outside the domain or `positions` is not increasing in [1, m].
  Score operator()(std::span<const int> positions, int m) const;
  /// Per-rank table for structured kinds (gamma or alpha_k^m). Throws for General.
  ScoreVector table(int m, int k) const;

 private:
  CommitteeScoringFunction() = default;

  std::string name_;
  CommitteeStructure structure_ = CommitteeStructure::General;
  Family family_;
  Evaluator eval_;
  Domain domain_;
};

// Scoring functions of the four committee scoring rules among the shipped rules.
CommitteeScoringFunction f_sntv();
CommitteeScoringFunction f_bloc();
CommitteeScoringFunction f_kborda();
CommitteeScoringFunction f_cc();

/// Candidates grouped into classes of equal score, best class first.
class ScoredRanking {
 public:
  explicit ScoredRanking(std::vector<Score> scores);

  int size() const noexcept { return static_cast<int>(scores_.size()); }
  std::span<const Score> scores() const noexcept { return scores_; }
  const std::vector<std::vector<CandidateId>>& tie_classes() const noexcept { return classes_; }

 private:
  std::vector<Score> scores_;
  std::vector<std::vector<CandidateId>> classes_;
};

/// sc_s(c) = sum over votes of s at the position of c.
std::vector<Score> s_score(const Election& e, const ScoreVector& s);

/// Sorted positions of the members of `w` in `vote`.
std::vector<int> committee_positions(const VoteView& vote, const Committee& w);
std::vector<int> committee_positions(const PreferenceOrder& vote, const Committee& w);

/// Sum over votes of f(committee_positions(v, w)).
Score committee_score(const Election& e, const Committee& w, const CommitteeScoringFunction& f);

/// All k-sets W with min score inside W >= max score outside W. The shared
/// value is the total score of W.
RuleOutcome best_k_committees(const ScoredRanking& ranking, int k);

/// Best-k evaluation of the separable rule whose gamma is `s`.
RuleOutcome evaluate_separable_as_best_k(const Election& e, const ScoreVector& s, int k);

}  // namespace mwvote
