#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mwvote/errors.hpp"

namespace mwvote {

using CandidateId = int;
using Score = std::int64_t;

/// Committees are stored as 64-bit membership masks.
inline constexpr int kMaxCandidates = 64;

struct Candidate {
  CandidateId id = 0;
  std::string label;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Candidate list with ids 0..m-1 and unique labels.
class Roster {
 public:
  explicit Roster(std::vector<std::string> labels);

  /// Labels "a", "b", "c", ... (then "c26", "c27", ... past 'z').
  static std::shared_ptr<const Roster> alphabetic(int m);

  int size() const noexcept { return static_cast<int>(candidates_.size()); }
  std::span<const Candidate> candidates() const noexcept { return candidates_; }
  const Candidate& operator[](CandidateId id) const;
  const std::string& label(CandidateId id) const { return (*this)[id].label; }
  std::optional<CandidateId> find(std::string_view label) const;
  CandidateId id_of(std::string_view label) const;

  friend bool operator==(const Roster& a, const Roster& b) { return a.candidates_ == b.candidates_; }

 private:
  std::vector<Candidate> candidates_;
};

/// Whether `label` may appear in an election file.
bool is_valid_label(std::string_view label);

/// A strict, complete ranking of candidates 0..m-1, most preferred first.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  explicit PreferenceOrder(std::vector<CandidateId> ranking);

  int size() const noexcept { return static_cast<int>(ranking_.size()); }
  std::span<const CandidateId> ranking() const noexcept { return ranking_; }
  /// Candidate at 1-based `rank`.
  CandidateId at_rank(int rank) const;
  /// 1-based position of `c`.
  int position(CandidateId c) const;

  friend auto operator<=>(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.ranking_ <=> b.ranking_;
  }
  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<CandidateId> ranking_;
  std::vector<int> position_;
};

int position(const PreferenceOrder& vote, CandidateId c);

/// Non-owning view of one vote inside an Election.
class VoteView {
 public:
  VoteView(std::span<const CandidateId> ranking, std::span<const int> positions)
      : ranking_(ranking), positions_(positions) {}

  int size() const noexcept { return static_cast<int>(ranking_.size()); }
  std::span<const CandidateId> ranking() const noexcept { return ranking_; }
  CandidateId at_rank(int rank) const;
  int position(CandidateId c) const;
  CandidateId top() const { return ranking_.front(); }
  PreferenceOrder to_order() const;

 private:
  std::span<const CandidateId> ranking_;
  std::span<const int> positions_;
};

/// An immutable election: a shared roster plus an ordered sequence of votes,
/// stored as flat n-by-m rank and position tables.
class Election {
 public:
  Election(std::shared_ptr<const Roster> roster, std::span<const PreferenceOrder> votes);
  Election(std::vector<std::string> labels, std::span<const PreferenceOrder> votes);
  /// `flat_rankings` holds n consecutive rankings of length m.
  Election(std::shared_ptr<const Roster> roster, std::vector<CandidateId> flat_rankings);

  int num_candidates() const noexcept { return m_; }
  int num_voters() const noexcept { return n_; }
  const Roster& roster() const noexcept { return *roster_; }
  const std::shared_ptr<const Roster>& shared_roster() const noexcept { return roster_; }

  VoteView vote(int voter) const;
  int position(int voter, CandidateId c) const {
    return positions_[static_cast<std::size_t>(voter) * m_ + c];
  }
  CandidateId at_rank(int voter, int rank) const {
    return rankings_[static_cast<std::size_t>(voter) * m_ + rank - 1];
  }
  std::span<const CandidateId> flat_rankings() const noexcept { return rankings_; }

  friend bool operator==(const Election& a, const Election& b);

 private:
  void index_positions();

  std::shared_ptr<const Roster> roster_;
  int m_ = 0;
  int n_ = 0;
  std::vector<CandidateId> rankings_;
  std::vector<int> positions_;
};

/// 1-based position of `c` in the vote of `voter`.
int position(const Election& e, int voter, CandidateId c);

/// Votes of `e1` followed by votes of `e2`; rosters must be identical.
Election concat(const Election& e1, const Election& e2);

/// `t` consecutive copies of the vote sequence of `e`.
Election replicate(const Election& e, int t);

/// Distinct preference orders with multiplicities, sorted by ranking.
std::vector<std::pair<PreferenceOrder, int>> anonymize(const Election& e);

/// A set of candidates, kept as a membership mask. Ordering is lexicographic
/// on the sorted member lists.
class Committee {
 public:
  Committee() = default;
  explicit Committee(std::span<const CandidateId> members);
  Committee(std::initializer_list<CandidateId> members)
      : Committee(std::span<const CandidateId>(members.begin(), members.size())) {}

  static Committee from_mask(std::uint64_t mask) {
    Committee c;
    c.mask_ = mask;
    return c;
  }

  std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(CandidateId c) const noexcept {
    return c >= 0 && c < kMaxCandidates && ((mask_ >> c) & 1U) != 0;
  }
  bool is_subset_of(const Committee& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  Committee with(CandidateId c) const;
  std::vector<CandidateId> members() const;

  friend bool operator==(const Committee& a, const Committee& b) { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(const Committee& a, const Committee& b) noexcept;

 private:
  std::uint64_t mask_ = 0;
};

/// "{a,d}" using roster labels.
std::string format_committee(const Committee& w, const Roster& roster);

/// The tied-for-winning committees of a rule, canonically ordered, plus the
/// objective value they share when the rule has one.
class RuleOutcome {
 public:
  RuleOutcome() = default;
  explicit RuleOutcome(std::vector<Committee> committees,
                       std::optional<Score> value = std::nullopt);

  std::span<const Committee> committees() const noexcept { return committees_; }
  std::size_t size() const noexcept { return committees_.size(); }
  const std::optional<Score>& value() const noexcept { return value_; }
  bool contains(const Committee& w) const;
  bool is_unique(const Committee& w) const {
    return committees_.size() == 1 && committees_.front() == w;
  }
  /// True when some committee contains candidate `c`.
  bool any_contains(CandidateId c) const;

  friend bool operator==(const RuleOutcome&, const RuleOutcome&) = default;

 private:
  std::vector<Committee> committees_;
  std::optional<Score> value_;
};

/// Raised when parallel-universes exploration exceeds its branch budget.
/// Carries every committee reached before the budget ran out.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(std::size_t explored, std::vector<Committee> partial)
      : std::runtime_error("tie-breaking budget exhausted after " + std::to_string(explored) +
                           " branches"),
        explored_(explored),
        partial_(std::move(partial)) {}

  std::size_t explored() const noexcept { return explored_; }
  const std::vector<Committee>& partial() const noexcept { return partial_; }

 private:
  std::size_t explored_;
  std::vector<Committee> partial_;
};

}  // namespace mwvote
