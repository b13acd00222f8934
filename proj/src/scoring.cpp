#include "mwvote/scoring.hpp"

#include <algorithm>
#include <numeric>

#include "mwvote/subsets.hpp"

namespace mwvote {

ScoreVector::ScoreVector(std::vector<Score> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("score vector must be non-empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw DomainError("score vector entries must be nonnegative");
    if (i > 0 && values_[i] > values_[i - 1]) throw DomainError("score vector must be non-increasing");
  }
}

ScoreVector ScoreVector::plurality(int m) { return approval(m, 1); }

ScoreVector ScoreVector::approval(int m, int t) {
  if (m < 1) throw DomainError("score vector length must be positive");
  if (t < 0 || t > m) throw DomainError("approval threshold out of range");
  std::vector<Score> v(static_cast<std::size_t>(m), 0);
  std::fill_n(v.begin(), t, 1);
  return ScoreVector(std::move(v));
}

ScoreVector ScoreVector::borda(int m) {
  if (m < 1) throw DomainError("score vector length must be positive");
  std::vector<Score> v(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) v[static_cast<std::size_t>(i - 1)] = m - i;
  return ScoreVector(std::move(v));
}

ScoreVector ScoreVector::zeros(int m) {
  if (m < 1) throw DomainError("score vector length must be positive");
  return ScoreVector(std::vector<Score>(static_cast<std::size_t>(m), 0));
}

SatisfactionFunction SatisfactionFunction::borda(int m) { return {Kind::Borda, ScoreVector::borda(m)}; }

SatisfactionFunction SatisfactionFunction::approval(int m, int t) {
  return {Kind::Approval, ScoreVector::approval(m, t)};
}

SatisfactionFunction SatisfactionFunction::custom(std::vector<Score> table) {
  return {Kind::Custom, ScoreVector(std::move(table))};
}

std::vector<Score> SatisfactionFunction::distinct_values() const {
  std::vector<Score> out(table_.values().begin(), table_.values().end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CommitteeScoringFunction CommitteeScoringFunction::separable(std::string name, Gamma gamma) {
  CommitteeScoringFunction f;
  f.name_ = std::move(name);
  f.structure_ = CommitteeStructure::Separable;
  f.family_ = [gamma = std::move(gamma)](int m, int) { return gamma(m); };
  return f;
}

CommitteeScoringFunction CommitteeScoringFunction::weakly_separable(std::string name, Family family) {
  CommitteeScoringFunction f;
  f.name_ = std::move(name);
  f.structure_ = CommitteeStructure::WeaklySeparable;
  f.family_ = std::move(family);
  return f;
}

CommitteeScoringFunction CommitteeScoringFunction::representation_focused(std::string name, Gamma gamma) {
  CommitteeScoringFunction f;
  f.name_ = std::move(name);
  f.structure_ = CommitteeStructure::RepresentationFocused;
  f.family_ = [gamma = std::move(gamma)](int m, int) { return gamma(m); };
  return f;
}

CommitteeScoringFunction CommitteeScoringFunction::general(std::string name, Evaluator eval, Domain domain) {
  CommitteeScoringFunction f;
  f.name_ = std::move(name);
  f.structure_ = CommitteeStructure::General;
  f.eval_ = std::move(eval);
  f.domain_ = std::move(domain);
  return f;
}

bool CommitteeScoringFunction::defined_for(int m, int k) const {
  if (m < 1 || k < 1 || k > m) return false;
  if (structure_ == CommitteeStructure::General) return !domain_ || domain_(m, k);
  return true;
}

ScoreVector CommitteeScoringFunction::table(int m, int k) const {
  if (structure_ == CommitteeStructure::General)
    throw DomainError(name_ + " has no per-rank table");
  if (!defined_for(m, k)) throw DomainError(name_ + " is undefined for this (m, k)");
  ScoreVector t = family_(m, k);
  if (t.size() != m) throw DomainError(name_ + " produced a table of the wrong length");
  return t;
}

Score CommitteeScoringFunction::operator()(std::span<const int> positions, int m) const {
  const int k = static_cast<int>(positions.size());
  if (!defined_for(m, k)) throw DomainError(name_ + " is undefined for this (m, k)");
  for (int t = 0; t < k; ++t) {
    const int p = positions[static_cast<std::size_t>(t)];
    if (p < 1 || p > m || (t > 0 && p <= positions[static_cast<std::size_t>(t - 1)]))
      throw DomainError("position vector must be increasing within [1, m]");
  }
  switch (structure_) {
    case CommitteeStructure::General:
      return eval_(positions, m);
    case CommitteeStructure::RepresentationFocused:
      return family_(m, k)(positions.front());
    case CommitteeStructure::Separable:
    case CommitteeStructure::WeaklySeparable: {
      const ScoreVector g = family_(m, k);
      Score total = 0;
      for (int p : positions) total += g(p);
      return total;
    }
  }
  return 0;
}

CommitteeScoringFunction f_sntv() {
  return CommitteeScoringFunction::separable("sntv", [](int m) { return ScoreVector::plurality(m); });
}

CommitteeScoringFunction f_bloc() {
  return CommitteeScoringFunction::weakly_separable(
      "bloc", [](int m, int k) { return ScoreVector::approval(m, k); });
}

CommitteeScoringFunction f_kborda() {
  return CommitteeScoringFunction::separable("k-borda", [](int m) { return ScoreVector::borda(m); });
}

CommitteeScoringFunction f_cc() {
  return CommitteeScoringFunction::representation_focused("l1-cc",
                                                          [](int m) { return ScoreVector::borda(m); });
}

ScoredRanking::ScoredRanking(std::vector<Score> scores) : scores_(std::move(scores)) {
  if (scores_.empty()) throw DomainError("a scored ranking needs at least one candidate");
  std::vector<CandidateId> order(scores_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](CandidateId a, CandidateId b) {
    return scores_[static_cast<std::size_t>(a)] > scores_[static_cast<std::size_t>(b)];
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || scores_[static_cast<std::size_t>(order[i])] != scores_[static_cast<std::size_t>(order[i - 1])])
      classes_.emplace_back();
    classes_.back().push_back(order[i]);
  }
}

std::vector<Score> s_score(const Election& e, const ScoreVector& s) {
  const int m = e.num_candidates();
  if (s.size() != m) throw DomainError("score vector length does not match the number of candidates");
  std::vector<Score> scores(static_cast<std::size_t>(m), 0);
  const auto ranks = e.flat_rankings();
  for (std::size_t i = 0; i < ranks.size(); ++i)
    scores[static_cast<std::size_t>(ranks[i])] += s(static_cast<int>(i % static_cast<std::size_t>(m)) + 1);
  return scores;
}

std::vector<int> committee_positions(const VoteView& vote, const Committee& w) {
  std::vector<int> pos;
  pos.reserve(static_cast<std::size_t>(w.size()));
  for (CandidateId c : w.members()) pos.push_back(vote.position(c));
  std::sort(pos.begin(), pos.end());
  return pos;
}

std::vector<int> committee_positions(const PreferenceOrder& vote, const Committee& w) {
  std::vector<int> pos;
  pos.reserve(static_cast<std::size_t>(w.size()));
  for (CandidateId c : w.members()) pos.push_back(vote.position(c));
  std::sort(pos.begin(), pos.end());
  return pos;
}

Score committee_score(const Election& e, const Committee& w, const CommitteeScoringFunction& f) {
  const int m = e.num_candidates();
  const int k = w.size();
  if (!f.defined_for(m, k)) throw DomainError(f.name() + " is undefined for this (m, k)");
  for (CandidateId c : w.members())
    if (c >= m) throw DomainError("committee member is not a candidate of this election");
  Score total = 0;
  std::vector<int> pos(static_cast<std::size_t>(k));
  const auto members = w.members();
  for (int v = 0; v < e.num_voters(); ++v) {
    for (int t = 0; t < k; ++t) pos[static_cast<std::size_t>(t)] = e.position(v, members[static_cast<std::size_t>(t)]);
    std::sort(pos.begin(), pos.end());
    total += f(pos, m);
  }
  return total;
}

RuleOutcome best_k_committees(const ScoredRanking& ranking, int k) {
  const int m = ranking.size();
  if (k < 1 || k > m) throw DomainError("committee size k out of range");
  std::uint64_t forced = 0;
  std::vector<CandidateId> boundary;
  int taken = 0;
  Score value = 0;
  for (const auto& cls : ranking.tie_classes()) {
    const int sz = static_cast<int>(cls.size());
    const Score s = ranking.scores()[static_cast<std::size_t>(cls.front())];
    if (taken + sz <= k) {
      for (CandidateId c : cls) forced |= std::uint64_t{1} << c;
      taken += sz;
      value += s * sz;
      if (taken == k) break;
    } else {
      boundary = cls;
      value += s * (k - taken);
      break;
    }
  }
  std::vector<Committee> out;
  if (boundary.empty()) {
    out.push_back(Committee::from_mask(forced));
  } else {
    for_each_subset(static_cast<int>(boundary.size()), k - taken, [&](std::span<const int> idx) {
      std::uint64_t mask = forced;
      for (int i : idx) mask |= std::uint64_t{1} << boundary[static_cast<std::size_t>(i)];
      out.push_back(Committee::from_mask(mask));
    });
  }
  return RuleOutcome(std::move(out), value);
}

RuleOutcome evaluate_separable_as_best_k(const Election& e, const ScoreVector& s, int k) {
  return best_k_committees(ScoredRanking(s_score(e, s)), k);
}

}  // namespace mwvote
