#include "mwvote/election.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace mwvote {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char ch : label) {
    if (ch == ',' || ch == '>' || ch == '#' || ch == ' ' || ch == '\t' || ch == '\n' ||
        ch == '\r' || ch == '\v' || ch == '\f')
      return false;
  }
  return true;
}

Roster::Roster(std::vector<std::string> labels) {
  if (labels.empty()) throw DomainError("an election needs at least one candidate");
  if (labels.size() > static_cast<std::size_t>(kMaxCandidates))
    throw DomainError("at most " + std::to_string(kMaxCandidates) + " candidates are supported");
  std::unordered_set<std::string_view> seen;
  candidates_.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!is_valid_label(labels[i])) throw DomainError("invalid candidate label '" + labels[i] + "'");
    candidates_.push_back({static_cast<CandidateId>(i), std::move(labels[i])});
  }
  for (const auto& c : candidates_) {
    if (!seen.insert(c.label).second) throw DomainError("duplicate candidate label '" + c.label + "'");
  }
}

std::shared_ptr<const Roster> Roster::alphabetic(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    if (i < 26)
      labels.emplace_back(1, static_cast<char>('a' + i));
    else
      labels.push_back("c" + std::to_string(i));
  }
  return std::make_shared<const Roster>(std::move(labels));
}

const Candidate& Roster::operator[](CandidateId id) const {
  if (id < 0 || id >= size()) throw DomainError("unknown candidate id " + std::to_string(id));
  return candidates_[static_cast<std::size_t>(id)];
}

std::optional<CandidateId> Roster::find(std::string_view label) const {
  for (const auto& c : candidates_)
    if (c.label == label) return c.id;
  return std::nullopt;
}

CandidateId Roster::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw DomainError("unknown candidate label '" + std::string(label) + "'");
}

namespace {

// Fills `positions` (size m) from `ranking`; returns false unless `ranking`
// is a permutation of 0..m-1.
bool invert_permutation(std::span<const CandidateId> ranking, std::span<int> positions) {
  const int m = static_cast<int>(ranking.size());
  std::fill(positions.begin(), positions.end(), 0);
  for (int r = 0; r < m; ++r) {
    const CandidateId c = ranking[static_cast<std::size_t>(r)];
    if (c < 0 || c >= m || positions[static_cast<std::size_t>(c)] != 0) return false;
    positions[static_cast<std::size_t>(c)] = r + 1;
  }
  return true;
}

}  // namespace

PreferenceOrder::PreferenceOrder(std::vector<CandidateId> ranking)
    : ranking_(std::move(ranking)), position_(ranking_.size()) {
  if (ranking_.empty()) throw DomainError("a preference order must rank at least one candidate");
  if (!invert_permutation(ranking_, position_))
    throw DomainError("preference order is not a permutation of the candidates");
}

CandidateId PreferenceOrder::at_rank(int rank) const {
  if (rank < 1 || rank > size()) throw DomainError("rank out of range");
  return ranking_[static_cast<std::size_t>(rank - 1)];
}

int PreferenceOrder::position(CandidateId c) const {
  if (c < 0 || c >= size()) throw DomainError("unknown candidate id " + std::to_string(c));
  return position_[static_cast<std::size_t>(c)];
}

int position(const PreferenceOrder& vote, CandidateId c) { return vote.position(c); }

CandidateId VoteView::at_rank(int rank) const {
  if (rank < 1 || rank > size()) throw DomainError("rank out of range");
  return ranking_[static_cast<std::size_t>(rank - 1)];
}

int VoteView::position(CandidateId c) const {
  if (c < 0 || c >= size()) throw DomainError("unknown candidate id " + std::to_string(c));
  return positions_[static_cast<std::size_t>(c)];
}

PreferenceOrder VoteView::to_order() const {
  return PreferenceOrder(std::vector<CandidateId>(ranking_.begin(), ranking_.end()));
}

Election::Election(std::shared_ptr<const Roster> roster, std::span<const PreferenceOrder> votes)
    : roster_(std::move(roster)) {
  if (!roster_) throw DomainError("missing candidate roster");
  m_ = roster_->size();
  n_ = static_cast<int>(votes.size());
  if (n_ < 1) throw DomainError("an election needs at least one vote");
  rankings_.reserve(static_cast<std::size_t>(n_) * m_);
  for (const auto& v : votes) {
    if (v.size() != m_) throw DomainError("vote does not rank exactly the candidate roster");
    rankings_.insert(rankings_.end(), v.ranking().begin(), v.ranking().end());
  }
  index_positions();
}

Election::Election(std::vector<std::string> labels, std::span<const PreferenceOrder> votes)
    : Election(std::make_shared<const Roster>(std::move(labels)), votes) {}

Election::Election(std::shared_ptr<const Roster> roster, std::vector<CandidateId> flat_rankings)
    : roster_(std::move(roster)), rankings_(std::move(flat_rankings)) {
  if (!roster_) throw DomainError("missing candidate roster");
  m_ = roster_->size();
  if (rankings_.empty() || rankings_.size() % static_cast<std::size_t>(m_) != 0)
    throw DomainError("flat ranking table must hold n >= 1 rankings of length m");
  n_ = static_cast<int>(rankings_.size() / static_cast<std::size_t>(m_));
  index_positions();
}

void Election::index_positions() {
  positions_.assign(rankings_.size(), 0);
  const auto m = static_cast<std::size_t>(m_);
  for (std::size_t v = 0; v < static_cast<std::size_t>(n_); ++v) {
    std::span<const CandidateId> r(rankings_.data() + v * m, m);
    std::span<int> p(positions_.data() + v * m, m);
    if (!invert_permutation(r, p))
      throw DomainError("vote " + std::to_string(v + 1) + " is not a permutation of the candidates");
  }
}

VoteView Election::vote(int voter) const {
  if (voter < 0 || voter >= n_) throw DomainError("voter index out of range");
  const auto m = static_cast<std::size_t>(m_);
  const auto off = static_cast<std::size_t>(voter) * m;
  return VoteView(std::span<const CandidateId>(rankings_.data() + off, m),
                  std::span<const int>(positions_.data() + off, m));
}

bool operator==(const Election& a, const Election& b) {
  return (a.roster_ == b.roster_ || *a.roster_ == *b.roster_) && a.rankings_ == b.rankings_;
}

int position(const Election& e, int voter, CandidateId c) { return e.vote(voter).position(c); }

Election concat(const Election& e1, const Election& e2) {
  if (e1.shared_roster() != e2.shared_roster() && !(e1.roster() == e2.roster()))
    throw DomainError("cannot concatenate elections over different candidate rosters");
  std::vector<CandidateId> flat(e1.flat_rankings().begin(), e1.flat_rankings().end());
  flat.insert(flat.end(), e2.flat_rankings().begin(), e2.flat_rankings().end());
  return Election(e1.shared_roster(), std::move(flat));
}

Election replicate(const Election& e, int t) {
  if (t < 1) throw DomainError("replication factor must be positive");
  std::vector<CandidateId> flat;
  flat.reserve(e.flat_rankings().size() * static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) flat.insert(flat.end(), e.flat_rankings().begin(), e.flat_rankings().end());
  return Election(e.shared_roster(), std::move(flat));
}

std::vector<std::pair<PreferenceOrder, int>> anonymize(const Election& e) {
  std::map<PreferenceOrder, int> counts;
  for (int v = 0; v < e.num_voters(); ++v) ++counts[e.vote(v).to_order()];
  return {counts.begin(), counts.end()};
}

Committee::Committee(std::span<const CandidateId> members) {
  for (CandidateId c : members) {
    if (c < 0 || c >= kMaxCandidates) throw DomainError("committee member id out of range");
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (mask_ & bit) throw DomainError("committee members must be distinct");
    mask_ |= bit;
  }
}

int Committee::size() const noexcept { return std::popcount(mask_); }

Committee Committee::with(CandidateId c) const {
  if (c < 0 || c >= kMaxCandidates) throw DomainError("committee member id out of range");
  return from_mask(mask_ | (std::uint64_t{1} << c));
}

std::vector<CandidateId> Committee::members() const {
  std::vector<CandidateId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::strong_ordering operator<=>(const Committee& a, const Committee& b) noexcept {
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // The sorted member lists agree below the lowest differing id p. The list
  // holding p is smaller unless the other list ends right there.
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  const int p = std::countr_zero(diff);
  const std::uint64_t above = p == 63 ? 0 : ~((std::uint64_t{2} << p) - 1);
  const bool a_has_p = ((a.mask_ >> p) & 1U) != 0;
  const std::uint64_t other = a_has_p ? b.mask_ : a.mask_;
  const bool other_continues = (other & above) != 0;
  if (a_has_p) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
  return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string format_committee(const Committee& w, const Roster& roster) {
  std::string out = "{";
  bool first = true;
  for (CandidateId c : w.members()) {
    if (!first) out += ',';
    out += roster.label(c);
    first = false;
  }
  out += '}';
  return out;
}

RuleOutcome::RuleOutcome(std::vector<Committee> committees, std::optional<Score> value)
    : committees_(std::move(committees)), value_(value) {
  if (committees_.empty()) throw DomainError("a rule outcome needs at least one committee");
  std::sort(committees_.begin(), committees_.end());
  committees_.erase(std::unique(committees_.begin(), committees_.end()), committees_.end());
  const int k = committees_.front().size();
  for (const auto& w : committees_)
    if (w.size() != k) throw DomainError("all committees of an outcome must have the same size");
}

bool RuleOutcome::contains(const Committee& w) const {
  return std::binary_search(committees_.begin(), committees_.end(), w);
}

bool RuleOutcome::any_contains(CandidateId c) const {
  return std::any_of(committees_.begin(), committees_.end(),
                     [c](const Committee& w) { return w.contains(c); });
}

}  // namespace mwvote
