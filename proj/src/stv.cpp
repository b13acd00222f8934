#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <string>
#include <unordered_set>

#include "mwvote/exact_rules.hpp"

namespace mwvote {
namespace {

// Residual ballots: each string lists the still-running candidates (as chars)
// in preference order.
using Ballots = std::map<std::string, int>;

struct CountState {
  std::uint64_t remaining = 0;
  std::uint64_t elected = 0;
  Ballots ballots;

  std::string key() const {
    std::string out(reinterpret_cast<const char*>(&remaining), sizeof remaining);
    out.append(reinterpret_cast<const char*>(&elected), sizeof elected);
    for (const auto& [ballot, count] : ballots) {
      out += ballot;
      out += '|';
      out += std::to_string(count);
      out += ';';
    }
    return out;
  }
};

Ballots erase_candidate(const Ballots& ballots, CandidateId c) {
  Ballots out;
  const char ch = static_cast<char>(c);
  for (const auto& [ballot, count] : ballots) {
    if (count == 0) continue;
    std::string rest = ballot;
    rest.erase(std::remove(rest.begin(), rest.end(), ch), rest.end());
    if (!rest.empty()) out[rest] += count;
  }
  return out;
}

std::vector<int> plurality(const Ballots& ballots, int m) {
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (const auto& [ballot, count] : ballots) out[static_cast<std::size_t>(ballot.front())] += count;
  return out;
}

std::vector<CandidateId> members_of(std::uint64_t mask) { return Committee::from_mask(mask).members(); }

// Calls fn(take) for every vector with 0 <= take[i] <= caps[i] summing to total.
template <typename Fn>
void for_each_split(const std::vector<int>& caps, int total, Fn&& fn) {
  std::vector<int> take(caps.size(), 0);
  std::vector<int> suffix(caps.size() + 1, 0);
  for (std::size_t i = caps.size(); i-- > 0;) suffix[i] = suffix[i + 1] + caps[i];
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == caps.size()) {
      if (left == 0) fn(take);
      return;
    }
    const int lo = std::max(0, left - suffix[i + 1]);
    const int hi = std::min(caps[i], left);
    for (int x = lo; x <= hi; ++x) {
      take[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, total);
}

RuleOutcome stv_parallel(const Election& e, int k, std::size_t cap) {
  const int m = e.num_candidates();
  const int q = droop_quota(e.num_voters(), k);
  CountState start;
  start.remaining = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  for (int v = 0; v < e.num_voters(); ++v) {
    std::string ballot;
    for (CandidateId c : e.vote(v).ranking()) ballot += static_cast<char>(c);
    ++start.ballots[ballot];
  }

  std::vector<Committee> found;
  std::unordered_set<std::string> seen;
  std::vector<CountState> stack{start};
  seen.insert(start.key());
  auto push = [&](CountState next) {
    if (!seen.insert(next.key()).second) return;
    if (seen.size() > cap) {
      std::sort(found.begin(), found.end());
      found.erase(std::unique(found.begin(), found.end()), found.end());
      throw BudgetExhausted(seen.size() - 1, std::move(found));
    }
    stack.push_back(std::move(next));
  };

  while (!stack.empty()) {
    CountState s = std::move(stack.back());
    stack.pop_back();
    const int seats = k - std::popcount(s.elected);
    if (seats == 0) {
      found.push_back(Committee::from_mask(s.elected));
      continue;
    }
    if (std::popcount(s.remaining) <= seats) {
      found.push_back(Committee::from_mask(s.elected | s.remaining));
      continue;
    }
    const auto scores = plurality(s.ballots, m);
    const auto running = members_of(s.remaining);
    bool any_quota = false;
    for (CandidateId c : running) {
      if (scores[static_cast<std::size_t>(c)] < q) continue;
      any_quota = true;
      std::vector<const std::string*> types;
      std::vector<int> caps;
      for (const auto& [ballot, count] : s.ballots)
        if (ballot.front() == static_cast<char>(c)) {
          types.push_back(&ballot);
          caps.push_back(count);
        }
      for_each_split(caps, q, [&](const std::vector<int>& take) {
        Ballots reduced = s.ballots;
        for (std::size_t i = 0; i < types.size(); ++i) reduced[*types[i]] -= take[i];
        CountState next;
        next.remaining = s.remaining & ~(std::uint64_t{1} << c);
        next.elected = s.elected | (std::uint64_t{1} << c);
        next.ballots = erase_candidate(reduced, c);
        push(std::move(next));
      });
    }
    if (any_quota) continue;
    int lowest = std::numeric_limits<int>::max();
    for (CandidateId c : running) lowest = std::min(lowest, scores[static_cast<std::size_t>(c)]);
    for (CandidateId c : running) {
      if (scores[static_cast<std::size_t>(c)] != lowest) continue;
      CountState next;
      next.remaining = s.remaining & ~(std::uint64_t{1} << c);
      next.elected = s.elected;
      next.ballots = erase_candidate(s.ballots, c);
      push(std::move(next));
    }
  }
  return RuleOutcome(std::move(found));
}

RuleOutcome stv_lexicographic(const Election& e, int k) {
  const int m = e.num_candidates();
  const int q = droop_quota(e.num_voters(), k);
  std::vector<std::vector<CandidateId>> votes;
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto r = e.vote(v).ranking();
    votes.emplace_back(r.begin(), r.end());
  }
  std::vector<bool> alive(votes.size(), true);
  std::vector<bool> running(static_cast<std::size_t>(m), true);
  std::uint64_t elected = 0;
  int n_running = m;
  auto erase = [&](CandidateId c) {
    running[static_cast<std::size_t>(c)] = false;
    --n_running;
    for (auto& v : votes) v.erase(std::remove(v.begin(), v.end(), c), v.end());
  };
  for (;;) {
    const int seats = k - std::popcount(elected);
    if (seats == 0) break;
    if (n_running <= seats) {
      for (CandidateId c = 0; c < m; ++c)
        if (running[static_cast<std::size_t>(c)]) elected |= std::uint64_t{1} << c;
      break;
    }
    std::vector<int> scores(static_cast<std::size_t>(m), 0);
    for (std::size_t v = 0; v < votes.size(); ++v)
      if (alive[v]) ++scores[static_cast<std::size_t>(votes[v].front())];
    CandidateId pick = -1;
    for (CandidateId c = 0; c < m && pick < 0; ++c)
      if (running[static_cast<std::size_t>(c)] && scores[static_cast<std::size_t>(c)] >= q) pick = c;
    if (pick >= 0) {
      int to_delete = q;
      for (std::size_t v = 0; v < votes.size() && to_delete > 0; ++v)
        if (alive[v] && votes[v].front() == pick) {
          alive[v] = false;
          --to_delete;
        }
      elected |= std::uint64_t{1} << pick;
      erase(pick);
      continue;
    }
    CandidateId lowest = -1;
    for (CandidateId c = 0; c < m; ++c)
      if (running[static_cast<std::size_t>(c)] &&
          (lowest < 0 || scores[static_cast<std::size_t>(c)] < scores[static_cast<std::size_t>(lowest)]))
        lowest = c;
    erase(lowest);
  }
  return RuleOutcome({Committee::from_mask(elected)});
}

}  // namespace

int droop_quota(int n, int k) { return n / (k + 1) + 1; }

RuleOutcome elect_stv(const Election& e, int k, const StvConfig& cfg) {
  if (k < 1 || k > e.num_candidates()) throw DomainError("committee size k out of range");
  if (cfg.universe_cap < 1) throw DomainError("universe cap must be at least 1");
  return cfg.tie_mode == TieMode::ParallelUniverses ? stv_parallel(e, k, cfg.universe_cap)
                                                    : stv_lexicographic(e, k);
}

}  // namespace mwvote
