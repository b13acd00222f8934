#include "mwvote/greedy_rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <boost/rational.hpp>

#include "mwvote/assignment.hpp"
#include "mwvote/exact_rules.hpp"

namespace mwvote {
namespace {

void check_common(const Election& e, int k, const GreedyConfig& cfg) {
  if (k < 1 || k > e.num_candidates()) throw DomainError("committee size k out of range");
  if (cfg.universe_cap < 1) throw DomainError("universe cap must be at least 1");
}

class Collector {
 public:
  Collector(const GreedyConfig& cfg) : cfg_(cfg) {}

  void visit() {
    if (++explored_ > cfg_.universe_cap) {
      std::vector<Committee> partial(found_.begin(), found_.end());
      throw BudgetExhausted(explored_ - 1, std::move(partial));
    }
  }

  void finish(Committee w, Score value, const std::vector<GreedyStep>* steps) {
    found_.insert(w);
    min_ = std::min(min_, value);
    max_ = std::max(max_, value);
    if (steps) traces_.push_back({*steps, w, value, traces_.size()});
  }

  GreedyResult result() && {
    GreedyResult out{RuleOutcome(std::vector<Committee>(found_.begin(), found_.end())), std::move(traces_), min_,
                     max_};
    return out;
  }

 private:
  const GreedyConfig& cfg_;
  std::size_t explored_ = 0;
  std::set<Committee> found_;
  std::vector<GreedyTrace> traces_;
  Score min_ = std::numeric_limits<Score>::max();
  Score max_ = std::numeric_limits<Score>::min();
};

// ---- Greedy-CC ----

struct CcSearch {
  const Election& e;
  int k;
  const GreedyConfig& cfg;
  Collector& out;
  std::set<std::uint64_t> seen;
  std::vector<GreedyStep> steps;

  // best[v] = best position of voter v within the current committee (m+1 if empty).
  Score value_of(const std::vector<int>& best) const {
    Score total = 0;
    for (int p : best) total += p > e.num_candidates() ? 0 : e.num_candidates() - p;
    return total;
  }

  void run(std::uint64_t mask, std::vector<int>& best) {
    out.visit();
    const int m = e.num_candidates();
    if (std::popcount(mask) == k) {
      out.finish(Committee::from_mask(mask), value_of(best), cfg.record_traces ? &steps : nullptr);
      return;
    }
    Score top = -1;
    std::vector<CandidateId> argmax;
    for (CandidateId c = 0; c < m; ++c) {
      if ((mask >> c) & 1U) continue;
      Score total = 0;
      for (int v = 0; v < e.num_voters(); ++v) total += m - std::min(best[static_cast<std::size_t>(v)], e.position(v, c));
      if (total > top) {
        top = total;
        argmax.clear();
      }
      if (total == top) argmax.push_back(c);
    }
    if (cfg.tie_mode == TieMode::Lexicographic) argmax.resize(1);
    for (CandidateId c : argmax) {
      const std::uint64_t next = mask | (std::uint64_t{1} << c);
      if (!cfg.record_traces && !seen.insert(next).second) continue;
      std::vector<int> saved = best;
      for (int v = 0; v < e.num_voters(); ++v)
        best[static_cast<std::size_t>(v)] = std::min(best[static_cast<std::size_t>(v)], e.position(v, c));
      if (cfg.record_traces) steps.push_back({c, Committee::from_mask(next), {}, {}, 0});
      run(next, best);
      if (cfg.record_traces) steps.pop_back();
      best = std::move(saved);
    }
  }
};

// ---- Greedy-Monroe ----

struct VoterType {
  std::vector<int> voters;  // ascending indices
  std::vector<int> position;
};

struct MonroeSearch {
  const Election& e;
  int k;
  const GreedyConfig& cfg;
  Collector& out;
  std::vector<VoterType> types;
  std::set<std::pair<std::uint64_t, std::vector<int>>> seen;
  std::vector<GreedyStep> steps;

  int group_size(int step) const {
    const int n = e.num_voters();
    return step < n % k ? (n + k - 1) / k : n / k;
  }

  Score sat(std::size_t t, CandidateId c) const {
    return e.num_candidates() - types[t].position[static_cast<std::size_t>(c)];
  }

  void run(std::uint64_t mask, std::vector<int>& used, Score value) {
    out.visit();
    const int step = std::popcount(mask);
    if (step == k) {
      out.finish(Committee::from_mask(mask), value, cfg.record_traces ? &steps : nullptr);
      return;
    }
    const int ni = group_size(step);
    const int m = e.num_candidates();

    Score top = -1;
    std::vector<CandidateId> argmax;
    std::vector<Score> sats;
    for (CandidateId c = 0; c < m; ++c) {
      if ((mask >> c) & 1U) continue;
      sats.clear();
      for (std::size_t t = 0; t < types.size(); ++t)
        for (int i = used[t]; i < static_cast<int>(types[t].voters.size()); ++i) sats.push_back(sat(t, c));
      std::partial_sort(sats.begin(), sats.begin() + ni, sats.end(), std::greater<>());
      Score total = 0;
      for (int i = 0; i < ni; ++i) total += sats[static_cast<std::size_t>(i)];
      if (total > top) {
        top = total;
        argmax.clear();
      }
      if (total == top) argmax.push_back(c);
    }
    if (cfg.tie_mode == TieMode::Lexicographic) argmax.resize(1);

    for (CandidateId c : argmax) {
      sats.clear();
      for (std::size_t t = 0; t < types.size(); ++t)
        for (int i = used[t]; i < static_cast<int>(types[t].voters.size()); ++i) sats.push_back(sat(t, c));
      std::nth_element(sats.begin(), sats.begin() + (ni - 1), sats.end(), std::greater<>());
      const Score theta = sats[static_cast<std::size_t>(ni - 1)];

      std::vector<int> take(types.size(), 0);
      int forced = 0;
      std::vector<std::size_t> boundary;
      std::vector<int> caps;
      for (std::size_t t = 0; t < types.size(); ++t) {
        const int avail = static_cast<int>(types[t].voters.size()) - used[t];
        if (avail == 0) continue;
        if (sat(t, c) > theta) {
          take[t] = avail;
          forced += avail;
        } else if (sat(t, c) == theta) {
          boundary.push_back(t);
          caps.push_back(avail);
        }
      }
      const int rest = ni - forced;

      auto descend = [&](const std::vector<int>& extra) {
        std::vector<int> chosen = take;
        for (std::size_t b = 0; b < boundary.size(); ++b) chosen[boundary[b]] += extra[b];
        std::vector<int> next_used = used;
        for (std::size_t t = 0; t < types.size(); ++t) next_used[t] += chosen[t];
        const std::uint64_t next = mask | (std::uint64_t{1} << c);
        if (!cfg.record_traces && !seen.emplace(next, next_used).second) return;
        if (cfg.record_traces) {
          GreedyStep s;
          s.candidate = c;
          s.committee = Committee::from_mask(next);
          s.group_size = ni;
          for (std::size_t t = 0; t < types.size(); ++t)
            for (int i = used[t]; i < next_used[t]; ++i) s.group.push_back(types[t].voters[static_cast<std::size_t>(i)]);
          std::sort(s.group.begin(), s.group.end());
          s.assigned = steps.empty() ? std::vector<int>{} : steps.back().assigned;
          s.assigned.insert(s.assigned.end(), s.group.begin(), s.group.end());
          std::sort(s.assigned.begin(), s.assigned.end());
          steps.push_back(std::move(s));
        }
        run(next, next_used, value + top);
        if (cfg.record_traces) steps.pop_back();
      };

      if (cfg.tie_mode == TieMode::Lexicographic) {
        // Lowest-index boundary voters first.
        std::vector<std::pair<int, std::size_t>> pool;
        for (std::size_t b = 0; b < boundary.size(); ++b) {
          const auto t = boundary[b];
          for (int i = used[t]; i < static_cast<int>(types[t].voters.size()); ++i)
            pool.emplace_back(types[t].voters[static_cast<std::size_t>(i)], b);
        }
        std::sort(pool.begin(), pool.end());
        std::vector<int> extra(boundary.size(), 0);
        for (int i = 0; i < rest; ++i) ++extra[pool[static_cast<std::size_t>(i)].second];
        descend(extra);
      } else {
        for_each_split(caps, rest, descend);
      }
    }
  }

  template <typename Fn>
  static void for_each_split(const std::vector<int>& caps, int total, Fn&& fn) {
    std::vector<int> take(caps.size(), 0);
    std::vector<int> suffix(caps.size() + 1, 0);
    for (std::size_t i = caps.size(); i-- > 0;) suffix[i] = suffix[i + 1] + caps[i];
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i == caps.size()) {
        if (left == 0) fn(take);
        return;
      }
      for (int x = std::max(0, left - suffix[i + 1]); x <= std::min(caps[i], left); ++x) {
        take[i] = x;
        self(self, i + 1, left - x);
      }
    };
    rec(rec, 0, total);
  }
};

}  // namespace

GreedyResult greedy_cc(const Election& e, int k, const GreedyConfig& cfg) {
  check_common(e, k, cfg);
  Collector out(cfg);
  CcSearch search{e, k, cfg, out, {}, {}};
  std::vector<int> best(static_cast<std::size_t>(e.num_voters()), e.num_candidates() + 1);
  search.run(0, best);
  return std::move(out).result();
}

GreedyResult greedy_monroe(const Election& e, int k, const GreedyConfig& cfg) {
  check_common(e, k, cfg);
  if (k > e.num_voters()) throw DomainError("Greedy-Monroe needs k <= n");
  Collector out(cfg);
  MonroeSearch search{e, k, cfg, out, {}, {}, {}};
  std::map<std::vector<CandidateId>, std::size_t> index;
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto r = e.vote(v).ranking();
    std::vector<CandidateId> key(r.begin(), r.end());
    auto [it, fresh] = index.emplace(key, search.types.size());
    if (fresh) {
      VoterType t;
      for (CandidateId c = 0; c < e.num_candidates(); ++c) t.position.push_back(e.position(v, c));
      search.types.push_back(std::move(t));
    }
    search.types[it->second].voters.push_back(v);
  }
  std::vector<int> used(search.types.size(), 0);
  search.run(0, used, 0);
  return std::move(out).result();
}

ApproximationReport check_approximation(const Election& e, int k, GreedyRule rule, std::size_t universe_cap) {
  GreedyConfig cfg;
  cfg.tie_mode = TieMode::ParallelUniverses;
  cfg.universe_cap = universe_cap;
  cfg.record_traces = false;
  const int m = e.num_candidates();
  const auto borda = SatisfactionFunction::borda(m);

  ApproximationReport r;
  if (rule == GreedyRule::ChamberlinCourant) {
    r.greedy_value = greedy_cc(e, k, cfg).min_value;
    r.exact_value = *elect_cc_exact(e, k, borda, Aggregation::Utilitarian).value();
    r.bound = 1.0 - std::exp(-1.0);
    r.pass = r.exact_value == 0 || static_cast<long double>(r.greedy_value) >=
                                       (1.0L - std::exp(-1.0L)) * static_cast<long double>(r.exact_value);
  } else {
    r.greedy_value = greedy_monroe(e, k, cfg).min_value;
    r.exact_value = *elect_monroe_exact(e, k, borda, Aggregation::Utilitarian).value();
    boost::rational<long long> bound(1);
    bound -= boost::rational<long long>(k, 2 * m - 1);
    boost::rational<long long> harmonic(0);
    for (int i = 1; i <= k; ++i) harmonic += boost::rational<long long>(1, i);
    bound -= harmonic / static_cast<long long>(k);
    r.bound = boost::rational_cast<double>(bound);
    r.bound_applicable = bound >= 0;
    r.pass = !r.bound_applicable || r.exact_value == 0 ||
             boost::rational<long long>(r.greedy_value) >= bound * r.exact_value;
  }
  if (r.exact_value > 0) r.ratio = static_cast<double>(r.greedy_value) / static_cast<double>(r.exact_value);
  return r;
}

}  // namespace mwvote
