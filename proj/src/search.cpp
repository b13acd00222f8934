#include "mwvote/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mwvote/election_io.hpp"

namespace mwvote {
namespace {

struct ProfileSpace {
  int m;
  std::shared_ptr<const Roster> roster;
  std::vector<std::vector<CandidateId>> orders;

  explicit ProfileSpace(int m_) : m(m_), roster(Roster::alphabetic(m_)), orders(lexicographic_orders(m_)) {}

  Election build(const std::vector<std::size_t>& idx) const {
    std::vector<CandidateId> flat;
    flat.reserve(idx.size() * static_cast<std::size_t>(m));
    for (std::size_t i : idx) flat.insert(flat.end(), orders[i].begin(), orders[i].end());
    return Election(roster, std::move(flat));
  }

  // Non-decreasing index sequences of length n in lexicographic order.
  template <typename Fn>
  bool each(int n, Fn&& fn) const {
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    const std::size_t top = orders.size() - 1;
    for (;;) {
      if (!fn(idx)) return false;
      int i = n - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == top) --i;
      if (i < 0) return true;
      const std::size_t next = idx[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < n; ++j) idx[static_cast<std::size_t>(j)] = next;
    }
  }
};

int k_upper(Axiom axiom, const SearchBounds& b, int m) {
  const int hi = std::min(b.max_k, m);
  return axiom == Axiom::CommitteeMonotonicity ? std::min(hi, m - 1) : hi;
}

AxiomVerdict run_instance(RuleEvaluator& rule, Axiom axiom, const Election& e, int k, const SearchBounds& b) {
  CheckParams p;
  p.k = k;
  p.t_lo = 2;
  p.t_hi = b.max_t;
  return check_axiom(axiom, rule, e, p);
}

AxiomVerdict finish(std::size_t instances, std::size_t inconclusive, const char* how) {
  AxiomVerdict v;
  v.status = VerdictStatus::Inconclusive;
  v.instances = instances;
  v.note = std::string(how) + ": " + std::to_string(instances) + " instances, no violation";
  if (inconclusive > 0) v.note += ", " + std::to_string(inconclusive) + " over budget";
  return v;
}

void validate(const SearchBounds& b) {
  if (b.max_candidates < 1 || b.max_voters < 1 || b.max_k < 1)
    throw DomainError("search bounds must be at least 1");
  if (b.max_candidates > 8) throw DomainError("search supports at most 8 candidates");
  if (b.max_t < 2) throw DomainError("homogeneity search needs max t >= 2");
}

}  // namespace

std::vector<std::vector<CandidateId>> lexicographic_orders(int m) {
  std::vector<CandidateId> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<CandidateId>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool for_each_anonymous_profile(int m, int n, const std::function<bool(const Election&)>& fn) {
  if (m < 1 || n < 1) throw DomainError("profiles need m >= 1 and n >= 1");
  const ProfileSpace space(m);
  return space.each(n, [&](const std::vector<std::size_t>& idx) { return fn(space.build(idx)); });
}

std::uint64_t count_anonymous_profiles(int m, int n) {
  std::uint64_t orders = 1;
  for (int i = 2; i <= m; ++i) orders *= static_cast<std::uint64_t>(i);
  // C(orders + n - 1, n), built incrementally so every step is exact.
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * (orders + static_cast<std::uint64_t>(i) - 1) / static_cast<std::uint64_t>(i);
  return c;
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + x % span;
}

Election impartial_culture(std::mt19937_64& rng, int m, int n) {
  std::vector<CandidateId> flat;
  flat.reserve(static_cast<std::size_t>(m) * n);
  std::vector<CandidateId> p(static_cast<std::size_t>(m));
  for (int v = 0; v < n; ++v) {
    std::iota(p.begin(), p.end(), 0);
    for (int i = m - 1; i > 0; --i)
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::uint64_t>(i)))]);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return Election(Roster::alphabetic(m), std::move(flat));
}

AxiomVerdict search_counterexample(RuleEvaluator& rule, Axiom axiom, const SearchBounds& b,
                                   const InstanceGuard& guard) {
  validate(b);
  if (axiom == Axiom::Nonimposition) throw DomainError("use check_nonimposition for nonimposition");
  const auto admissible = [&](int m, int n, int k) {
    return rule_applicable(rule.rule(), m, n, k) && (!guard || guard(m, n, k));
  };
  std::size_t instances = 0;
  std::size_t over_budget = 0;
  std::optional<AxiomVerdict> found;
  auto record = [&](AxiomVerdict v) {
    ++instances;
    if (v.status == VerdictStatus::Inconclusive) ++over_budget;
    if (v.violated()) found = std::move(v);
    return !found;
  };

  if (b.mode == SearchMode::Exhaustive) {
    for (int m = 1; m <= b.max_candidates && !found; ++m) {
      const ProfileSpace space(m);
      const int k_hi = k_upper(axiom, b, m);
      if (axiom == Axiom::Consistency) {
        for (int total = 2; total <= b.max_voters && !found; ++total)
          for (int n1 = 1; n1 <= total / 2 && !found; ++n1) {
            const int n2 = total - n1;
            space.each(n1, [&](const std::vector<std::size_t>& i1) {
              const Election e1 = space.build(i1);
              return space.each(n2, [&](const std::vector<std::size_t>& i2) {
                if (n1 == n2 && i2 < i1) return true;
                const Election e2 = space.build(i2);
                for (int k = 1; k <= k_hi; ++k) {
                  if (!admissible(m, n1, k) || !admissible(m, n2, k)) continue;
                  if (!record(check_consistency(rule, e1, e2, k))) return false;
                }
                return true;
              });
            });
          }
        continue;
      }
      for (int n = 1; n <= b.max_voters && !found; ++n)
        space.each(n, [&](const std::vector<std::size_t>& idx) {
          const Election e = space.build(idx);
          for (int k = 1; k <= k_hi; ++k) {
            if (!admissible(m, n, axiom == Axiom::CommitteeMonotonicity ? k + 1 : k)) continue;
            if (!record(run_instance(rule, axiom, e, k, b))) return false;
          }
          return true;
        });
    }
    return found ? std::move(*found) : finish(instances, over_budget, "exhausted");
  }

  std::mt19937_64 rng(b.seed);
  const int m_lo = std::min(2, b.max_candidates);
  for (std::size_t draw = 0; draw < b.budget && !found; ++draw) {
    const int m = static_cast<int>(uniform_int(rng, static_cast<std::uint64_t>(m_lo), static_cast<std::uint64_t>(b.max_candidates)));
    const int k_hi = k_upper(axiom, b, m);
    if (k_hi < 1) continue;
    const int k = static_cast<int>(uniform_int(rng, 1, static_cast<std::uint64_t>(k_hi)));
    const int n = static_cast<int>(uniform_int(rng, 1, static_cast<std::uint64_t>(b.max_voters)));
    const Election e = impartial_culture(rng, m, n);
    if (axiom == Axiom::Consistency) {
      const int n2 = static_cast<int>(uniform_int(rng, 1, static_cast<std::uint64_t>(b.max_voters)));
      const Election e2 = impartial_culture(rng, m, n2);
      if (!admissible(m, n, k) || !admissible(m, n2, k)) continue;
      record(check_consistency(rule, e, e2, k));
      continue;
    }
    if (!admissible(m, n, axiom == Axiom::CommitteeMonotonicity ? k + 1 : k)) continue;
    record(run_instance(rule, axiom, e, k, b));
  }
  return found ? std::move(*found) : finish(instances, over_budget, "budget spent");
}

AxiomVerdict search_counterexample(RuleId rule, Axiom axiom, const SearchBounds& bounds,
                                   const RuleOptions& options) {
  RuleEvaluator eval(rule, options, true);
  return search_counterexample(eval, axiom, bounds);
}

AxiomVerdict check_nonimposition(RuleId rule, int m, int k, const SearchBounds& b, const RuleOptions& options) {
  if (m < 1 || m > 8) throw DomainError("nonimposition search supports 1 <= m <= 8");
  if (k < 1 || k > m) throw DomainError("committee size k out of range");
  RuleEvaluator eval(rule, options, true);
  const Committee target = Committee::from_mask((std::uint64_t{1} << k) - 1);
  const ProfileSpace space(m);
  AxiomVerdict v;
  v.status = VerdictStatus::Inconclusive;
  for (int n = 1; n <= b.max_voters && v.status != VerdictStatus::Holds; ++n) {
    if (!rule_applicable(rule, m, n, k)) continue;
    space.each(n, [&](const std::vector<std::size_t>& idx) {
      ++v.instances;
      const Election e = space.build(idx);
      try {
        if (!eval(e, k).is_unique(target)) return true;
      } catch (const BudgetExhausted&) {
        return true;
      }
      v.status = VerdictStatus::Holds;
      v.note = format_committee(target, e.roster()) + " is the unique winner of:\n" + serialize_election(e);
      return false;
    });
  }
  if (v.status != VerdictStatus::Holds)
    v.note = "no election with up to " + std::to_string(b.max_voters) + " voters makes " +
             format_committee(target, *Roster::alphabetic(m)) + " the unique winner";
  return v;
}

}  // namespace mwvote
