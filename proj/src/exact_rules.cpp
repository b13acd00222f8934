#include "mwvote/exact_rules.hpp"

#include <limits>

#include "mwvote/subsets.hpp"

namespace mwvote {
namespace {

void check_k(const Election& e, int k) {
  if (k < 1 || k > e.num_candidates()) throw DomainError("committee size k out of range");
}

template <typename ValueFn>
RuleOutcome argmax_over_committees(int m, int k, ValueFn&& value) {
  std::vector<Committee> best;
  Score best_value = std::numeric_limits<Score>::min();
  for_each_subset(m, k, [&](std::span<const int> idx) {
    std::uint64_t mask = 0;
    for (int c : idx) mask |= std::uint64_t{1} << c;
    const Committee w = Committee::from_mask(mask);
    const Score v = value(w);
    if (v > best_value) {
      best_value = v;
      best.clear();
    }
    if (v == best_value) best.push_back(w);
  });
  return RuleOutcome(std::move(best), best_value);
}

}  // namespace

RuleOutcome elect_sntv(const Election& e, int k) {
  check_k(e, k);
  return evaluate_separable_as_best_k(e, ScoreVector::plurality(e.num_candidates()), k);
}

RuleOutcome elect_bloc(const Election& e, int k) {
  check_k(e, k);
  return evaluate_separable_as_best_k(e, ScoreVector::approval(e.num_candidates(), k), k);
}

RuleOutcome elect_kborda(const Election& e, int k) {
  check_k(e, k);
  return evaluate_separable_as_best_k(e, ScoreVector::borda(e.num_candidates()), k);
}

RuleOutcome elect_cc_exact(const Election& e, int k, const SatisfactionFunction& alpha, Aggregation mode) {
  check_k(e, k);
  if (alpha.size() != e.num_candidates()) throw DomainError("satisfaction table length must equal m");
  const int n = e.num_voters();
  return argmax_over_committees(e.num_candidates(), k, [&](const Committee& w) {
    const auto members = w.members();
    Score total = 0;
    Score worst = std::numeric_limits<Score>::max();
    for (int v = 0; v < n; ++v) {
      int best = e.num_candidates();
      for (CandidateId c : members) best = std::min(best, e.position(v, c));
      const Score s = alpha(best);
      total += s;
      worst = std::min(worst, s);
    }
    return mode == Aggregation::Utilitarian ? total : worst;
  });
}

RuleOutcome elect_monroe_exact(const Election& e, int k, const SatisfactionFunction& alpha, Aggregation mode) {
  check_k(e, k);
  if (k > e.num_voters()) throw DomainError("Monroe rules need k <= n");
  if (alpha.size() != e.num_candidates()) throw DomainError("satisfaction table length must equal m");
  return argmax_over_committees(e.num_candidates(), k, [&](const Committee& w) {
    return monroe_optimal_assignment(e, w, alpha, mode).value;
  });
}

}  // namespace mwvote
