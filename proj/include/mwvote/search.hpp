#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "mwvote/axioms.hpp"

namespace mwvote {

enum class SearchMode { Exhaustive, Random };

struct SearchBounds {
  int max_candidates = 4;
  int max_voters = 5;
  int max_k = 4;
  /// Homogeneity checks t = 2..max_t.
  int max_t = 3;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 1;
  /// Random mode: number of sampled instances.
  std::size_t budget = 10000;
};

/// Extra admissibility condition on an instance (m, n, k), e.g. n >= k(k+1).
using InstanceGuard = std::function<bool(int m, int n, int k)>;

/// All permutations of 0..m-1 in lexicographic order.
std::vector<std::vector<CandidateId>> lexicographic_orders(int m);

/// Calls fn(e) for every anonymous profile with m candidates and n voters:
/// multisets of the lexicographically ordered permutations, enumerated as
/// non-decreasing index sequences in lexicographic order. Stops when fn
/// returns false; returns false in that case.
bool for_each_anonymous_profile(int m, int n, const std::function<bool(const Election&)>& fn);

/// Number of anonymous profiles for (m, n): C(m! + n - 1, n).
std::uint64_t count_anonymous_profiles(int m, int n);

/// Uniform integer in [lo, hi] by rejection sampling, identical on every platform.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// n votes drawn uniformly from all m! orders.
Election impartial_culture(std::mt19937_64& rng, int m, int n);

/// Exhaustive mode walks (m, n, profile) in canonical order and returns the
/// first violation; consistency pairs profiles with n1 <= n2, n1 + n2 <=
/// max_voters. Random mode samples impartial-culture instances (each part of
/// a consistency pair up to max_voters). Without a violation the verdict is
/// Inconclusive and records how many instances were examined.
AxiomVerdict search_counterexample(RuleEvaluator& rule, Axiom axiom, const SearchBounds& bounds,
                                   const InstanceGuard& guard = {});
AxiomVerdict search_counterexample(RuleId rule, Axiom axiom, const SearchBounds& bounds,
                                   const RuleOptions& options = {});

/// Looks for an election over m candidates whose unique winner is {0..k-1};
/// all shipped rules are neutral, so one committee stands for all of them.
AxiomVerdict check_nonimposition(RuleId rule, int m, int k, const SearchBounds& bounds,
                                 const RuleOptions& options = {});

}  // namespace mwvote
