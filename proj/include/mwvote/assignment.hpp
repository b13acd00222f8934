#pragma once

#include <span>
#include <vector>

#include "mwvote/election.hpp"
#include "mwvote/scoring.hpp"

namespace mwvote {

enum class Aggregation { Utilitarian, Egalitarian };

/// Voter-to-representative map. `rep[v]` is the candidate representing voter v.
struct Assignment {
  std::vector<CandidateId> rep;

  Committee image() const;
  /// Number of voters represented by each candidate id (length m).
  std::vector<int> load(int m) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct AssignmentResult {
  Assignment assignment;
  Score value = 0;
};

/// l1 (sum) or lmin (minimum) of alpha at each voter's representative.
Score assignment_value(const Election& e, const Assignment& a, const SatisfactionFunction& alpha,
                       Aggregation mode);

/// Every voter gets its favourite member of `w`.
AssignmentResult cc_assignment(const Election& e, const Committee& w, const SatisfactionFunction& alpha,
                               Aggregation mode);

/// Optimal assignment with every column used between floor(n/k) and ceil(n/k)
/// times. `sat` is row-major n-by-k. Returns one optimal column per row.
struct BalancedSolution {
  Score value = 0;
  std::vector<int> column;
};
BalancedSolution solve_balanced_assignment(std::span<const Score> sat, int n, int k, Aggregation mode);

/// Monroe-constrained optimum for committee `w`. Throws DomainError when |w| > n.
AssignmentResult monroe_optimal_assignment(const Election& e, const Committee& w,
                                           const SatisfactionFunction& alpha, Aggregation mode);

}  // namespace mwvote
