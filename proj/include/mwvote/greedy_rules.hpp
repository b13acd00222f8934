#pragma once

#include <vector>

#include "mwvote/election.hpp"
#include "mwvote/tie_breaking.hpp"

namespace mwvote {

struct GreedyStep {
  CandidateId candidate = 0;
  /// W_i, the committee after this step.
  Committee committee;
  /// Voters assigned in this step (Greedy-Monroe only), ascending.
  std::vector<int> group;
  /// V_i, every voter assigned so far (Greedy-Monroe only), ascending.
  std::vector<int> assigned;
  /// n_i (Greedy-Monroe only).
  int group_size = 0;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  Committee committee;
  /// l1 Borda satisfaction of the assignment the greedy run builds.
  Score value = 0;
  /// Position of this run in depth-first exploration order.
  std::size_t branch = 0;
};

struct GreedyConfig {
  TieMode tie_mode = TieMode::Lexicographic;
  /// Upper bound on explored search nodes.
  std::size_t universe_cap = kDefaultUniverseCap;
  /// Traces make exploration follow every path instead of sharing states.
  bool record_traces = true;
};

struct GreedyResult {
  RuleOutcome outcome;
  std::vector<GreedyTrace> traces;
  /// Smallest and largest greedy value over all explored runs.
  Score min_value = 0;
  Score max_value = 0;
};

/// Greedy Chamberlin-Courant with Borda satisfaction.
GreedyResult greedy_cc(const Election& e, int k, const GreedyConfig& cfg = {});

/// Greedy Monroe with Borda satisfaction; group sizes ceil(n/k) for the first
/// n mod k steps, floor(n/k) afterwards. Requires k <= n.
GreedyResult greedy_monroe(const Election& e, int k, const GreedyConfig& cfg = {});

enum class GreedyRule { ChamberlinCourant, Monroe };

struct ApproximationReport {
  /// Worst greedy value over every parallel universe.
  Score greedy_value = 0;
  Score exact_value = 0;
  double ratio = 1.0;
  double bound = 0.0;
  bool bound_applicable = true;
  bool pass = true;
};

/// Compares greedy and exact l1 Borda values. The CC guarantee is 1 - 1/e; the
/// Monroe guarantee is 1 - k/(2m-1) - H_k/k and is skipped when negative.
ApproximationReport check_approximation(const Election& e, int k, GreedyRule rule,
                                        std::size_t universe_cap = kDefaultUniverseCap);

}  // namespace mwvote
