#pragma once

#include "mwvote/assignment.hpp"
#include "mwvote/election.hpp"
#include "mwvote/scoring.hpp"
#include "mwvote/tie_breaking.hpp"

namespace mwvote {

RuleOutcome elect_sntv(const Election& e, int k);
RuleOutcome elect_bloc(const Election& e, int k);
RuleOutcome elect_kborda(const Election& e, int k);

/// Every k-subset scored by its Chamberlin-Courant assignment; all maximizers.
RuleOutcome elect_cc_exact(const Election& e, int k, const SatisfactionFunction& alpha, Aggregation mode);

/// Every k-subset scored by its optimal Monroe assignment; all maximizers.
/// Requires k <= n.
RuleOutcome elect_monroe_exact(const Election& e, int k, const SatisfactionFunction& alpha, Aggregation mode);

struct StvConfig {
  TieMode tie_mode = TieMode::ParallelUniverses;
  /// Upper bound on distinct counting states explored.
  std::size_t universe_cap = kDefaultUniverseCap;
};

/// Droop quota floor(n/(k+1)) + 1 on the original vote count, fixed for the
/// whole count. Throws BudgetExhausted when the cap is hit.
RuleOutcome elect_stv(const Election& e, int k, const StvConfig& cfg = {});

int droop_quota(int n, int k);

}  // namespace mwvote
