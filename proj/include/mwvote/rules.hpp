#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "mwvote/election.hpp"
#include "mwvote/tie_breaking.hpp"

namespace mwvote {

enum class RuleId { Sntv, Bloc, KBorda, Stv, L1Cc, LminCc, GreedyCc, L1Monroe, LminMonroe, GreedyMonroe };

struct RuleOptions {
  TieMode tie_mode = TieMode::ParallelUniverses;
  std::size_t universe_cap = kDefaultUniverseCap;
};

/// All ten rules in table order.
std::span<const RuleId> all_rules();

std::string_view rule_name(RuleId rule);
std::optional<RuleId> parse_rule(std::string_view name);

/// Monroe-type rules need k <= n; every rule needs 1 <= k <= m.
bool rule_applicable(RuleId rule, int m, int n, int k);

bool is_committee_scoring_rule(RuleId rule);
bool is_weakly_separable(RuleId rule);
bool is_best_k_rule(RuleId rule);

/// CC and Monroe variants use Borda satisfaction m - pos.
RuleOutcome elect(RuleId rule, const Election& e, int k, const RuleOptions& options = {});

}  // namespace mwvote
