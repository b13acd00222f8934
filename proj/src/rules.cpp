#include "mwvote/rules.hpp"

#include <array>

#include "mwvote/exact_rules.hpp"
#include "mwvote/greedy_rules.hpp"

namespace mwvote {
namespace {

constexpr std::array kRules{RuleId::Stv,    RuleId::Sntv,     RuleId::Bloc,       RuleId::KBorda,
                            RuleId::L1Cc,   RuleId::LminCc,   RuleId::GreedyCc,   RuleId::L1Monroe,
                            RuleId::LminMonroe, RuleId::GreedyMonroe};

bool is_monroe(RuleId rule) {
  return rule == RuleId::L1Monroe || rule == RuleId::LminMonroe || rule == RuleId::GreedyMonroe;
}

}  // namespace

std::span<const RuleId> all_rules() { return kRules; }

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::Sntv: return "sntv";
    case RuleId::Bloc: return "bloc";
    case RuleId::KBorda: return "k-borda";
    case RuleId::Stv: return "stv";
    case RuleId::L1Cc: return "l1-cc";
    case RuleId::LminCc: return "lmin-cc";
    case RuleId::GreedyCc: return "greedy-cc";
    case RuleId::L1Monroe: return "l1-monroe";
    case RuleId::LminMonroe: return "lmin-monroe";
    case RuleId::GreedyMonroe: return "greedy-monroe";
  }
  return "?";
}

std::optional<RuleId> parse_rule(std::string_view name) {
  for (RuleId r : kRules)
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

bool rule_applicable(RuleId rule, int m, int n, int k) {
  if (k < 1 || k > m || n < 1) return false;
  return !is_monroe(rule) || k <= n;
}

bool is_committee_scoring_rule(RuleId rule) {
  return rule == RuleId::Sntv || rule == RuleId::Bloc || rule == RuleId::KBorda || rule == RuleId::L1Cc;
}

bool is_weakly_separable(RuleId rule) {
  return rule == RuleId::Sntv || rule == RuleId::Bloc || rule == RuleId::KBorda;
}

bool is_best_k_rule(RuleId rule) { return rule == RuleId::Sntv || rule == RuleId::KBorda; }

RuleOutcome elect(RuleId rule, const Election& e, int k, const RuleOptions& options) {
  const auto borda = [&] { return SatisfactionFunction::borda(e.num_candidates()); };
  GreedyConfig greedy{options.tie_mode, options.universe_cap, false};
  switch (rule) {
    case RuleId::Sntv: return elect_sntv(e, k);
    case RuleId::Bloc: return elect_bloc(e, k);
    case RuleId::KBorda: return elect_kborda(e, k);
    case RuleId::Stv: return elect_stv(e, k, {options.tie_mode, options.universe_cap});
    case RuleId::L1Cc: return elect_cc_exact(e, k, borda(), Aggregation::Utilitarian);
    case RuleId::LminCc: return elect_cc_exact(e, k, borda(), Aggregation::Egalitarian);
    case RuleId::GreedyCc: return greedy_cc(e, k, greedy).outcome;
    case RuleId::L1Monroe: return elect_monroe_exact(e, k, borda(), Aggregation::Utilitarian);
    case RuleId::LminMonroe: return elect_monroe_exact(e, k, borda(), Aggregation::Egalitarian);
    case RuleId::GreedyMonroe: return greedy_monroe(e, k, greedy).outcome;
  }
  throw DomainError("unknown rule");
}

}  // namespace mwvote
