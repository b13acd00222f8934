#include "mwvote/axioms.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "mwvote/election_io.hpp"

namespace mwvote {
namespace {

constexpr std::array kAxioms{Axiom::Nonimposition,         Axiom::Consistency,
                             Axiom::Homogeneity,           Axiom::CandidateMonotonicity,
                             Axiom::NonCrossingMonotonicity, Axiom::CommitteeMonotonicity,
                             Axiom::SolidCoalitions,       Axiom::ConsensusCommittee,
                             Axiom::WeakUnanimity,         Axiom::StrongUnanimity,
                             Axiom::FixedMajority};

Witness make_witness(const RuleEvaluator& rule, Axiom axiom, int k, const Election& e) {
  return Witness{rule.rule(), axiom, rule.options().tie_mode, k, e, 0, 0, {}, {}, {}, {}, {}};
}

AxiomVerdict violated(Witness w) {
  AxiomVerdict v;
  v.status = VerdictStatus::Violated;
  v.note = w.breach;
  v.witness = std::move(w);
  v.instances = 1;
  return v;
}

AxiomVerdict holds(std::string note = {}) {
  AxiomVerdict v;
  v.note = std::move(note);
  v.instances = 1;
  return v;
}

bool same_committees(const RuleOutcome& a, const RuleOutcome& b) {
  return std::ranges::equal(a.committees(), b.committees());
}

template <typename Body>
AxiomVerdict guarded(Body&& body) {
  try {
    return body();
  } catch (const BudgetExhausted& err) {
    AxiomVerdict v;
    v.status = VerdictStatus::Inconclusive;
    v.note = err.what();
    return v;
  }
}

std::vector<int> first_place_counts(const Election& e) {
  std::vector<int> counts(static_cast<std::size_t>(e.num_candidates()), 0);
  for (int v = 0; v < e.num_voters(); ++v) ++counts[static_cast<std::size_t>(e.at_rank(v, 1))];
  return counts;
}

std::uint64_t top_set(const Election& e, int voter, int k) {
  std::uint64_t mask = 0;
  for (int r = 1; r <= k; ++r) mask |= std::uint64_t{1} << e.at_rank(voter, r);
  return mask;
}

void check_k(const Election& e, int k) {
  if (k < 1 || k > e.num_candidates()) throw DomainError("committee size k out of range");
}

}  // namespace

std::span<const Axiom> all_axioms() { return kAxioms; }

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Nonimposition: return "nonimposition";
    case Axiom::Consistency: return "consistency";
    case Axiom::Homogeneity: return "homogeneity";
    case Axiom::CandidateMonotonicity: return "candidate-monotonicity";
    case Axiom::NonCrossingMonotonicity: return "non-crossing-monotonicity";
    case Axiom::CommitteeMonotonicity: return "committee-monotonicity";
    case Axiom::SolidCoalitions: return "solid-coalitions";
    case Axiom::ConsensusCommittee: return "consensus-committee";
    case Axiom::WeakUnanimity: return "weak-unanimity";
    case Axiom::StrongUnanimity: return "strong-unanimity";
    case Axiom::FixedMajority: return "fixed-majority";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kAxioms)
    if (axiom_name(a) == name) return a;
  return std::nullopt;
}

std::string_view status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Violated: return "violated";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

RuleEvaluator::RuleEvaluator(RuleId rule, RuleOptions options, bool memoize)
    : rule_(rule), options_(options), memoize_(memoize && options.tie_mode == TieMode::ParallelUniverses) {}

RuleOutcome RuleEvaluator::operator()(const Election& e, int k) {
  if (!memoize_) return elect(rule_, e, k, options_);
  const int m = e.num_candidates();
  const int n = e.num_voters();
  const auto flat = e.flat_rankings();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::lexicographical_compare(flat.begin() + a * m, flat.begin() + (a + 1) * m, flat.begin() + b * m,
                                        flat.begin() + (b + 1) * m);
  });
  std::string key;
  key.reserve(static_cast<std::size_t>(n * m + 2));
  key += static_cast<char>(m);
  key += static_cast<char>(k);
  for (int v : order)
    for (int r = 0; r < m; ++r) key += static_cast<char>(flat[static_cast<std::size_t>(v * m + r)]);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  RuleOutcome out = elect(rule_, e, k, options_);
  memo_.emplace(std::move(key), out);
  return out;
}

Election shift_forward(const Election& e, const Shift& shift) {
  if (shift.voter < 0 || shift.voter >= e.num_voters()) throw DomainError("shift names an unknown voter");
  if (shift.candidate < 0 || shift.candidate >= e.num_candidates())
    throw DomainError("shift names an unknown candidate");
  const int m = e.num_candidates();
  const int pos = e.position(shift.voter, shift.candidate);
  if (pos == 1) throw DomainError("candidate is already ranked first");
  std::vector<CandidateId> flat(e.flat_rankings().begin(), e.flat_rankings().end());
  const std::size_t at = static_cast<std::size_t>(shift.voter) * m + pos - 1;
  std::swap(flat[at], flat[at - 1]);
  return Election(e.shared_roster(), std::move(flat));
}

std::optional<Committee> consensus_committee(const Election& e, int k) {
  check_k(e, k);
  const int n = e.num_voters();
  const auto counts = first_place_counts(e);
  std::uint64_t mask = 0;
  for (int c = 0; c < e.num_candidates(); ++c) {
    const int cnt = counts[static_cast<std::size_t>(c)];
    if (cnt == 0) continue;
    if (cnt != n / k && cnt != (n + k - 1) / k) return std::nullopt;
    mask |= std::uint64_t{1} << c;
  }
  if (std::popcount(mask) != k) return std::nullopt;
  return Committee::from_mask(mask);
}

std::optional<Committee> majority_top_set(const Election& e, int k) {
  check_k(e, k);
  std::map<std::uint64_t, int> counts;
  for (int v = 0; v < e.num_voters(); ++v) ++counts[top_set(e, v, k)];
  for (const auto& [mask, cnt] : counts)
    if (2 * cnt > e.num_voters()) return Committee::from_mask(mask);
  return std::nullopt;
}

std::optional<Committee> unanimous_top_set(const Election& e, int k) {
  check_k(e, k);
  const std::uint64_t first = top_set(e, 0, k);
  for (int v = 1; v < e.num_voters(); ++v)
    if (top_set(e, v, k) != first) return std::nullopt;
  return Committee::from_mask(first);
}

AxiomVerdict check_committee_monotonicity(RuleEvaluator& rule, const Election& e, int k_lo, int k_hi) {
  const int m = e.num_candidates();
  if (k_lo < 1 || k_hi > m - 1 || k_lo > k_hi)
    throw DomainError("committee monotonicity needs 1 <= k_lo <= k_hi <= m-1");
  return guarded([&]() -> AxiomVerdict {
    std::size_t tested = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      if (!rule.applicable(e, k + 1)) continue;
      ++tested;
      const RuleOutcome small = rule(e, k);
      const RuleOutcome large = rule(e, k + 1);
      auto fail = [&](const Committee& w, std::string breach) {
        Witness wit = make_witness(rule, Axiom::CommitteeMonotonicity, k, e);
        wit.committee = w;
        wit.outcomes = {{"R(E,k)", small}, {"R(E,k+1)", large}};
        wit.breach = std::move(breach);
        return violated(std::move(wit));
      };
      for (const Committee& w : small.committees())
        if (std::ranges::none_of(large.committees(), [&](const Committee& x) { return w.is_subset_of(x); }))
          return fail(w, "condition (1): " + format_committee(w, e.roster()) +
                             " wins for k but is contained in no winner for k+1");
      for (const Committee& w : large.committees())
        if (std::ranges::none_of(small.committees(), [&](const Committee& x) { return x.is_subset_of(w); }))
          return fail(w, "condition (2): " + format_committee(w, e.roster()) +
                             " wins for k+1 but contains no winner for k");
    }
    AxiomVerdict v = holds();
    v.instances = tested;
    return v;
  });
}

AxiomVerdict check_solid_coalitions(RuleEvaluator& rule, const Election& e, int k) {
  check_k(e, k);
  if (!rule.applicable(e, k)) return holds("not applicable");
  const auto counts = first_place_counts(e);
  std::vector<CandidateId> solid;
  for (int c = 0; c < e.num_candidates(); ++c)
    if (static_cast<long long>(counts[static_cast<std::size_t>(c)]) * k >= e.num_voters()) solid.push_back(c);
  if (solid.empty()) return holds("premise false");
  return guarded([&]() -> AxiomVerdict {
    const RuleOutcome r = rule(e, k);
    for (CandidateId c : solid)
      for (const Committee& w : r.committees())
        if (!w.contains(c)) {
          Witness wit = make_witness(rule, Axiom::SolidCoalitions, k, e);
          wit.candidate = c;
          wit.committee = w;
          wit.outcomes = {{"R(E,k)", r}};
          wit.breach = e.roster().label(c) + " is ranked first by " +
                       std::to_string(counts[static_cast<std::size_t>(c)]) + " of " +
                       std::to_string(e.num_voters()) + " voters but is missing from " +
                       format_committee(w, e.roster());
          return violated(std::move(wit));
        }
    return holds();
  });
}

namespace {

AxiomVerdict require_unique(RuleEvaluator& rule, const Election& e, int k, Axiom axiom, const Committee& w,
                            const char* why) {
  return guarded([&]() -> AxiomVerdict {
    const RuleOutcome r = rule(e, k);
    if (r.is_unique(w)) return holds();
    Witness wit = make_witness(rule, axiom, k, e);
    wit.committee = w;
    wit.outcomes = {{"R(E,k)", r}};
    wit.breach = std::string(why) + " " + format_committee(w, e.roster()) + " is not the unique winner";
    return violated(std::move(wit));
  });
}

}  // namespace

AxiomVerdict check_consensus_committee(RuleEvaluator& rule, const Election& e, int k) {
  check_k(e, k);
  if (!rule.applicable(e, k)) return holds("not applicable");
  const auto w = consensus_committee(e, k);
  if (!w) return holds("premise false");
  return require_unique(rule, e, k, Axiom::ConsensusCommittee, *w, "consensus committee");
}

AxiomVerdict check_unanimity(RuleEvaluator& rule, const Election& e, int k, bool strong) {
  check_k(e, k);
  if (!rule.applicable(e, k)) return holds("not applicable");
  const auto w = unanimous_top_set(e, k);
  if (!w) return holds("premise false");
  if (strong) return require_unique(rule, e, k, Axiom::StrongUnanimity, *w, "unanimous top set");
  return guarded([&]() -> AxiomVerdict {
    const RuleOutcome r = rule(e, k);
    if (r.contains(*w)) return holds();
    Witness wit = make_witness(rule, Axiom::WeakUnanimity, k, e);
    wit.committee = *w;
    wit.outcomes = {{"R(E,k)", r}};
    wit.breach = "unanimous top set " + format_committee(*w, e.roster()) + " does not win";
    return violated(std::move(wit));
  });
}

AxiomVerdict check_fixed_majority(RuleEvaluator& rule, const Election& e, int k) {
  check_k(e, k);
  if (!rule.applicable(e, k)) return holds("not applicable");
  const auto w = majority_top_set(e, k);
  if (!w) return holds("premise false");
  return require_unique(rule, e, k, Axiom::FixedMajority, *w, "majority top set");
}

namespace {

AxiomVerdict check_monotonicity(RuleEvaluator& rule, const Election& e, int k, bool noncrossing) {
  check_k(e, k);
  if (!rule.applicable(e, k)) return holds("not applicable");
  const Axiom axiom = noncrossing ? Axiom::NonCrossingMonotonicity : Axiom::CandidateMonotonicity;
  return guarded([&]() -> AxiomVerdict {
    const RuleOutcome r = rule(e, k);
    std::size_t probes = 0;
    auto fail = [&](const Committee& w, const Shift& s, const RuleOutcome& after) {
      Witness wit = make_witness(rule, axiom, k, e);
      wit.committee = w;
      wit.candidate = s.candidate;
      wit.shift = s;
      wit.outcomes = {{"R(E,k)", r}, {"R(E',k)", after}};
      const std::string c = e.roster().label(s.candidate);
      wit.breach = "after shifting " + c + " forward in vote " + std::to_string(s.voter + 1) + ", " +
                   (noncrossing ? format_committee(w, e.roster()) + " no longer wins"
                                : "no winning committee contains " + c);
      return violated(std::move(wit));
    };
    if (!noncrossing) {
      for (int c = 0; c < e.num_candidates(); ++c) {
        if (!r.any_contains(c)) continue;
        const Committee* w = nullptr;
        for (const Committee& x : r.committees())
          if (x.contains(c)) {
            w = &x;
            break;
          }
        for (int v = 0; v < e.num_voters(); ++v) {
          if (e.position(v, c) == 1) continue;
          ++probes;
          const Shift s{v, c};
          const RuleOutcome after = rule(shift_forward(e, s), k);
          if (!after.any_contains(c)) return fail(*w, s, after);
        }
      }
    } else {
      for (const Committee& w : r.committees())
        for (CandidateId c : w.members())
          for (int v = 0; v < e.num_voters(); ++v) {
            const int pos = e.position(v, c);
            if (pos == 1 || w.contains(e.at_rank(v, pos - 1))) continue;
            ++probes;
            const Shift s{v, c};
            const RuleOutcome after = rule(shift_forward(e, s), k);
            if (!after.contains(w)) return fail(w, s, after);
          }
    }
    AxiomVerdict v = holds(probes == 0 ? "premise false" : "");
    v.instances = probes;
    return v;
  });
}

}  // namespace

AxiomVerdict check_candidate_monotonicity(RuleEvaluator& rule, const Election& e, int k) {
  return check_monotonicity(rule, e, k, false);
}

AxiomVerdict check_noncrossing_monotonicity(RuleEvaluator& rule, const Election& e, int k) {
  return check_monotonicity(rule, e, k, true);
}

AxiomVerdict check_consistency(RuleEvaluator& rule, const Election& e1, const Election& e2, int k) {
  check_k(e1, k);
  if (!(e1.roster() == e2.roster())) throw DomainError("consistency needs identical candidate rosters");
  if (!rule.applicable(e1, k) || !rule.applicable(e2, k)) return holds("not applicable");
  return guarded([&]() -> AxiomVerdict {
    const RuleOutcome r1 = rule(e1, k);
    const RuleOutcome r2 = rule(e2, k);
    std::vector<Committee> common;
    std::ranges::set_intersection(r1.committees(), r2.committees(), std::back_inserter(common));
    if (common.empty()) return holds("premise false");
    const Election both = concat(e1, e2);
    const RuleOutcome r12 = rule(both, k);
    const RuleOutcome expected(common);
    if (same_committees(r12, expected)) return holds();
    Witness wit = make_witness(rule, Axiom::Consistency, k, both);
    wit.split = e1.num_voters();
    wit.outcomes = {{"R(E1,k)", r1}, {"R(E2,k)", r2}, {"R(E1+E2,k)", r12}};
    wit.breach = "R(E1+E2,k) differs from R(E1,k) and R(E2,k) intersected, " + format_outcome(expected, e1.roster());
    return violated(std::move(wit));
  });
}

AxiomVerdict check_homogeneity(RuleEvaluator& rule, const Election& e, int k, int t_lo, int t_hi) {
  check_k(e, k);
  if (t_lo < 2 || t_hi < t_lo) throw DomainError("homogeneity needs 2 <= t_lo <= t_hi");
  if (!rule.applicable(e, k)) return holds("not applicable");
  return guarded([&]() -> AxiomVerdict {
    const RuleOutcome base = rule(e, k);
    for (int t = t_lo; t <= t_hi; ++t) {
      const RuleOutcome scaled = rule(replicate(e, t), k);
      if (same_committees(base, scaled)) continue;
      Witness wit = make_witness(rule, Axiom::Homogeneity, k, e);
      wit.t = t;
      wit.outcomes = {{"R(E,k)", base}, {"R(tE,k)", scaled}};
      wit.breach = "R(tE,k) differs from R(E,k) for t=" + std::to_string(t);
      return violated(std::move(wit));
    }
    return holds();
  });
}

AxiomVerdict check_axiom(Axiom axiom, RuleEvaluator& rule, const Election& e, const CheckParams& p) {
  switch (axiom) {
    case Axiom::CommitteeMonotonicity: return check_committee_monotonicity(rule, e, p.k, p.k_hi.value_or(p.k));
    case Axiom::SolidCoalitions: return check_solid_coalitions(rule, e, p.k);
    case Axiom::ConsensusCommittee: return check_consensus_committee(rule, e, p.k);
    case Axiom::WeakUnanimity: return check_unanimity(rule, e, p.k, false);
    case Axiom::StrongUnanimity: return check_unanimity(rule, e, p.k, true);
    case Axiom::FixedMajority: return check_fixed_majority(rule, e, p.k);
    case Axiom::CandidateMonotonicity: return check_candidate_monotonicity(rule, e, p.k);
    case Axiom::NonCrossingMonotonicity: return check_noncrossing_monotonicity(rule, e, p.k);
    case Axiom::Homogeneity: return check_homogeneity(rule, e, p.k, p.t_lo, p.t_hi);
    case Axiom::Consistency:
      if (!p.second) throw DomainError("consistency needs a second election");
      return check_consistency(rule, e, *p.second, p.k);
    case Axiom::Nonimposition: break;
  }
  throw DomainError("nonimposition is checked by search, not per instance");
}

namespace {

Election first_votes(const Election& e, int from, int to) {
  const int m = e.num_candidates();
  const auto flat = e.flat_rankings();
  return Election(e.shared_roster(), std::vector<CandidateId>(flat.begin() + from * m, flat.begin() + to * m));
}

}  // namespace

bool replay_witness(const Witness& w) {
  RuleEvaluator rule(w.rule, RuleOptions{w.tie_mode, kDefaultUniverseCap});
  AxiomVerdict v;
  if (w.axiom == Axiom::Consistency) {
    if (w.split < 1 || w.split >= w.election.num_voters()) return false;
    const Election e1 = first_votes(w.election, 0, w.split);
    const Election e2 = first_votes(w.election, w.split, w.election.num_voters());
    v = check_consistency(rule, e1, e2, w.k);
  } else if (w.axiom == Axiom::Nonimposition) {
    return false;
  } else {
    CheckParams p;
    p.k = w.k;
    p.t_lo = p.t_hi = std::max(w.t, 2);
    v = check_axiom(w.axiom, rule, w.election, p);
  }
  if (!v.violated()) return false;
  const Witness& again = *v.witness;
  if (again.outcomes.size() != w.outcomes.size()) return false;
  for (std::size_t i = 0; i < w.outcomes.size(); ++i)
    if (again.outcomes[i].first != w.outcomes[i].first ||
        !same_committees(again.outcomes[i].second, w.outcomes[i].second))
      return false;
  return !w.shift || again.shift == w.shift;
}

std::string format_outcome(const RuleOutcome& outcome, const Roster& roster) {
  std::string out;
  for (const Committee& w : outcome.committees()) {
    if (!out.empty()) out += ' ';
    out += format_committee(w, roster);
  }
  return out;
}

std::string format_witness(const Witness& w) {
  const Roster& roster = w.election.roster();
  std::ostringstream head;
  head << "rule: " << rule_name(w.rule) << '\n';
  head << "axiom: " << axiom_name(w.axiom) << '\n';
  head << "tie-breaking: "
       << (w.tie_mode == TieMode::ParallelUniverses ? "parallel-universes" : "lexicographic") << '\n';
  head << "k: " << w.k << '\n';
  if (w.split > 0) head << "split: " << w.split << '\n';
  if (w.t > 0) head << "t: " << w.t << '\n';
  if (w.shift) head << "shift: voter " << w.shift->voter + 1 << " candidate " << roster.label(w.shift->candidate) << '\n';
  if (w.committee) head << "committee: " << format_committee(*w.committee, roster) << '\n';
  if (w.candidate) head << "candidate: " << roster.label(*w.candidate) << '\n';
  for (const auto& [label, outcome] : w.outcomes) head << "outcome " << label << ": " << format_outcome(outcome, roster) << '\n';
  head << "breach: " << w.breach << '\n';
  std::string out;
  std::istringstream lines(head.str());
  for (std::string line; std::getline(lines, line);) out += "# " + line + '\n';
  return out + serialize_election(w.election);
}

void write_witness_file(const std::filesystem::path& path, const Witness& w) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot write " + path.string());
  out << format_witness(w);
}

namespace {

Committee parse_committee(std::string_view text, const Roster& roster) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw ParseError(0, "malformed committee");
  text = text.substr(1, text.size() - 2);
  std::vector<CandidateId> ids;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    ids.push_back(roster.id_of(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Committee(ids);
}

}  // namespace

Witness read_witness_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  Witness w{RuleId::Sntv, Axiom::Nonimposition, TieMode::ParallelUniverses, 0, parse_election(text), 0, 0,
            {}, {}, {}, {}, {}};
  const Roster& roster = w.election.roster();
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("# ", 0) != 0) continue;
    const std::string body = line.substr(2);
    const std::size_t colon = body.find(": ");
    if (colon == std::string::npos) continue;
    const std::string key = body.substr(0, colon);
    const std::string value = body.substr(colon + 2);
    if (key == "rule") {
      w.rule = parse_rule(value).value_or(RuleId::Sntv);
    } else if (key == "axiom") {
      w.axiom = parse_axiom(value).value_or(Axiom::Nonimposition);
    } else if (key == "tie-breaking") {
      w.tie_mode = value == "lexicographic" ? TieMode::Lexicographic : TieMode::ParallelUniverses;
    } else if (key == "k") {
      w.k = std::stoi(value);
    } else if (key == "split") {
      w.split = std::stoi(value);
    } else if (key == "t") {
      w.t = std::stoi(value);
    } else if (key == "shift") {
      std::istringstream s(value);
      std::string voter_word, candidate_word, label;
      int voter = 0;
      s >> voter_word >> voter >> candidate_word >> label;
      w.shift = Shift{voter - 1, roster.id_of(label)};
    } else if (key == "committee") {
      w.committee = parse_committee(value, roster);
    } else if (key == "candidate") {
      w.candidate = roster.id_of(value);
    } else if (key.rfind("outcome ", 0) == 0) {
      std::vector<Committee> cs;
      std::istringstream s(value);
      std::string tok;
      while (s >> tok) cs.push_back(parse_committee(tok, roster));
      w.outcomes.emplace_back(key.substr(8), RuleOutcome(std::move(cs)));
    } else if (key == "breach") {
      w.breach = value;
    }
  }
  return w;
}

}  // namespace mwvote
