#include "mwvote/table.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <sstream>

#include "mwvote/election_io.hpp"

namespace mwvote {
namespace {

constexpr std::array kColumns{TableColumn::CommitteeMonotonicity, TableColumn::SolidCoalitions,
                              TableColumn::ConsensusCommittee,    TableColumn::Unanimity,
                              TableColumn::Monotonicity,          TableColumn::Homogeneity,
                              TableColumn::Consistency};

struct ShippedWitness {
  std::string file;
  int k;
  std::string second_file;
  int t = 2;
};

enum class Guard { None, StvQuota, Divisible };

struct ExpectedCheck {
  Axiom axiom;
  bool holds;
  Guard guard = Guard::None;
  std::vector<ShippedWitness> witnesses;
};

struct CellSpec {
  std::string expected;
  std::vector<ExpectedCheck> checks;
  std::string skip_reason;
};

ExpectedCheck yes(Axiom a, Guard g = Guard::None) { return {a, true, g, {}}; }
ExpectedCheck no(Axiom a, std::vector<ShippedWitness> w = {}) { return {a, false, Guard::None, std::move(w)}; }

const ShippedWitness kCc4{"cc_committee_monotonicity", 1, {}};
const ShippedWitness kNine{"solid_coalitions", 3, {}};
const ShippedWitness kConsensus{"consensus_committee", 2, {}};
const ShippedWitness kNoncrossing{"noncrossing_monotonicity", 2, {}};
const ShippedWitness kLminNoncrossing{"lmin_noncrossing_monotonicity", 2, {}};
const ShippedWitness kMonroeCandidate{"monroe_candidate_monotonicity", 2, {}};
const ShippedWitness kMonroeHomogeneity{"monroe_homogeneity", 2, {}, 2};

CellSpec spec(RuleId rule, TableColumn column) {
  using A = Axiom;
  const CellSpec weak{"weak", {yes(A::WeakUnanimity), no(A::StrongUnanimity)}, {}};
  const CellSpec strong{"strong", {yes(A::StrongUnanimity), no(A::FixedMajority)}, {}};
  const CellSpec both_mono{"C/NC", {yes(A::CandidateMonotonicity), yes(A::NonCrossingMonotonicity)}, {}};
  auto plain = [](bool holds, Axiom a, std::vector<ShippedWitness> w = {}) {
    return holds ? CellSpec{"yes", {yes(a)}, {}} : CellSpec{"no", {no(a, std::move(w))}, {}};
  };
  auto mono_no = [](std::vector<ShippedWitness> c, std::vector<ShippedWitness> nc) {
    return CellSpec{"no", {no(Axiom::CandidateMonotonicity, std::move(c)), no(Axiom::NonCrossingMonotonicity, std::move(nc))}, {}};
  };
  auto cand_only = [](std::vector<ShippedWitness> nc) {
    return CellSpec{"C", {yes(Axiom::CandidateMonotonicity), no(Axiom::NonCrossingMonotonicity, std::move(nc))}, {}};
  };
  const CellSpec monroe_homogeneity{"yes (k|n)", {yes(A::Homogeneity, Guard::Divisible), no(A::Homogeneity, {kMonroeHomogeneity})}, {}};

  switch (column) {
    case TableColumn::CommitteeMonotonicity:
      switch (rule) {
        case RuleId::Stv: return plain(false, A::CommitteeMonotonicity, {{"stv_committee_monotonicity", 1, {}}});
        case RuleId::Bloc: return plain(false, A::CommitteeMonotonicity, {{"bloc_committee_monotonicity", 1, {}}});
        case RuleId::Sntv:
        case RuleId::KBorda:
        case RuleId::GreedyCc: return plain(true, A::CommitteeMonotonicity);
        default: return plain(false, A::CommitteeMonotonicity, {kCc4});
      }
    case TableColumn::SolidCoalitions:
      switch (rule) {
        case RuleId::Stv: return {"yes (n>=k(k+1))", {yes(A::SolidCoalitions, Guard::StvQuota)}, {}};
        case RuleId::Sntv:
        case RuleId::GreedyMonroe: return plain(true, A::SolidCoalitions);
        case RuleId::L1Cc:
        case RuleId::LminCc:
        case RuleId::L1Monroe:
        case RuleId::LminMonroe: return plain(false, A::SolidCoalitions, {kNine});
        default: return plain(false, A::SolidCoalitions);
      }
    case TableColumn::ConsensusCommittee:
      switch (rule) {
        case RuleId::Stv: return {"yes (n>=k(k+1))", {yes(A::ConsensusCommittee, Guard::StvQuota)}, {}};
        case RuleId::Bloc:
        case RuleId::KBorda:
        case RuleId::GreedyCc: return plain(false, A::ConsensusCommittee, {kConsensus});
        default: return plain(true, A::ConsensusCommittee);
      }
    case TableColumn::Unanimity:
      switch (rule) {
        case RuleId::Bloc: return {"fixed majority", {yes(A::FixedMajority)}, {}};
        case RuleId::Stv:
          return {"strong (n>=k(k+1))", {yes(A::StrongUnanimity, Guard::StvQuota), no(A::FixedMajority)}, {}};
        case RuleId::Sntv:
        case RuleId::L1Cc:
        case RuleId::LminCc:
        case RuleId::GreedyCc: return weak;
        default: return strong;
      }
    case TableColumn::Monotonicity:
      switch (rule) {
        case RuleId::Sntv:
        case RuleId::Bloc:
        case RuleId::KBorda: return both_mono;
        case RuleId::L1Cc: return cand_only({kNoncrossing});
        case RuleId::LminCc: return cand_only({kLminNoncrossing});
        case RuleId::Stv: return mono_no({}, {});
        case RuleId::GreedyCc: return mono_no({{"greedy_cc_candidate_monotonicity", 2, {}}}, {kNoncrossing});
        case RuleId::L1Monroe: return mono_no({kMonroeCandidate}, {kNoncrossing});
        case RuleId::LminMonroe: return mono_no({kMonroeCandidate}, {kLminNoncrossing});
        case RuleId::GreedyMonroe:
          return mono_no({{"greedy_monroe_candidate_monotonicity", 2, {}}}, {kNoncrossing});
      }
      break;
    case TableColumn::Homogeneity:
      switch (rule) {
        case RuleId::Stv: return {"yes (fractional STV)", {}, "needs fractional votes and an unrounded quota"};
        case RuleId::GreedyMonroe:
          return {"yes (k|n, refined ties)", {}, "needs an unpublished intermediate tie-breaking rule"};
        case RuleId::L1Monroe:
        case RuleId::LminMonroe: return monroe_homogeneity;
        default: return plain(true, A::Homogeneity);
      }
    case TableColumn::Consistency:
      switch (rule) {
        case RuleId::Sntv:
        case RuleId::Bloc:
        case RuleId::KBorda:
        case RuleId::L1Cc: return plain(true, A::Consistency);
        case RuleId::GreedyCc:
          return plain(false, A::Consistency, {{"greedy_cc_consistency_1", 2, "greedy_cc_consistency_2"}});
        case RuleId::L1Monroe:
          return plain(false, A::Consistency, {{"monroe_consistency_1", 2, "monroe_consistency_2"}});
        case RuleId::GreedyMonroe:
          return plain(false, A::Consistency, {{"greedy_monroe_consistency_1", 2, "greedy_monroe_consistency_2"}});
        default: return plain(false, A::Consistency);
      }
  }
  return {};
}

InstanceGuard make_guard(Guard g) {
  switch (g) {
    case Guard::None: return {};
    case Guard::StvQuota: return [](int, int n, int k) { return n >= k * (k + 1); };
    case Guard::Divisible: return [](int, int n, int k) { return n % k == 0; };
  }
  return {};
}

std::string guard_text(Guard g) {
  switch (g) {
    case Guard::None: return "";
    case Guard::StvQuota: return " where n >= k(k+1)";
    case Guard::Divisible: return " where k divides n";
  }
  return "";
}

std::string bounds_text(const SearchBounds& b) {
  std::string s = "m<=" + std::to_string(b.max_candidates) + ", n<=" + std::to_string(b.max_voters);
  if (b.mode == SearchMode::Random) s += ", " + std::to_string(b.budget) + " random draws, seed " + std::to_string(b.seed);
  return s;
}

void run_sweep(RuleEvaluator& eval, const ExpectedCheck& ex, CellCheck& out, const TableOptions& opt,
               RuleId rule) {
  const AxiomVerdict v = search_counterexample(eval, ex.axiom, opt.bounds, make_guard(ex.guard));
  eval.clear();
  if (v.violated()) {
    out.result = CellResult::Fail;
    out.detail = "unexpected violation: " + v.note;
    if (opt.witness_dir) {
      const auto path = *opt.witness_dir / (std::string(rule_name(rule)) + "_" + std::string(axiom_name(ex.axiom)) + ".elect");
      write_witness_file(path, *v.witness);
      out.witness_path = path.string();
    }
    return;
  }
  const bool clean = v.note.find("over budget") == std::string::npos;
  out.result = clean ? CellResult::Pass : CellResult::Fail;
  out.detail = "no violation in " + std::to_string(v.instances) + " instances (" + bounds_text(opt.bounds) + ")";
  if (!clean) out.detail += "; " + v.note;
}

std::optional<AxiomVerdict> replay_shipped(RuleId rule, const ExpectedCheck& ex, const ShippedWitness& w,
                                           const TableOptions& opt, std::string& path) {
  const auto p1 = opt.profiles_dir / (w.file + ".elect");
  if (!std::filesystem::exists(p1)) return std::nullopt;
  RuleEvaluator eval(rule, opt.rule_options);
  const Election e = read_election_file(p1);
  path = p1.string();
  if (w.k < 1 || w.k > e.num_candidates()) return std::nullopt;
  CheckParams params;
  params.k = w.k;
  params.t_lo = params.t_hi = w.t;
  std::optional<Election> second;
  if (!w.second_file.empty()) {
    const auto p2 = opt.profiles_dir / (w.second_file + ".elect");
    if (!std::filesystem::exists(p2)) return std::nullopt;
    second = read_election_file(p2);
    params.second = &*second;
    path += " + " + p2.string();
  }
  return check_axiom(ex.axiom, eval, e, params);
}

void run_counterexample(RuleEvaluator& eval, const ExpectedCheck& ex, CellCheck& out, const TableOptions& opt,
                        RuleId rule) {
  for (const ShippedWitness& w : ex.witnesses) {
    std::string path;
    const auto v = replay_shipped(rule, ex, w, opt, path);
    if (v && v->violated()) {
      out.result = CellResult::Pass;
      out.witness_path = path;
      out.detail = "shipped profile, k=" + std::to_string(w.k) + ": " + v->note;
      return;
    }
  }
  for (const SearchBounds* b : {&opt.bounds, &opt.extended, &opt.random}) {
    if (b->mode == SearchMode::Random && b->budget == 0) continue;
    const AxiomVerdict v = search_counterexample(eval, ex.axiom, *b);
    eval.clear();
    if (!v.violated()) continue;
    out.result = CellResult::Pass;
    out.detail = "found by search (" + bounds_text(*b) + "), k=" + std::to_string(v.witness->k) + ": " + v.note;
    if (opt.witness_dir) {
      const auto path = *opt.witness_dir / (std::string(rule_name(rule)) + "_" + std::string(axiom_name(ex.axiom)) + ".elect");
      write_witness_file(path, *v.witness);
      out.witness_path = path.string();
    } else {
      out.witness_path = "(search)";
    }
    return;
  }
  out.result = CellResult::Fail;
  out.detail = "no counterexample found";
}

}  // namespace

std::span<const TableColumn> all_columns() { return kColumns; }

std::string_view column_name(TableColumn column) {
  switch (column) {
    case TableColumn::CommitteeMonotonicity: return "committee-monotonicity";
    case TableColumn::SolidCoalitions: return "solid-coalitions";
    case TableColumn::ConsensusCommittee: return "consensus-committee";
    case TableColumn::Unanimity: return "unanimity";
    case TableColumn::Monotonicity: return "monotonicity";
    case TableColumn::Homogeneity: return "homogeneity";
    case TableColumn::Consistency: return "consistency";
  }
  return "?";
}

std::optional<TableColumn> parse_column(std::string_view name) {
  for (TableColumn c : kColumns)
    if (column_name(c) == name) return c;
  return std::nullopt;
}

std::string_view cell_result_name(CellResult result) {
  switch (result) {
    case CellResult::Pass: return "pass";
    case CellResult::Fail: return "FAIL";
    case CellResult::Skip: return "skip";
  }
  return "?";
}

bool TableReport::all_match() const {
  return std::ranges::none_of(cells, [](const CellReport& c) { return c.result == CellResult::Fail; });
}

TableReport verify_table(const TableOptions& opt) {
  TableReport report;
  if (opt.witness_dir) std::filesystem::create_directories(*opt.witness_dir);
  for (RuleId rule : all_rules()) {
    if (opt.only_rule && *opt.only_rule != rule) continue;
    RuleEvaluator eval(rule, opt.rule_options, true);
    for (TableColumn column : kColumns) {
      if (opt.only_column && *opt.only_column != column) continue;
      const CellSpec s = spec(rule, column);
      CellReport cell{rule, column, s.expected, CellResult::Pass, {}, s.skip_reason};
      if (!s.skip_reason.empty()) {
        cell.result = CellResult::Skip;
        report.cells.push_back(std::move(cell));
        continue;
      }
      for (const ExpectedCheck& ex : s.checks) {
        CellCheck check{ex.axiom, ex.holds,
                        std::string(axiom_name(ex.axiom)) + (ex.holds ? " holds" : " fails") + guard_text(ex.guard), CellResult::Pass, {}, {}};
        if (ex.holds)
          run_sweep(eval, ex, check, opt, rule);
        else
          run_counterexample(eval, ex, check, opt, rule);
        if (check.result == CellResult::Fail) cell.result = CellResult::Fail;
        cell.checks.push_back(std::move(check));
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::string format_table(const TableReport& report) {
  std::vector<RuleId> rules;
  std::vector<TableColumn> columns;
  std::map<std::pair<RuleId, TableColumn>, const CellReport*> at;
  for (const CellReport& c : report.cells) {
    if (std::ranges::find(rules, c.rule) == rules.end()) rules.push_back(c.rule);
    if (std::ranges::find(columns, c.column) == columns.end()) columns.push_back(c.column);
    at[{c.rule, c.column}] = &c;
  }
  std::ranges::sort(columns);
  std::ostringstream out;
  out << std::left << std::setw(15) << "rule";
  for (TableColumn col : columns) out << std::setw(static_cast<int>(column_name(col).size()) + 2) << column_name(col);
  out << '\n';
  for (RuleId r : rules) {
    out << std::setw(15) << rule_name(r);
    for (TableColumn col : columns) {
      const auto it = at.find({r, col});
      const std::string text = it == at.end() ? "-" : std::string(cell_result_name(it->second->result));
      out << std::setw(static_cast<int>(column_name(col).size()) + 2) << text;
    }
    out << '\n';
  }
  out << '\n';
  for (const CellReport& c : report.cells) {
    out << rule_name(c.rule) << " / " << column_name(c.column) << " [" << c.expected << "]: "
        << cell_result_name(c.result) << '\n';
    if (c.result == CellResult::Skip) out << "  out of scope: " << c.skip_reason << '\n';
    for (const CellCheck& ch : c.checks) {
      out << "  " << cell_result_name(ch.result) << "  " << ch.summary << ": " << ch.detail << '\n';
      if (!ch.witness_path.empty()) out << "        witness: " << ch.witness_path << '\n';
    }
  }
  return out.str();
}

}  // namespace mwvote
