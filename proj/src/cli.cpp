#include "mwvote/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <string>

#include "mwvote/election_io.hpp"
#include "mwvote/greedy_rules.hpp"
#include "mwvote/search.hpp"
#include "mwvote/table.hpp"

namespace mwvote::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "mwvote/1";

struct Options {
  std::string rule;
  std::string axiom;
  int k = 0;
  std::optional<int> k_hi;
  int t = 2;
  std::string input;
  std::string input2;
  std::string tie_breaking = "parallel-universes";
  std::size_t universe_cap = kDefaultUniverseCap;
  std::string format = "plain";
  std::string witness_out;
  int candidates = 0;
  SearchBounds bounds;
  std::string mode = "exhaustive";
  std::string only_rule;
  std::string only_cell;
  std::string profiles = MWVOTE_PROFILES_DIR;
  std::string witness_dir = "witnesses";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RuleId need_rule(const std::string& name) {
  if (const auto r = parse_rule(name)) return *r;
  throw UsageError("unknown rule '" + name + "'");
}

Axiom need_axiom(const std::string& name) {
  if (const auto a = parse_axiom(name)) return *a;
  throw UsageError("unknown axiom '" + name + "'");
}

RuleOptions rule_options(const Options& o) {
  RuleOptions r;
  r.tie_mode = o.tie_breaking == "lexicographic" ? TieMode::Lexicographic : TieMode::ParallelUniverses;
  r.universe_cap = o.universe_cap;
  return r;
}

Election load(const std::string& path) {
  try {
    return read_election_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + std::string(e.what()));
  }
}

void check_k(const Election& e, int k) {
  if (k < 1 || k > e.num_candidates())
    throw UsageError("-k must lie in [1, " + std::to_string(e.num_candidates()) + "]");
}

ordered_json record(const std::string& verb, const Options& o) {
  ordered_json j;
  j["schema"] = kSchema;
  j["verb"] = verb;
  if (!o.rule.empty()) j["rule"] = o.rule;
  if (o.k > 0) j["k"] = o.k;
  return j;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--tie-breaking", o.tie_breaking, "Tie handling")
      ->check(CLI::IsMember({"parallel-universes", "lexicographic"}));
  cmd->add_option("--universe-cap", o.universe_cap, "Maximum tie-breaking branches")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "structured"}));
}

void add_bounds(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-candidates", o.bounds.max_candidates)->check(CLI::Range(1, 8));
  cmd->add_option("--max-voters", o.bounds.max_voters)->check(CLI::PositiveNumber);
  cmd->add_option("--max-k", o.bounds.max_k)->check(CLI::PositiveNumber);
  cmd->add_option("--max-t", o.bounds.max_t)->check(CLI::Range(2, 16));
  cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  cmd->add_option("--seed", o.bounds.seed);
  cmd->add_option("--budget", o.bounds.budget, "Random mode: instances to sample");
}

int verdict_exit(const AxiomVerdict& v) {
  switch (v.status) {
    case VerdictStatus::Holds: return kExitOk;
    case VerdictStatus::Violated: return kExitViolated;
    case VerdictStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int print_verdict(const std::string& verb, const Options& o, const AxiomVerdict& v, std::ostream& out) {
  std::string path;
  if (v.witness && !o.witness_out.empty()) {
    write_witness_file(o.witness_out, *v.witness);
    path = o.witness_out;
  }
  if (o.format == "structured") {
    ordered_json j = record(verb, o);
    j["axiom"] = o.axiom;
    j["verdict"] = status_name(v.status);
    j["note"] = v.note;
    j["instances"] = v.instances;
    if (v.witness) {
      j["witness"] = format_witness(*v.witness);
      j["witness-path"] = path.empty() ? ordered_json(nullptr) : ordered_json(path);
    }
    out << j.dump() << '\n';
  } else {
    out << status_name(v.status) << '\n';
    if (!v.note.empty()) out << v.note << '\n';
    if (v.witness) out << format_witness(*v.witness);
    if (!path.empty()) out << "witness written to " << path << '\n';
  }
  return verdict_exit(v);
}

int run_elect(const Options& o, std::ostream& out) {
  const RuleId rule = need_rule(o.rule);
  const Election e = load(o.input);
  check_k(e, o.k);
  if (!rule_applicable(rule, e.num_candidates(), e.num_voters(), o.k))
    throw UsageError(o.rule + " needs k <= n");
  const RuleOutcome r = elect(rule, e, o.k, rule_options(o));
  if (o.format == "structured") {
    for (const Committee& w : r.committees()) {
      ordered_json j = record("elect", o);
      j["committee"] = format_committee(w, e.roster());
      j["value"] = r.value() ? ordered_json(*r.value()) : ordered_json(nullptr);
      out << j.dump() << '\n';
    }
  } else {
    for (const Committee& w : r.committees()) out << format_committee(w, e.roster()) << '\n';
    if (r.value()) out << "value: " << *r.value() << '\n';
  }
  return kExitOk;
}

int run_check(const Options& o, std::ostream& out) {
  const RuleId rule = need_rule(o.rule);
  const Axiom axiom = need_axiom(o.axiom);
  if (axiom == Axiom::Nonimposition) {
    if (o.candidates < 1) throw UsageError("nonimposition needs --candidates");
    if (o.k < 1 || o.k > o.candidates) throw UsageError("-k must lie in [1, --candidates]");
    return print_verdict("check", o, check_nonimposition(rule, o.candidates, o.k, o.bounds, rule_options(o)), out);
  }
  if (o.input.empty()) throw UsageError("--input is required");
  const Election e = load(o.input);
  check_k(e, o.k);
  std::optional<Election> second;
  CheckParams params;
  params.k = o.k;
  params.k_hi = o.k_hi;
  params.t_lo = params.t_hi = o.t;
  if (axiom == Axiom::Consistency) {
    if (o.input2.empty()) throw UsageError("consistency needs --input2");
    second = load(o.input2);
    params.second = &*second;
  }
  if (axiom == Axiom::CommitteeMonotonicity && o.k + 1 > e.num_candidates() && !o.k_hi)
    throw UsageError("committee monotonicity needs k < m");
  RuleEvaluator eval(rule, rule_options(o));
  try {
    return print_verdict("check", o, check_axiom(axiom, eval, e, params), out);
  } catch (const DomainError& ex) {
    throw UsageError(ex.what());
  }
}

int run_search(Options o, std::ostream& out) {
  const RuleId rule = need_rule(o.rule);
  const Axiom axiom = need_axiom(o.axiom);
  o.bounds.mode = o.mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
  if (axiom != Axiom::Nonimposition)
    return print_verdict("search", o, search_counterexample(rule, axiom, o.bounds, rule_options(o)), out);
  AxiomVerdict all;
  all.note = "every committee is the unique winner of some profile";
  for (int m = 1; m <= o.bounds.max_candidates; ++m) {
    for (int k = 1; k <= std::min(m, o.bounds.max_k); ++k) {
      const AxiomVerdict v = check_nonimposition(rule, m, k, o.bounds, rule_options(o));
      all.instances += v.instances;
      if (!v.holds()) {
        all.status = VerdictStatus::Inconclusive;
        all.note = "m=" + std::to_string(m) + ", k=" + std::to_string(k) + ": " + v.note;
        return print_verdict("search", o, all, out);
      }
    }
  }
  return print_verdict("search", o, all, out);
}

int run_table(const Options& o, const CLI::App& cmd, std::ostream& out) {
  TableOptions t;
  if (cmd.count("--max-candidates")) t.bounds.max_candidates = o.bounds.max_candidates;
  if (cmd.count("--max-voters")) t.bounds.max_voters = o.bounds.max_voters;
  if (cmd.count("--max-k")) t.bounds.max_k = o.bounds.max_k;
  if (cmd.count("--max-t")) t.bounds.max_t = o.bounds.max_t;
  if (cmd.count("--seed")) t.random.seed = o.bounds.seed;
  if (cmd.count("--budget")) t.random.budget = o.bounds.budget;
  if (!o.only_rule.empty()) t.only_rule = need_rule(o.only_rule);
  if (!o.only_cell.empty()) {
    const auto colon = o.only_cell.find(':');
    if (colon == std::string::npos) throw UsageError("--only-cell expects rule:column");
    t.only_rule = need_rule(o.only_cell.substr(0, colon));
    t.only_column = parse_column(o.only_cell.substr(colon + 1));
    if (!t.only_column) throw UsageError("unknown column '" + o.only_cell.substr(colon + 1) + "'");
  }
  t.profiles_dir = o.profiles;
  if (!o.witness_dir.empty()) t.witness_dir = o.witness_dir;
  t.rule_options = rule_options(o);
  const TableReport report = verify_table(t);
  if (o.format == "structured") {
    for (const CellReport& c : report.cells) {
      ordered_json j;
      j["schema"] = kSchema;
      j["verb"] = "table";
      j["rule"] = rule_name(c.rule);
      j["column"] = column_name(c.column);
      j["expected"] = c.expected;
      j["verdict"] = cell_result_name(c.result);
      if (!c.skip_reason.empty()) j["reason"] = c.skip_reason;
      ordered_json checks = ordered_json::array();
      for (const CellCheck& ch : c.checks) {
        ordered_json cj;
        cj["axiom"] = axiom_name(ch.axiom);
        cj["expect"] = ch.expect_holds ? "holds" : "fails";
        cj["verdict"] = cell_result_name(ch.result);
        cj["detail"] = ch.detail;
        cj["witness-path"] = ch.witness_path.empty() ? ordered_json(nullptr) : ordered_json(ch.witness_path);
        checks.push_back(std::move(cj));
      }
      j["checks"] = std::move(checks);
      out << j.dump() << '\n';
    }
  } else {
    out << format_table(report);
  }
  return report.all_match() ? kExitOk : kExitViolated;
}

int run_trace(const Options& o, std::ostream& out) {
  const RuleId rule = need_rule(o.rule);
  if (rule != RuleId::GreedyCc && rule != RuleId::GreedyMonroe)
    throw UsageError("trace supports greedy-cc and greedy-monroe");
  const Election e = load(o.input);
  check_k(e, o.k);
  if (!rule_applicable(rule, e.num_candidates(), e.num_voters(), o.k)) throw UsageError(o.rule + " needs k <= n");
  GreedyConfig cfg;
  cfg.tie_mode = rule_options(o).tie_mode;
  cfg.universe_cap = o.universe_cap;
  const GreedyResult r = rule == RuleId::GreedyCc ? greedy_cc(e, o.k, cfg) : greedy_monroe(e, o.k, cfg);
  const Roster& roster = e.roster();
  auto voters = [](const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : ",") + std::to_string(v + 1);
    return s;
  };
  for (std::size_t i = 0; i < r.traces.size(); ++i) {
    const GreedyTrace& tr = r.traces[i];
    if (o.format == "structured") {
      ordered_json j = record("trace", o);
      j["run"] = i + 1;
      j["committee"] = format_committee(tr.committee, roster);
      j["value"] = tr.value;
      ordered_json steps = ordered_json::array();
      for (const GreedyStep& s : tr.steps) {
        ordered_json sj;
        sj["candidate"] = roster.label(s.candidate);
        sj["committee"] = format_committee(s.committee, roster);
        if (rule == RuleId::GreedyMonroe) {
          sj["group-size"] = s.group_size;
          sj["group"] = s.group;
        }
        steps.push_back(std::move(sj));
      }
      j["steps"] = std::move(steps);
      out << j.dump() << '\n';
      continue;
    }
    out << "run " << i + 1 << ": " << format_committee(tr.committee, roster) << " value " << tr.value << '\n';
    for (std::size_t s = 0; s < tr.steps.size(); ++s) {
      const GreedyStep& st = tr.steps[s];
      out << "  step " << s + 1 << ": add " << roster.label(st.candidate) << " -> "
          << format_committee(st.committee, roster);
      if (rule == RuleId::GreedyMonroe)
        out << ", n_i = " << st.group_size << ", voters " << voters(st.group);
      out << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multiwinner election rules and their axiomatic properties", "mwvote"};
  app.require_subcommand(1);

  auto* elect_cmd = app.add_subcommand("elect", "Compute the winning committees of a rule");
  elect_cmd->add_option("--rule", o.rule)->required();
  elect_cmd->add_option("-k", o.k)->required();
  elect_cmd->add_option("--input", o.input)->required();
  add_common(elect_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Check one axiom on one election");
  check_cmd->add_option("--rule", o.rule)->required();
  check_cmd->add_option("--axiom", o.axiom)->required();
  check_cmd->add_option("-k", o.k)->required();
  check_cmd->add_option("--k-hi", o.k_hi, "Committee monotonicity: last committee size compared");
  check_cmd->add_option("--input", o.input);
  check_cmd->add_option("--input2", o.input2, "Consistency: second election");
  check_cmd->add_option("--t", o.t, "Homogeneity: replication factor")->check(CLI::Range(2, 64));
  check_cmd->add_option("--candidates", o.candidates, "Nonimposition: number of candidates");
  check_cmd->add_option("--witness-out", o.witness_out);
  add_common(check_cmd, o);
  add_bounds(check_cmd, o);

  auto* search_cmd = app.add_subcommand("search", "Search bounded profiles for a counterexample");
  search_cmd->add_option("--rule", o.rule)->required();
  search_cmd->add_option("--axiom", o.axiom)->required();
  search_cmd->add_option("--witness-out", o.witness_out);
  add_common(search_cmd, o);
  add_bounds(search_cmd, o);

  auto* table_cmd = app.add_subcommand("table", "Verify the rule-by-property matrix");
  table_cmd->add_option("--only-rule", o.only_rule);
  table_cmd->add_option("--only-cell", o.only_cell, "rule:column");
  table_cmd->add_option("--profiles", o.profiles, "Directory of shipped witness profiles");
  table_cmd->add_option("--witness-dir", o.witness_dir, "Where searched witnesses are written");
  add_common(table_cmd, o);
  add_bounds(table_cmd, o);

  auto* trace_cmd = app.add_subcommand("trace", "Print the greedy runs step by step");
  trace_cmd->add_option("--rule", o.rule)->required();
  trace_cmd->add_option("-k", o.k)->required();
  trace_cmd->add_option("--input", o.input)->required();
  add_common(trace_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*elect_cmd) return run_elect(o, out);
    if (*check_cmd) return run_check(o, out);
    if (*search_cmd) return run_search(o, out);
    if (*table_cmd) return run_table(o, *table_cmd, out);
    if (*trace_cmd) return run_trace(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mwvote::cli
