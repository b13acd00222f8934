// Acceptance criteria 1-6. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. argv[1] is the path of the mwvote binary.

#include <boost/rational.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <numeric>
#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "mwvote/assignment.hpp"
#include "mwvote/axioms.hpp"
#include "mwvote/exact_rules.hpp"
#include "mwvote/greedy_rules.hpp"
#include "mwvote/rules.hpp"
#include "mwvote/search.hpp"
#include "mwvote/subsets.hpp"
#include "mwvote/table.hpp"
#include "oracles/brute_force.hpp"
#include "oracles/naive_monroe.hpp"
#include "profiles.hpp"

using namespace mwvote;
using mwvote::testing::com;
using mwvote::testing::outcome;
using mwvote::testing::profile;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Report {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    failures.push_back(what);
  }
};

RuleOutcome run(RuleId rule, const Election& e, int k) { return elect(rule, e, k); }

// Criterion 1 -----------------------------------------------------------------

Report witness_regression() {
  Report r;
  int items = 0;
  auto item = [&](const std::string& name, const std::function<void()>& body) {
    const auto t0 = Clock::now();
    try {
      body();
    } catch (const std::exception& ex) {
      r.expect(false, name + ": threw " + ex.what());
    }
    const double s = seconds_since(t0);
    r.expect(s < 1.0, name + ": took " + std::to_string(s) + " s");
    ++items;
  };
  const std::array cc_variants{RuleId::L1Cc, RuleId::LminCc, RuleId::L1Monroe, RuleId::LminMonroe};

  item("stv 24 voters", [&] {
    const Election e = profile("stv_committee_monotonicity");
    r.expect(run(RuleId::Stv, e, 1) == outcome(e, {"c"}), "stv k=1 is {c}");
    r.expect(run(RuleId::Stv, e, 2) == outcome(e, {"ad"}), "stv k=2 is {a,d}");
  });
  item("bloc 4 voters", [&] {
    const Election e = profile("bloc_committee_monotonicity");
    r.expect(run(RuleId::Bloc, e, 1).is_unique(com(e, "a")), "bloc k=1 is {a}");
    r.expect(run(RuleId::Bloc, e, 2).is_unique(com(e, "bc")), "bloc k=2 is {b,c}");
  });
  item("cc/monroe 4 voters", [&] {
    const Election e = profile("cc_committee_monotonicity");
    for (RuleId rule : cc_variants) {
      r.expect(run(rule, e, 1).is_unique(com(e, "c")), std::string(rule_name(rule)) + " k=1 is {c}");
      r.expect(run(rule, e, 2).is_unique(com(e, "ab")), std::string(rule_name(rule)) + " k=2 is {a,b}");
    }
  });
  item("nine voters", [&] {
    const Election e = profile("solid_coalitions");
    const CandidateId d = e.roster().id_of("d");
    for (RuleId rule : cc_variants)
      r.expect(!run(rule, e, 3).any_contains(d), std::string(rule_name(rule)) + " excludes d");
    r.expect(run(RuleId::L1Cc, e, 3).value() == 51, "l1-cc value 51");
    r.expect(run(RuleId::L1Monroe, e, 3).value() == 51, "l1-monroe value 51");
    const RuleOutcome gm = run(RuleId::GreedyMonroe, e, 3);
    for (const Committee& w : gm.committees()) r.expect(w.contains(d), "greedy-monroe includes d");
  });
  item("consensus profile", [&] {
    const Election e = profile("consensus_committee");
    const CandidateId c = e.roster().id_of("c");
    for (RuleId rule : {RuleId::Bloc, RuleId::KBorda, RuleId::GreedyCc}) {
      const RuleOutcome got = run(rule, e, 2);
      for (const Committee& w : got.committees()) r.expect(w.contains(c), std::string(rule_name(rule)) + " includes c");
    }
    for (RuleId rule : {RuleId::L1Cc, RuleId::LminCc, RuleId::L1Monroe, RuleId::LminMonroe, RuleId::GreedyMonroe})
      r.expect(run(rule, e, 2).is_unique(com(e, "ab")), std::string(rule_name(rule)) + " is exactly {a,b}");
  });
  item("l1-cc non-crossing", [&] {
    const Election e = profile("noncrossing_monotonicity");
    const int m = e.num_candidates();
    const RuleOutcome before = run(RuleId::L1Cc, e, 2);
    r.expect(before == RuleOutcome({com(e, "ab"), com(e, "ac"), com(e, "bc")}, Score{6 * m - 11}),
             "three winners at 6m-11");
    const Election after = shift_forward(e, {0, e.roster().id_of("c")});
    const RuleOutcome moved = run(RuleId::L1Cc, after, 2);
    r.expect(!moved.contains(com(e, "ac")), "{a,c} stops winning");
    r.expect(moved.contains(com(e, "bc")) && moved.value() == 6 * m - 10, "{b,c} reaches 6m-10");
  });
  item("lmin-monroe candidate monotonicity", [&] {
    const Election e = profile("monroe_candidate_monotonicity");
    const int m = e.num_candidates();
    r.expect(run(RuleId::LminMonroe, e, 2) == RuleOutcome({com(e, "ab"), com(e, "cd")}, Score{m - 2}),
             "{a,b} and {c,d} at m-2");
    const Election after = shift_forward(e, {3, e.roster().id_of("a")});
    r.expect(run(RuleId::LminMonroe, after, 2) == RuleOutcome({com(e, "cd")}, Score{m - 2}),
             "only {c,d} after the shift");
    const Score ab = monroe_optimal_assignment(after, com(e, "ab"), SatisfactionFunction::borda(m),
                                               Aggregation::Egalitarian)
                         .value;
    r.expect(ab == m - 3, "{a,b} drops to m-3");
  });
  item("greedy-monroe 8 voters", [&] {
    const Election e = profile("greedy_monroe_candidate_monotonicity");
    r.expect(run(RuleId::GreedyMonroe, e, 2) == outcome(e, {"ac", "bd"}), "{a,c} and {b,d}");
  });
  item("greedy-cc 6 voters", [&] {
    const Election e = profile("greedy_cc_candidate_monotonicity");
    r.expect(run(RuleId::GreedyCc, e, 2) == outcome(e, {"ab", "ac"}), "{a,b} and {a,c}");
  });
  item("l1-monroe consistency pair", [&] {
    const Election e1 = profile("monroe_consistency_1");
    const Election e2 = profile("monroe_consistency_2");
    r.expect(run(RuleId::L1Monroe, e1, 2).contains(com(e1, "ac")), "{a,c} wins E1");
    r.expect(run(RuleId::L1Monroe, e2, 2).contains(com(e2, "ac")), "{a,c} wins E2");
    const Election both = concat(e1, e2);
    const auto borda = SatisfactionFunction::borda(both.num_candidates());
    r.expect(monroe_optimal_assignment(both, com(both, "ab"), borda, Aggregation::Utilitarian).value >
                 monroe_optimal_assignment(both, com(both, "ac"), borda, Aggregation::Utilitarian).value,
             "{a,b} beats {a,c} in E1+E2");
    r.expect(!run(RuleId::L1Monroe, both, 2).contains(com(both, "ac")), "{a,c} loses E1+E2");
  });
  item("3-voter homogeneity", [&] {
    const Election e = profile("monroe_homogeneity");
    const Election twice = replicate(e, 2);
    for (RuleId rule : {RuleId::L1Monroe, RuleId::LminMonroe, RuleId::GreedyMonroe}) {
      r.expect(run(rule, e, 2).is_unique(com(e, "ac")), std::string(rule_name(rule)) + " elects only {a,c}");
      r.expect(run(rule, twice, 2).contains(com(e, "ab")), std::string(rule_name(rule)) + " 2E includes {a,b}");
    }
  });
  item("greedy-monroe 6-voter homogeneity", [&] {
    const Election e = profile("greedy_monroe_homogeneity");
    r.expect(run(RuleId::GreedyMonroe, e, 2) == outcome(e, {"ab", "ac"}), "{a,b} and {a,c}");
    r.expect(run(RuleId::GreedyMonroe, replicate(e, 2), 2).contains(com(e, "ad")), "2E includes {a,d}");
  });
  r.summary = std::to_string(items) + " witness groups, each under 1 s";
  return r;
}

// Criterion 2 -----------------------------------------------------------------

Report table_reproduction(const std::filesystem::path& witness_dir) {
  Report r;
  TableOptions opt;
  opt.witness_dir = witness_dir;
  const auto t0 = Clock::now();
  const TableReport report = verify_table(opt);
  const double s = seconds_since(t0);
  int pass = 0, skip = 0;
  for (const CellReport& c : report.cells) {
    const std::string cell = std::string(rule_name(c.rule)) + ":" + std::string(column_name(c.column));
    if (c.result == CellResult::Pass) ++pass;
    if (c.result == CellResult::Fail) r.expect(false, cell + " does not match");
    if (c.result == CellResult::Skip) {
      ++skip;
      r.expect(cell == "stv:homogeneity" || cell == "greedy-monroe:homogeneity", cell + " skipped unexpectedly");
    }
  }
  r.expect(report.cells.size() == 70, "expected 70 cells");
  r.expect(skip == 2, "expected two skipped cells");
  r.expect(s <= 600.0, "took longer than 10 minutes");
  std::ostringstream out;
  out << pass << " cells match, " << skip << " skipped, " << static_cast<int>(s) << " s";
  r.summary = out.str();
  return r;
}

// Criterion 3 -----------------------------------------------------------------

Report approximation_bounds() {
  Report r;
  std::mt19937_64 rng(20260101);
  GreedyConfig put;
  put.tie_mode = TieMode::ParallelUniverses;
  put.record_traces = false;
  const long double cc_bound = 1.0L - 1.0L / std::exp(1.0L);
  int elections = 0, cc_checks = 0, monroe_checks = 0, monroe_skipped = 0;
  while (elections < 600) {
    const int m = static_cast<int>(uniform_int(rng, 2, 7));
    const int n = static_cast<int>(uniform_int(rng, 1, 8));
    const int k = static_cast<int>(uniform_int(rng, 1, static_cast<std::uint64_t>(std::min(3, m))));
    const Election e = impartial_culture(rng, m, n);
    ++elections;

    long long cc_exact = 0;
    for (std::uint64_t s : oracle::subsets(m, k)) cc_exact = std::max(cc_exact, oracle::cc_borda_value(e, s));
    const Score cc_greedy = greedy_cc(e, k, put).min_value;
    ++cc_checks;
    r.expect(static_cast<long double>(cc_greedy) >= cc_bound * static_cast<long double>(cc_exact),
             "greedy-cc below 1-1/e");

    if (k > n) continue;
    boost::rational<long long> bound(1);
    bound -= boost::rational<long long>(k, 2 * m - 1);
    for (int i = 1; i <= k; ++i) bound -= boost::rational<long long>(1, static_cast<long long>(i) * k);
    if (bound < 0) {
      ++monroe_skipped;
      continue;
    }
    long long monroe_exact = 0;
    for (std::uint64_t s : oracle::subsets(m, k))
      monroe_exact = std::max(monroe_exact, *oracle::naive_balanced(oracle::borda_matrix(e, s), n, k, false));
    const Score monroe_greedy = greedy_monroe(e, k, put).min_value;
    ++monroe_checks;
    r.expect(boost::rational<long long>(monroe_greedy) >= bound * monroe_exact, "greedy-monroe below its bound");
  }
  r.summary = std::to_string(elections) + " elections: " + std::to_string(cc_checks) + " CC checks, " +
              std::to_string(monroe_checks) + " Monroe checks (" + std::to_string(monroe_skipped) +
              " with a negative bound skipped)";
  r.expect(cc_checks >= 500, "fewer than 500 CC checks");
  return r;
}

// Criterion 4 -----------------------------------------------------------------

// Every Monroe instance over m <= 5, n <= 6, k <= 3 is a multiset of n rows,
// each row the Borda satisfactions of one voter for the k members. Rows range
// over every injective map from members to positions 1..5, which also covers
// m < 5. Instances are taken up to permuting members.
void monroe_universe(Report& r, std::uint64_t& instances) {
  constexpr int m = 5;
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::vector<long long>> rows;
    std::vector<int> pos(static_cast<std::size_t>(k), 1);
    for_each_subset(m, k, [&](std::span<const int> chosen) {
      std::vector<int> p(chosen.begin(), chosen.end());
      do {
        std::vector<long long> row;
        for (int x : p) row.push_back(m - 1 - x);
        rows.push_back(row);
      } while (std::next_permutation(p.begin(), p.end()));
    });
    std::sort(rows.begin(), rows.end());
    const int R = static_cast<int>(rows.size());
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> image(perms.size(), std::vector<int>(static_cast<std::size_t>(R)));
    for (std::size_t p = 0; p < perms.size(); ++p)
      for (int i = 0; i < R; ++i) {
        std::vector<long long> row(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
          row[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(perms[p][static_cast<std::size_t>(j)])];
        image[p][static_cast<std::size_t>(i)] =
            static_cast<int>(std::lower_bound(rows.begin(), rows.end(), row) - rows.begin());
      }

    for (int n = 1; n <= 6; ++n) {
      std::vector<int> idx(static_cast<std::size_t>(n), 0);
      std::vector<int> mapped(static_cast<std::size_t>(n));
      std::vector<long long> sat_ll(static_cast<std::size_t>(n) * k);
      std::vector<Score> sat(static_cast<std::size_t>(n) * k);
      for (;;) {
        bool canonical = true;
        for (std::size_t p = 1; p < perms.size() && canonical; ++p) {
          for (int v = 0; v < n; ++v) mapped[static_cast<std::size_t>(v)] = image[p][static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])];
          std::sort(mapped.begin(), mapped.end());
          if (mapped < idx) canonical = false;
        }
        if (canonical) {
          for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j) {
              const long long x = rows[static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])][static_cast<std::size_t>(j)];
              sat_ll[static_cast<std::size_t>(v * k + j)] = x;
              sat[static_cast<std::size_t>(v * k + j)] = x;
            }
          const auto naive = oracle::naive_balanced_both(sat_ll, n, k);
          if (k > n) {
            r.expect(!naive, "naive finds an assignment with k > n");
            bool threw = false;
            try {
              solve_balanced_assignment(sat, n, k, Aggregation::Utilitarian);
            } catch (const DomainError&) {
              threw = true;
            }
            r.expect(threw, "flow accepts k > n");
          } else {
            for (const Aggregation mode : {Aggregation::Utilitarian, Aggregation::Egalitarian}) {
              const BalancedSolution sol = solve_balanced_assignment(sat, n, k, mode);
              r.expect(naive.has_value(), "naive finds no assignment");
              if (!naive) return;
              r.expect(sol.value == (mode == Aggregation::Utilitarian ? naive->l1 : naive->lmin),
                       "flow value differs from naive");
              std::vector<int> load(static_cast<std::size_t>(k), 0);
              long long total = 0, worst = sat_ll[static_cast<std::size_t>(sol.column[0])];
              for (int v = 0; v < n; ++v) {
                const int c = sol.column[static_cast<std::size_t>(v)];
                ++load[static_cast<std::size_t>(c)];
                total += sat_ll[static_cast<std::size_t>(v * k + c)];
                worst = std::min(worst, sat_ll[static_cast<std::size_t>(v * k + c)]);
              }
              for (int l : load) r.expect(l >= n / k && l <= (n + k - 1) / k, "flow witness breaks the window");
              r.expect((mode == Aggregation::Utilitarian ? total : worst) == sol.value, "flow witness value differs");
            }
          }
          ++instances;
          if (!r.pass) return;
        }
        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == R - 1) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(i)];
      }
    }
  }
}

// Separable committee scores are sums of candidate scores, so every election
// with the same candidate-score vector has the same argmax. One election per
// reachable score vector covers every election with m <= 5, n <= 6.
void best_k_universe(Report& r, std::uint64_t& instances) {
  for (int m = 1; m <= 5; ++m) {
    const auto orders = lexicographic_orders(m);
    for (const bool borda : {false, true}) {
      std::vector<long long> s(static_cast<std::size_t>(m), 0);
      for (int i = 0; i < m; ++i) s[static_cast<std::size_t>(i)] = borda ? m - 1 - i : (i == 0 ? 1 : 0);
      std::map<std::vector<long long>, std::vector<CandidateId>> layer{{std::vector<long long>(static_cast<std::size_t>(m), 0), {}}};
      for (int n = 1; n <= 6; ++n) {
        std::map<std::vector<long long>, std::vector<CandidateId>> next;
        for (const auto& [scores, flat] : layer)
          for (const auto& order : orders) {
            std::vector<long long> sc = scores;
            for (int p = 0; p < m; ++p) sc[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] += s[static_cast<std::size_t>(p)];
            if (next.count(sc)) continue;
            std::vector<CandidateId> f = flat;
            f.insert(f.end(), order.begin(), order.end());
            next.emplace(std::move(sc), std::move(f));
          }
        layer = std::move(next);
        for (const auto& [scores, flat] : layer) {
          const Election e(Roster::alphabetic(m), flat);
          for (int k = 1; k <= std::min(3, m); ++k) {
            const auto [best, masks] =
                oracle::argmax_committees(m, k, [&](std::uint64_t w) { return oracle::separable_value(e, w, s); });
            const RuleOutcome got = borda ? elect_kborda(e, k) : elect_sntv(e, k);
            std::vector<std::uint64_t> got_masks;
            for (const Committee& w : got.committees()) got_masks.push_back(w.mask());
            std::sort(got_masks.begin(), got_masks.end());
            r.expect(got_masks == masks, std::string(borda ? "k-borda" : "sntv") + " best-k differs from brute force");
            r.expect(got.value() == best, "best-k value differs from brute force");
            ++instances;
          }
        }
      }
    }
  }
}

Report oracle_equivalence() {
  Report r;
  std::uint64_t monroe = 0, bestk = 0;
  auto t0 = Clock::now();
  monroe_universe(r, monroe);
  const int monroe_s = static_cast<int>(seconds_since(t0));
  t0 = Clock::now();
  best_k_universe(r, bestk);
  const int bestk_s = static_cast<int>(seconds_since(t0));
  r.summary = std::to_string(monroe) + " Monroe instances (l1 and lmin) in " + std::to_string(monroe_s) + " s, " +
              std::to_string(bestk) + " best-k instances in " + std::to_string(bestk_s) + " s, zero mismatches";
  if (!r.pass) r.summary = "mismatch found";
  return r;
}

// Criterion 5 -----------------------------------------------------------------

Report property_sweeps() {
  Report r;
  const SearchBounds bounds{4, 5, 4, 3, SearchMode::Exhaustive, 1, 0};
  int sweeps = 0;
  std::uint64_t instances = 0;
  auto sweep = [&](RuleId rule, Axiom axiom, const InstanceGuard& guard = {}) {
    RuleEvaluator eval(rule, {}, true);
    const AxiomVerdict v = search_counterexample(eval, axiom, bounds, guard);
    ++sweeps;
    instances += v.instances;
    r.expect(v.status == VerdictStatus::Inconclusive && v.note.rfind("exhausted", 0) == 0,
             std::string(rule_name(rule)) + " " + std::string(axiom_name(axiom)) + ": " + v.note);
  };
  for (RuleId rule : {RuleId::Sntv, RuleId::Bloc, RuleId::KBorda, RuleId::L1Cc}) {
    sweep(rule, Axiom::CandidateMonotonicity);
    sweep(rule, Axiom::Consistency);
    sweep(rule, Axiom::WeakUnanimity);
  }
  for (RuleId rule : {RuleId::Sntv, RuleId::Bloc, RuleId::KBorda}) sweep(rule, Axiom::NonCrossingMonotonicity);
  for (RuleId rule : {RuleId::Sntv, RuleId::KBorda, RuleId::GreedyCc}) sweep(rule, Axiom::CommitteeMonotonicity);
  for (RuleId rule : {RuleId::L1Monroe, RuleId::LminMonroe})
    sweep(rule, Axiom::Homogeneity, [](int, int n, int k) { return n % k == 0; });
  r.summary = std::to_string(sweeps) + " sweeps over m<=4, n<=5, " + std::to_string(instances) +
              " instances, zero violations";
  return r;
}

// Criterion 6 -----------------------------------------------------------------

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return out + "\n<exit " + std::to_string(status) + ">";
}

Report determinism(const std::string& binary, const std::filesystem::path& scratch) {
  Report r;
  const std::string p = std::string(MWVOTE_PROFILES_DIR) + "/";
  const std::string w = (scratch / "det").string();
  const std::vector<std::string> commands{
      "elect --rule stv -k 2 --input " + p + "stv_committee_monotonicity.elect",
      "elect --rule greedy-monroe -k 2 --input " + p + "greedy_monroe_candidate_monotonicity.elect --format structured",
      "elect --rule lmin-monroe -k 2 --input " + p + "monroe_candidate_monotonicity.elect",
      "check --axiom solid-coalitions --rule l1-cc -k 3 --input " + p + "solid_coalitions.elect",
      "check --axiom consistency --rule greedy-cc -k 2 --input " + p + "greedy_cc_consistency_1.elect --input2 " + p +
          "greedy_cc_consistency_2.elect --format structured",
      "search --axiom consistency --rule lmin-cc --mode random --seed 7 --budget 3000 --max-candidates 4 --max-voters 6",
      "search --axiom committee-monotonicity --rule bloc --max-candidates 3 --max-voters 4",
      "trace --rule greedy-cc -k 2 --input " + p + "greedy_cc_candidate_monotonicity.elect",
      "table --only-cell stv:monotonicity --witness-dir " + w,
      "table --only-rule greedy-cc --witness-dir " + w + " --format structured",
      "elect --rule sntv -k 9 --input " + p + "consensus_committee.elect",
  };
  for (const std::string& c : commands) {
    const std::string first = capture(binary + " " + c);
    for (int rep = 1; rep < 3; ++rep)
      r.expect(capture(binary + " " + c) == first, "output changed between runs: " + c);
  }
  r.summary = std::to_string(commands.size()) + " invocations, 3 runs each, byte-identical";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mwvote_acceptance <path-to-mwvote> [criterion ids]\n";
    return 2;
  }
  const std::filesystem::path scratch = std::filesystem::temp_directory_path() / "mwvote_acceptance";
  std::filesystem::remove_all(scratch);
  std::filesystem::create_directories(scratch);

  struct Criterion {
    int id;
    std::string title;
    std::function<Report()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "witness regression", witness_regression},
      {2, "table reproduction", [&] { return table_reproduction(scratch / "table"); }},
      {3, "approximation bounds", approximation_bounds},
      {4, "oracle equivalence", oracle_equivalence},
      {5, "property sweeps", property_sweeps},
      {6, "determinism", [&] { return determinism(argv[1], scratch); }},
  };
  bool all = true;
  const std::string only = argc > 2 ? argv[2] : "";
  for (const Criterion& c : criteria) {
    if (!only.empty() && only.find(std::to_string(c.id)) == std::string::npos) continue;
    const auto t0 = Clock::now();
    Report rep;
    try {
      rep = c.body();
    } catch (const std::exception& ex) {
      rep.pass = false;
      rep.failures.push_back(std::string("exception: ") + ex.what());
    }
    all = all && rep.pass;
    std::cout << "criterion " << c.id << " " << (rep.pass ? "PASS" : "FAIL") << ": " << c.title << " ("
              << rep.summary << "; " << std::fixed << std::setprecision(1) << seconds_since(t0) << " s)\n";
    for (std::size_t i = 0; i < rep.failures.size() && i < 10; ++i) std::cout << "    " << rep.failures[i] << '\n';
    std::cout.flush();
  }
  std::filesystem::remove_all(scratch);
  return all ? 0 : 1;
}
