#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwvote/search.hpp"

namespace mwvote {

enum class TableColumn {
  CommitteeMonotonicity,
  SolidCoalitions,
  ConsensusCommittee,
  Unanimity,
  Monotonicity,
  Homogeneity,
  Consistency,
};

std::span<const TableColumn> all_columns();
std::string_view column_name(TableColumn column);
std::optional<TableColumn> parse_column(std::string_view name);

enum class CellResult { Pass, Fail, Skip };
std::string_view cell_result_name(CellResult result);

/// One axiom claim inside a cell: either no violation over the bounded
/// universe (under an optional guard), or a concrete counterexample.
struct CellCheck {
  Axiom axiom;
  bool expect_holds;
  std::string summary;
  CellResult result = CellResult::Pass;
  std::string detail;
  std::string witness_path;
};

struct CellReport {
  RuleId rule;
  TableColumn column;
  /// Published entry, e.g. "yes", "no", "strong", "C/NC", "yes (k|n)".
  std::string expected;
  CellResult result = CellResult::Pass;
  std::vector<CellCheck> checks;
  std::string skip_reason;
};

struct TableOptions {
  /// Universe for sweeps and the first round of counterexample search.
  SearchBounds bounds{4, 5, 4, 3, SearchMode::Exhaustive, 1, 0};
  /// Fallback searches for counterexamples missing from the small universe.
  SearchBounds extended{3, 9, 3, 3, SearchMode::Exhaustive, 1, 0};
  SearchBounds random{5, 12, 3, 3, SearchMode::Random, 20260101, 20000};
  std::optional<RuleId> only_rule;
  std::optional<TableColumn> only_column;
  std::filesystem::path profiles_dir = MWVOTE_PROFILES_DIR;
  /// Searched counterexamples are written here when set.
  std::optional<std::filesystem::path> witness_dir;
  RuleOptions rule_options;
};

struct TableReport {
  std::vector<CellReport> cells;

  bool all_match() const;
};

TableReport verify_table(const TableOptions& options);

/// Matrix view followed by one line per check.
std::string format_table(const TableReport& report);

}  // namespace mwvote
