#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mixgeo {

struct TableOptions {
  /// Largest group order tried by Cayley rows.
  int max_order = 24;
  /// Largest order attempted by general-search rows.
  int max_n = 20;
  /// Node budget for each general search; 0 means unlimited.
  std::uint64_t node_budget = 20'000'000;
  int threads = 1;
};

enum class RowStatus { Match, Mismatch, Skipped, Witness };

std::string_view to_string(RowStatus s);

struct TableRow {
  std::vector<std::string> cells;
  RowStatus status = RowStatus::Match;
  std::string note;
};

struct TableReport {
  std::string id;
  std::string title;
  std::vector<std::string> header;
  std::vector<TableRow> rows;
  int matched = 0;
  int mismatched = 0;
  int skipped = 0;
  /// Individual cells compared, and how many agreed.
  int cells_compared = 0;
  int cells_matched = 0;

  bool ok() const { return mismatched == 0; }
};

/// Recomputes table t2..t6 and diffs it against the published values.
TableReport run_table(std::string_view id, const TableOptions& opt = {});

std::string render_table(const TableReport& report, bool csv);

}  // namespace mixgeo
