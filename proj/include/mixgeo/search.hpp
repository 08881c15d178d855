#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixgeo/core.hpp"
#include "mixgeo/groups.hpp"

namespace mixgeo {

enum class DegreeMode { Exact, Minimum };
enum class Verdict { Found, ExhaustedNone, BudgetExceeded };

std::string_view to_string(Verdict v);

struct SearchConfig {
  DegreeMode mode = DegreeMode::Exact;
  /// Extra undirected and directed degree allowed in minimum mode.
  int slack = 1;
  /// Search-tree nodes before giving up; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Depth at which the tree is cut into independent subtrees.
  int partition_depth = 6;
  int threads = 1;
  /// Witnesses to collect; 0 means all.
  std::size_t witness_limit = 1;
  /// Keep one witness per isomorphism class (n <= 12).
  bool iso_filter = false;
};

struct SearchOutcome {
  Verdict verdict = Verdict::ExhaustedNone;
  std::vector<MixedGraph> witnesses;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  /// Set when the verdict came from a shortcut rather than a search.
  std::string note;
};

SearchOutcome search_exact(int r, int z, int k, int n, const SearchConfig& cfg = {});

struct OrderVerdict {
  int order = 0;
  SearchOutcome outcome;
};

struct SmallestGeneralResult {
  /// Least order with a witness, or -1.
  int order = -1;
  SearchOutcome outcome;
  std::vector<OrderVerdict> per_order;
};

SmallestGeneralResult smallest_general(int r, int z, int k, const SearchConfig& cfg, int n_start, int n_end);

struct CayleyOutcome {
  Verdict verdict = Verdict::ExhaustedNone;
  std::vector<ConnectionSet> sets;
  std::uint64_t sets_tested = 0;
};

CayleyOutcome search_cayley_group(const GroupTable& g, int r, int z, int k, std::size_t witness_limit = 1,
                                  bool reduce_inner = true);

struct CayleyOrderVerdict {
  int order = 0;
  int groups = 0;
  std::uint64_t sets_tested = 0;
};

struct SmallestCayleyResult {
  int order = -1;
  std::string group;
  int catalog_index = -1;  ///< 1-based position within its order
  ConnectionSet set;
  std::vector<CayleyOrderVerdict> negatives;
};

/// Scans orders from the Moore bound to max_order. Orders above the
/// embedded catalog use `extra` tables of that order and otherwise raise
/// CatalogIncomplete.
SmallestCayleyResult smallest_cayley(int r, int z, int k, int max_order, const std::vector<GroupTable>& extra = {});

/// Every reduced word of length <= k over S has a distinct value.
bool cayley_words_distinct(const GroupTable& g, const ConnectionSet& s, int k);

/// Canonical form key; equal keys iff isomorphic. Requires n <= 12.
std::vector<std::uint8_t> canonical_key(const MixedGraph& g);

std::vector<MixedGraph> iso_distinct(const std::vector<MixedGraph>& graphs);

}  // namespace mixgeo
