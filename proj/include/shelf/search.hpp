#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shelf/op_table.hpp"

namespace shelf {

/// Invertible self-distributive operations (racks) on {0, ..., n-1}.
struct RackCatalog {
  std::size_t n = 0;
  /// Every rack, sorted by entries.
  std::vector<OpTable> racks;
  /// The lexicographically least member of each relabeling orbit, sorted.
  std::vector<OpTable> canonical;
  /// Backtracking nodes visited (pruned mode) or tables examined.
  std::uint64_t nodes = 0;
  /// Partial assignments rejected by propagation.
  std::uint64_t pruned = 0;
};

inline constexpr std::size_t kPrunedBound = 6;
inline constexpr std::size_t kUnprunedBound = 4;

/// Pruned mode backtracks over the columns sigma_y, forcing
/// sigma_{sigma_z(y)} = sigma_z sigma_y sigma_z^-1 as soon as both sides are
/// known. Unpruned mode filters all (n!)^n invertible tables. Throws
/// std::domain_error above the bound for the chosen mode.
RackCatalog enumerate_racks(std::size_t n, bool use_pruning);

/// Predicate used by both enumeration modes' callers and the tests.
bool is_rack(const OpTable &op);

/// adjacency[i] lists j != i such that racks[i] and racks[j] are
/// distributive in both orders; sorted ascending.
using CompatibilityGraph = std::vector<std::vector<std::size_t>>;

CompatibilityGraph compatibility_graph(const RackCatalog &catalog);

/// Both ordered distributivity checks pass.
bool compatible(const OpTable &a, const OpTable &b);

inline constexpr std::size_t kCanonicalBound = 8;

/// Least relabeling of `op` over all n! bijections.
OpTable canonical_form(const OpTable &op);

/// Least relabeling of a family under simultaneous relabeling, taking the
/// family as a set (members sorted after relabeling).
std::vector<OpTable> canonical_form(std::span<const OpTable> ops);

enum class Conclusion { commutative_only, nonabelian_found, partial };

std::string to_string(Conclusion c);

struct NonabelianGroup {
  OpTable first;
  OpTable second;
  std::size_t order;
};

struct SearchOptions {
  bool prune = true;
  double budget_seconds = std::numeric_limits<double>::infinity();
  std::size_t closure_budget = 10'000;
  /// Checked before any enumeration.
  std::vector<std::pair<OpTable, OpTable>> seed_pairs;
  /// When a seed pair already settles existence the sweep is skipped
  /// unless this is set.
  bool exhaustive = false;
  /// Non-abelian examples kept in the report; the count is always exact.
  std::size_t max_examples = 16;
  unsigned jobs = 1;
};

struct SearchReport {
  std::size_t n = 0;
  bool catalog_built = false;
  std::size_t racks_found = 0;
  std::size_t rack_classes = 0;
  /// Pairs (orbit representative, rack) that are mutually distributive.
  std::uint64_t compatible_pairs = 0;
  std::uint64_t noncommuting_pairs = 0;
  std::vector<NonabelianGroup> nonabelian_groups;
  Conclusion conclusion = Conclusion::partial;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t pairs_checked = 0;
  double wall_seconds = 0;
};

/// Searches for a pair of mutually distributive racks that do not commute.
/// Such a pair generates a non-abelian distributive group, and every
/// non-abelian distributive subgroup of Bin_inv(X) contains one, so the
/// pair sweep is complete. Commuting pairs generate abelian groups and need
/// no closure. The first member ranges over orbit representatives only,
/// since compatibility and commutation are invariant under relabeling.
SearchReport certify_no_nonabelian(std::size_t n, const SearchOptions &opts = {});

} // namespace shelf
