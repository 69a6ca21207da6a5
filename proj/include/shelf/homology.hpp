#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "shelf/op_table.hpp"
#include "shelf/smith.hpp"

namespace shelf {

/// Identifies the boundary convention in reports.
inline constexpr const char *kBoundaryConvention =
    "multi-term: d_n = sum_t w_t d_n^(t), "
    "d_n^(*)(x0..xn) = sum_i (-1)^i (x0*xi, ..., x(i-1)*xi, x(i+1), ..., xn)";
inline constexpr const char *kBasisOrder = "lexicographic tuples of X^(n+1), x0 most significant";

/// Chain complex data. `ops` is not validated here so that non-distributive
/// inputs can be fed to verify_differential.
struct ChainSpec {
  std::vector<OpTable> ops;
  std::vector<std::int64_t> weights;
  std::size_t max_degree = 3;

  std::size_t carrier_size() const;
};

struct HomologyGroup {
  std::size_t degree;
  std::size_t free_rank;
  /// Invariant factors greater than one.
  std::vector<BigInt> torsion;

  bool operator==(const HomologyGroup &) const = default;
};

struct HomologyOptions {
  std::size_t max_dimension = 50'000;
};

/// dim C_n = |X|^(n+1); throws std::domain_error above `max_dimension`.
std::size_t chain_dimension(std::size_t carrier, std::size_t degree,
                            std::size_t max_dimension = HomologyOptions{}.max_dimension);

/// Matrix of d_n^(op): C_n -> C_(n-1), rows indexed by X^n and columns by
/// X^(n+1), both lexicographic. Requires n >= 1.
IntMatrix one_term_boundary(const OpTable &op, std::size_t degree);

/// Weighted sum of the one-term boundaries. Requires 1 <= degree <= max_degree.
IntMatrix boundary_matrix(const ChainSpec &spec, std::size_t degree);

/// d_n d_(n+1) = 0 for every n < max_degree, and every pair of one-term
/// differentials anticommutes at every such degree.
bool verify_differential(const ChainSpec &spec);

/// H_0 .. H_(max_degree-1). Throws std::domain_error if the differential
/// check fails or a chain group is too large.
std::vector<HomologyGroup> homology_groups(const ChainSpec &spec,
                                           const HomologyOptions &opts = {});

} // namespace shelf
