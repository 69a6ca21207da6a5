#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shelf/op_table.hpp"

namespace shelf::fixtures {

/// Reflection generator of the dihedral subgroup of order 6 in Bin(X), |X| = 6.
OpTable berman_tau();
/// Rotation (order 3) generator of the same subgroup.
OpTable berman_sigma();
/// x * y = x xor y on {0, 1}; not self-distributive.
OpTable xor_table();

struct Fixture {
  std::string name;
  std::string description;
  std::size_t n;
  std::vector<OpTable> ops;
  /// xor ships as a counterexample and is expected to fail validation.
  bool distributive;
};

const std::vector<Fixture> &all();

/// Throws std::invalid_argument for an unknown name.
const Fixture &get(std::string_view name);

/// The set-file rendering shipped under fixtures/<name>.json.
std::string document(const Fixture &f);

/// FNV-1a 64 of `bytes`, as 16 hex digits.
std::string checksum(std::string_view bytes);

/// Re-checks the mathematical claims attached to a fixture; throws
/// std::logic_error when one fails.
void revalidate(const Fixture &f);

} // namespace shelf::fixtures
