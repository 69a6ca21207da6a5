#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace shelf {

/// Index of an element of the carrier {0, ..., n-1}.
using Element = std::uint32_t;

/// A binary operation on {0, ..., n-1} stored as its full n x n table.
/// Row index is the left argument, column index the right one, so that
/// `op(a, b)` is `a * b`.
class OpTable {
public:
  /// Row-major entries; throws std::invalid_argument on a bad size or an
  /// entry outside the carrier.
  OpTable(std::size_t n, std::vector<Element> entries);

  std::size_t size() const { return n_; }

  Element operator()(Element a, Element b) const { return entries_[a * n_ + b]; }

  std::span<const Element> entries() const { return entries_; }
  std::vector<std::vector<Element>> rows() const;

  /// The map x -> x * b.
  std::vector<Element> column(Element b) const;

  bool operator==(const OpTable &) const = default;
  std::strong_ordering operator<=>(const OpTable &) const = default;

private:
  std::size_t n_;
  std::vector<Element> entries_;
};

/// Builds a table from rows; rejects ragged input and entries >= n.
OpTable make_table(std::size_t n, const std::vector<std::vector<Element>> &rows);

/// a * b = a. The identity of the composition monoid.
OpTable right_trivial(std::size_t n);

/// a (op1 op2) b = (a op1 b) op2 b. op1 acts first.
OpTable compose(const OpTable &op1, const OpTable &op2);

bool is_invertible(const OpTable &op);

/// Columnwise inverse permutations. Throws std::domain_error if `op` is
/// not invertible.
OpTable invert(const OpTable &op);

bool is_idempotent(const OpTable &op);

struct Triple {
  Element a;
  Element b;
  Element c;

  bool operator==(const Triple &) const = default;
};

/// Smallest (a, b, c) in lexicographic order with
/// (a A b) B c != (a B c) A (b B c), or nothing if B distributes over A.
std::optional<Triple> distributive_witness(const OpTable &opA, const OpTable &opB);

bool commutes(const OpTable &opA, const OpTable &opB);

/// Violation inside an indexed family: ops[first] and ops[second] fail the
/// distributive law at `triple`.
struct SetWitness {
  std::size_t first;
  std::size_t second;
  Triple triple;

  bool operator==(const SetWitness &) const = default;
};

/// First failing ordered pair (including equal indices) in index order.
std::optional<SetWitness> first_set_violation(std::span<const OpTable> ops);

/// Transports `op` along the bijection `perm`: the result sends
/// (perm[a], perm[b]) to perm[a * b].
OpTable relabel(const OpTable &op, std::span<const Element> perm);

/// Throws std::invalid_argument when sizes differ.
void require_same_carrier(const OpTable &lhs, const OpTable &rhs);

} // namespace shelf

template <>
struct std::hash<shelf::OpTable> {
  std::size_t operator()(const shelf::OpTable &op) const noexcept;
};
