#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "shelf/op_table.hpp"

namespace shelf {

/// Thrown when a family fails the pairwise distributive law.
class NotDistributive : public std::runtime_error {
public:
  explicit NotDistributive(SetWitness w);
  const SetWitness &witness() const { return witness_; }

private:
  SetWitness witness_;
};

/// Thrown when a closure or search outgrows its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite family of operations on a common carrier in which every ordered
/// pair, including (op, op), is right distributive.
class DistributiveSet {
public:
  /// Throws NotDistributive with the first violation, or
  /// std::invalid_argument for mixed carriers.
  DistributiveSet(std::size_t n, std::vector<OpTable> ops);

  std::size_t carrier_size() const { return n_; }
  const std::vector<OpTable> &ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

private:
  std::size_t n_;
  std::vector<OpTable> ops_;
};

/// Convenience overload; the carrier is taken from the first member.
DistributiveSet make_distributive_set(std::vector<OpTable> ops);

enum class ClosureKind { monoid, group };

struct ClosureResult {
  ClosureKind kind;
  std::vector<OpTable> ops;
  /// cayley[i][j] is the index of compose(ops[i], ops[j]).
  std::vector<std::vector<std::size_t>> cayley;
  bool abelian;
};

struct ClosureOptions {
  std::size_t budget = 10'000;
  bool revalidate = true;
};

/// Breadth-first closure of S together with the right-trivial operation
/// under composition. ops[0] is always the right-trivial operation, followed
/// by the members of S in order, then new products in discovery order.
ClosureResult close_monoid(const DistributiveSet &s, const ClosureOptions &opts = {});

/// As close_monoid, with the inverse of every member adjoined first.
/// Throws std::domain_error for non-invertible members.
ClosureResult close_group(const DistributiveSet &s, const ClosureOptions &opts = {});

struct IdempotentFlag {
  std::size_t index;
  bool commutes_with_all;

  bool operator==(const IdempotentFlag &) const = default;
};

/// One flag per idempotent member. A false flag would contradict the
/// centrality of idempotents and raises std::logic_error.
std::vector<IdempotentFlag> idempotent_center_report(const DistributiveSet &s);

} // namespace shelf
