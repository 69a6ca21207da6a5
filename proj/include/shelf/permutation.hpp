#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shelf/op_table.hpp"

namespace shelf {

/// A bijection of {0, ..., n-1} in one-line notation.
class Permutation {
public:
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<Element> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Element operator()(Element x) const { return image_[x]; }
  const std::vector<Element> &image() const { return image_; }

  Permutation inverse() const;

  /// Left-to-right product: apply *this first, then `next`.
  Permutation then(const Permutation &next) const;

  /// x -> by(this(by^-1(x))), the conjugate transporting *this along `by`.
  Permutation conjugated_by(const Permutation &by) const;

  bool operator==(const Permutation &) const = default;
  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<Element> image_;
};

/// One permutation per column index y; coordinate y is x -> x * y.
using PermVector = std::vector<Permutation>;

/// The columns of an invertible table. Throws std::domain_error otherwise.
PermVector alpha(const OpTable &op);

/// Table whose column y is v[y]. Throws std::invalid_argument when the
/// coordinates disagree on size or the vector length differs from it.
OpTable alpha_inverse(const PermVector &v);

/// Coordinatewise left-to-right product; alpha(compose(a, b)) equals
/// product(alpha(a), alpha(b)).
PermVector product(const PermVector &first, const PermVector &second);

struct ColumnPair {
  Element y;
  Element z;

  bool operator==(const ColumnPair &) const = default;
};

/// Smallest (y, z) with  vi[vj[z](y)] != vi[y] conjugated by vj[z],
/// or nothing when the family {vi, vj} satisfies the condition.
std::optional<ColumnPair> conjugation_condition(const PermVector &vi, const PermVector &vj);

/// Cross-checks the table form of distributivity against the permutation
/// form: true iff both agree on whether (opA, opB) is distributive.
/// Throws std::domain_error for non-invertible inputs.
bool distributivity_equivalence_check(const OpTable &opA, const OpTable &opB);

} // namespace shelf
