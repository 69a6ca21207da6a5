#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shelf/op_table.hpp"

namespace shelf {

/// A finite group given by its full multiplication table on {0, ..., m-1}.
/// Instances are always validated: associative, two-sided identity,
/// two-sided inverses.
class FiniteGroup {
public:
  std::size_t order() const { return m_; }
  Element mul(Element a, Element b) const { return mul_[a * m_ + b]; }
  Element identity() const { return identity_; }
  Element inverse(Element a) const { return inv_[a]; }

  std::vector<std::vector<Element>> table() const;

  bool operator==(const FiniteGroup &) const = default;

  friend FiniteGroup group_from_table(std::size_t, const std::vector<std::vector<Element>> &,
                                      Element);

private:
  FiniteGroup() = default;

  std::size_t m_ = 0;
  std::vector<Element> mul_;
  Element identity_ = 0;
  std::vector<Element> inv_;
};

/// Validates and builds a group. Throws std::invalid_argument describing
/// the first failed axiom.
FiniteGroup group_from_table(std::size_t m, const std::vector<std::vector<Element>> &mul,
                             Element identity);

/// Z_k with element i the residue i.
FiniteGroup cyclic(std::size_t k);

/// Dihedral group of order 2k. Element i < k is sigma^i (rotation), element
/// k + i is tau sigma^i; sigma is element 1 (for k > 1) and tau is element k.
FiniteGroup dihedral(std::size_t k);

inline constexpr std::size_t kSymmetricBound = 5;

/// S_k on one-line permutations in lexicographic order. The product p*q
/// applies p first, then q.
FiniteGroup symmetric(std::size_t k, std::size_t bound = kSymmetricBound);

bool is_abelian(const FiniteGroup &g);

/// Order of an element.
std::size_t element_order(const FiniteGroup &g, Element a);

inline constexpr std::size_t kIsomorphismBound = 8;

/// Brute force over all relabelings; throws std::domain_error above
/// kIsomorphismBound.
bool isomorphic(const FiniteGroup &g, const FiniteGroup &h);

/// True iff images[identity] is right-trivial, g -> images[g] turns the group
/// product into composition, and the images are pairwise distinct.
bool is_monomorphism_to_bin(const FiniteGroup &g, std::span<const OpTable> images);

} // namespace shelf
