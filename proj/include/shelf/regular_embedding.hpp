#pragma once

#include <optional>
#include <span>
#include <vector>

#include "shelf/group.hpp"
#include "shelf/op_table.hpp"

namespace shelf {

/// The regular embedding G -> Bin(G), g -> *_g with a *_g b = a b^-1 g b.
/// The carrier of every image is the group's own index set.
struct RegularEmbedding {
  FiniteGroup group;
  std::vector<OpTable> images;
};

/// Builds the images and, when `check` is set, runs every verification
/// below; a failure throws std::logic_error since it cannot happen for a
/// valid group. The distributivity check costs m^5 lookups.
RegularEmbedding regular_embed(const FiniteGroup &g, bool check = true);

/// First failing (g1, g2, a, b, c) over all ordered pairs of images, or
/// nothing. Works on any family, not only regular embeddings.
std::optional<SetWitness> verify_distributive(std::span<const OpTable> images);

/// images[g1] images[g2] == images[g1 g2] for all pairs.
bool verify_homomorphism(const RegularEmbedding &e);

/// Column at the identity is a -> a g, and the images are pairwise distinct.
bool verify_injective(const RegularEmbedding &e);

/// images[g^-1] is the inverse of images[g] for every g.
bool verify_inverse_images(const RegularEmbedding &e);

} // namespace shelf
