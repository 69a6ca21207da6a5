#include "shelf/regular_embedding.hpp"

#include <stdexcept>
#include <unordered_set>

namespace shelf {

RegularEmbedding regular_embed(const FiniteGroup &g, bool check) {
  const std::size_t m = g.order();
  std::vector<OpTable> images;
  images.reserve(m);
  for (Element h = 0; h < m; ++h) {
    std::vector<Element> entries(m * m);
    for (Element a = 0; a < m; ++a)
      for (Element b = 0; b < m; ++b)
        entries[a * m + b] = g.mul(g.mul(a, g.inverse(b)), g.mul(h, b));
    images.emplace_back(m, std::move(entries));
  }

  RegularEmbedding e{g, std::move(images)};
  if (!check)
    return e;
  if (e.images[g.identity()] != right_trivial(m))
    throw std::logic_error("regular embedding: identity does not map to the right-trivial operation");
  if (verify_distributive(e.images))
    throw std::logic_error("regular embedding: image set is not distributive");
  if (!verify_homomorphism(e))
    throw std::logic_error("regular embedding: not a homomorphism");
  if (!verify_injective(e))
    throw std::logic_error("regular embedding: not injective");
  return e;
}

std::optional<SetWitness> verify_distributive(std::span<const OpTable> images) {
  return first_set_violation(images);
}

bool verify_homomorphism(const RegularEmbedding &e) {
  const auto &g = e.group;
  for (Element g1 = 0; g1 < g.order(); ++g1)
    for (Element g2 = 0; g2 < g.order(); ++g2)
      if (compose(e.images[g1], e.images[g2]) != e.images[g.mul(g1, g2)])
        return false;
  return true;
}

bool verify_injective(const RegularEmbedding &e) {
  const auto &g = e.group;
  for (Element h = 0; h < g.order(); ++h)
    for (Element a = 0; a < g.order(); ++a)
      if (e.images[h](a, g.identity()) != g.mul(a, h))
        return false;
  std::unordered_set<OpTable> distinct(e.images.begin(), e.images.end());
  return distinct.size() == e.images.size();
}

bool verify_inverse_images(const RegularEmbedding &e) {
  const auto &g = e.group;
  for (Element h = 0; h < g.order(); ++h) {
    if (!is_invertible(e.images[h]) || e.images[g.inverse(h)] != invert(e.images[h]))
      return false;
  }
  return true;
}

} // namespace shelf
