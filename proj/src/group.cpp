#include "shelf/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace shelf {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

} // namespace

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(m_);
  for (std::size_t a = 0; a < m_; ++a)
    out[a].assign(mul_.begin() + a * m_, mul_.begin() + (a + 1) * m_);
  return out;
}

FiniteGroup group_from_table(std::size_t m, const std::vector<std::vector<Element>> &mul,
                             Element identity) {
  // make_table does the shape and range checks
  const OpTable t = make_table(m, mul);
  if (identity >= m)
    throw std::invalid_argument("identity " + str(identity) + " is out of range");

  for (Element a = 0; a < m; ++a)
    if (t(identity, a) != a || t(a, identity) != a)
      throw std::invalid_argument("element " + str(identity) + " is not a two-sided identity (fails at " +
                                  str(a) + ")");

  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < m; ++c)
        if (t(t(a, b), c) != t(a, t(b, c)))
          throw std::invalid_argument("not associative at (" + str(a) + ", " + str(b) + ", " +
                                      str(c) + ")");

  std::vector<Element> inv(m);
  for (Element a = 0; a < m; ++a) {
    bool found = false;
    for (Element b = 0; b < m && !found; ++b) {
      if (t(a, b) == identity && t(b, a) == identity) {
        inv[a] = b;
        found = true;
      }
    }
    if (!found)
      throw std::invalid_argument("no inverse for " + str(a));
  }

  FiniteGroup g;
  g.m_ = m;
  g.mul_.assign(t.entries().begin(), t.entries().end());
  g.identity_ = identity;
  g.inv_ = std::move(inv);
  return g;
}

FiniteGroup cyclic(std::size_t k) {
  if (k < 1)
    throw std::invalid_argument("cyclic: order must be at least 1");
  std::vector<std::vector<Element>> mul(k, std::vector<Element>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      mul[a][b] = static_cast<Element>((a + b) % k);
  return group_from_table(k, mul, 0);
}

FiniteGroup dihedral(std::size_t k) {
  if (k < 1)
    throw std::invalid_argument("dihedral: k must be at least 1");
  const auto rot = [k](std::size_t i) { return static_cast<Element>(i % k); };
  const auto ref = [k](std::size_t i) { return static_cast<Element>(k + i % k); };
  std::vector<std::vector<Element>> mul(2 * k, std::vector<Element>(2 * k));
  // tau sigma = sigma^-1 tau, hence sigma^i tau sigma^j = tau sigma^(j-i)
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      mul[rot(i)][rot(j)] = rot(i + j);
      mul[rot(i)][ref(j)] = ref(j + k - i);
      mul[ref(i)][rot(j)] = ref(i + j);
      mul[ref(i)][ref(j)] = rot(j + k - i);
    }
  return group_from_table(2 * k, mul, 0);
}

FiniteGroup symmetric(std::size_t k, std::size_t bound) {
  if (k < 1 || k > bound)
    throw std::invalid_argument("symmetric: k must be in [1, " + str(bound) + "]");
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p(k);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t m = perms.size();
  const auto index_of = [&](const std::vector<Element> &q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Element>> mul(m, std::vector<Element>(m));
  std::vector<Element> prod(k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < k; ++x)
        prod[x] = perms[b][perms[a][x]];
      mul[a][b] = index_of(prod);
    }
  return group_from_table(m, mul, 0);
}

bool is_abelian(const FiniteGroup &g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

std::size_t element_order(const FiniteGroup &g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != g.identity(); x = g.mul(x, a))
    ++k;
  return k;
}

bool isomorphic(const FiniteGroup &g, const FiniteGroup &h) {
  if (g.order() > kIsomorphismBound || h.order() > kIsomorphismBound)
    throw std::domain_error("isomorphism test is bounded to order " + str(kIsomorphismBound));
  if (g.order() != h.order())
    return false;
  const std::size_t m = g.order();
  std::vector<Element> phi(m);
  std::iota(phi.begin(), phi.end(), Element{0});
  do {
    bool ok = phi[g.identity()] == h.identity();
    for (Element a = 0; a < m && ok; ++a)
      for (Element b = 0; b < m && ok; ++b)
        ok = phi[g.mul(a, b)] == h.mul(phi[a], phi[b]);
    if (ok)
      return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

bool is_monomorphism_to_bin(const FiniteGroup &g, std::span<const OpTable> images) {
  if (images.size() != g.order())
    throw std::invalid_argument("expected " + str(g.order()) + " images, got " +
                                str(images.size()));
  for (const auto &op : images)
    require_same_carrier(images.front(), op);

  if (images[g.identity()] != right_trivial(images.front().size()))
    return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (compose(images[a], images[b]) != images[g.mul(a, b)])
        return false;
  std::unordered_set<OpTable> distinct(images.begin(), images.end());
  return distinct.size() == images.size();
}

} // namespace shelf
