#include "shelf/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace shelf {

Permutation::Permutation(std::vector<Element> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size());
  for (auto x : image_) {
    if (x >= image_.size() || hit[x])
      throw std::invalid_argument("one-line image is not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> image(n);
  std::iota(image.begin(), image.end(), Element{0});
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Element> out(size());
  for (Element x = 0; x < size(); ++x)
    out[image_[x]] = x;
  return Permutation(std::move(out));
}

Permutation Permutation::then(const Permutation &next) const {
  if (next.size() != size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Element> out(size());
  for (Element x = 0; x < size(); ++x)
    out[x] = next(image_[x]);
  return Permutation(std::move(out));
}

Permutation Permutation::conjugated_by(const Permutation &by) const {
  return by.inverse().then(*this).then(by);
}

PermVector alpha(const OpTable &op) {
  if (!is_invertible(op))
    throw std::domain_error("alpha is only defined on invertible operations");
  PermVector v;
  v.reserve(op.size());
  for (Element y = 0; y < op.size(); ++y)
    v.emplace_back(op.column(y));
  return v;
}

OpTable alpha_inverse(const PermVector &v) {
  const std::size_t n = v.size();
  std::vector<Element> entries(n * n);
  for (Element y = 0; y < n; ++y) {
    if (v[y].size() != n)
      throw std::invalid_argument("coordinate " + std::to_string(y) + " has size " +
                                  std::to_string(v[y].size()) + ", expected " +
                                  std::to_string(n));
    for (Element x = 0; x < n; ++x)
      entries[x * n + y] = v[y](x);
  }
  return OpTable(n, std::move(entries));
}

PermVector product(const PermVector &first, const PermVector &second) {
  if (first.size() != second.size())
    throw std::invalid_argument("permutation vector size mismatch");
  PermVector out;
  out.reserve(first.size());
  for (std::size_t y = 0; y < first.size(); ++y)
    out.push_back(first[y].then(second[y]));
  return out;
}

std::optional<ColumnPair> conjugation_condition(const PermVector &vi, const PermVector &vj) {
  if (vi.size() != vj.size())
    throw std::invalid_argument("permutation vector size mismatch");
  const std::size_t n = vi.size();
  for (Element y = 0; y < n; ++y)
    for (Element z = 0; z < n; ++z) {
      const Permutation &s = vj[z];
      if (vi[s(y)] != vi[y].conjugated_by(s))
        return ColumnPair{y, z};
    }
  return std::nullopt;
}

bool distributivity_equivalence_check(const OpTable &opA, const OpTable &opB) {
  require_same_carrier(opA, opB);
  const bool by_table = !distributive_witness(opA, opB).has_value();
  const bool by_perms = !conjugation_condition(alpha(opA), alpha(opB)).has_value();
  return by_table == by_perms;
}

} // namespace shelf
