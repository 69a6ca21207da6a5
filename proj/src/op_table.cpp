#include "shelf/op_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace shelf {

OpTable::OpTable(std::size_t n, std::vector<Element> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0)
    throw std::invalid_argument("carrier size must be at least 1");
  if (entries_.size() != n_ * n_)
    throw std::invalid_argument("table must have exactly n*n entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= n_) {
      throw std::invalid_argument("entry " + std::to_string(entries_[i]) + " at row " +
                                  std::to_string(i / n_) + ", column " +
                                  std::to_string(i % n_) + " is out of range for n = " +
                                  std::to_string(n_));
    }
  }
}

std::vector<std::vector<Element>> OpTable::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    out[a].assign(entries_.begin() + a * n_, entries_.begin() + (a + 1) * n_);
  return out;
}

std::vector<Element> OpTable::column(Element b) const {
  std::vector<Element> out(n_);
  for (Element x = 0; x < n_; ++x)
    out[x] = (*this)(x, b);
  return out;
}

OpTable make_table(std::size_t n, const std::vector<std::vector<Element>> &rows) {
  if (rows.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " rows, got " +
                                std::to_string(rows.size()));
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw std::invalid_argument("row " + std::to_string(a) + " has " +
                                  std::to_string(rows[a].size()) + " entries, expected " +
                                  std::to_string(n));
    entries.insert(entries.end(), rows[a].begin(), rows[a].end());
  }
  return OpTable(n, std::move(entries));
}

OpTable right_trivial(std::size_t n) {
  std::vector<Element> entries(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      entries[a * n + b] = static_cast<Element>(a);
  return OpTable(n, std::move(entries));
}

void require_same_carrier(const OpTable &lhs, const OpTable &rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("carrier size mismatch: " + std::to_string(lhs.size()) +
                                " vs " + std::to_string(rhs.size()));
}

OpTable compose(const OpTable &op1, const OpTable &op2) {
  require_same_carrier(op1, op2);
  const std::size_t n = op1.size();
  std::vector<Element> entries(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      entries[a * n + b] = op2(op1(a, b), b);
  return OpTable(n, std::move(entries));
}

bool is_invertible(const OpTable &op) {
  const std::size_t n = op.size();
  std::vector<bool> seen(n);
  for (Element b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (Element x = 0; x < n; ++x) {
      const Element y = op(x, b);
      if (seen[y])
        return false;
      seen[y] = true;
    }
  }
  return true;
}

OpTable invert(const OpTable &op) {
  if (!is_invertible(op))
    throw std::domain_error("operation is not invertible: some column is not a bijection");
  const std::size_t n = op.size();
  std::vector<Element> entries(n * n);
  for (Element b = 0; b < n; ++b)
    for (Element x = 0; x < n; ++x)
      entries[op(x, b) * n + b] = x;
  return OpTable(n, std::move(entries));
}

bool is_idempotent(const OpTable &op) {
  for (Element a = 0; a < op.size(); ++a)
    if (op(a, a) != a)
      return false;
  return true;
}

std::optional<Triple> distributive_witness(const OpTable &opA, const OpTable &opB) {
  require_same_carrier(opA, opB);
  const std::size_t n = opA.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = opA(a, b);
      for (Element c = 0; c < n; ++c) {
        if (opB(ab, c) != opA(opB(a, c), opB(b, c)))
          return Triple{a, b, c};
      }
    }
  return std::nullopt;
}

bool commutes(const OpTable &opA, const OpTable &opB) {
  require_same_carrier(opA, opB);
  const std::size_t n = opA.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (opB(opA(a, b), b) != opA(opB(a, b), b))
        return false;
  return true;
}

std::optional<SetWitness> first_set_violation(std::span<const OpTable> ops) {
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = 0; j < ops.size(); ++j)
      if (auto t = distributive_witness(ops[i], ops[j]))
        return SetWitness{i, j, *t};
  return std::nullopt;
}

OpTable relabel(const OpTable &op, std::span<const Element> perm) {
  const std::size_t n = op.size();
  if (perm.size() != n)
    throw std::invalid_argument("relabeling has wrong length");
  std::vector<bool> hit(n);
  for (auto p : perm) {
    if (p >= n || hit[p])
      throw std::invalid_argument("relabeling is not a bijection");
    hit[p] = true;
  }
  std::vector<Element> entries(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      entries[perm[a] * n + perm[b]] = perm[op(a, b)];
  return OpTable(n, std::move(entries));
}

} // namespace shelf

std::size_t std::hash<shelf::OpTable>::operator()(const shelf::OpTable &op) const noexcept {
  // FNV-1a over the entries
  std::size_t h = 1469598103934665603ull;
  for (auto e : op.entries()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h ^ op.size();
}
