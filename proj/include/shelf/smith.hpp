#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shelf {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with 64-bit storage. Arithmetic that would leave
/// 64 bits throws std::overflow_error; the Smith normal form escalates to
/// arbitrary precision internally instead.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);

  static IntMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Overflow-checked accumulate.
  void add(std::size_t r, std::size_t c, std::int64_t v);

  bool is_zero() const;

  bool operator==(const IntMatrix &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Overflow-checked product.
IntMatrix multiply(const IntMatrix &lhs, const IntMatrix &rhs);

/// Nonzero invariant factors d1 | d2 | ... (all positive). Their count is
/// the rank. Pivots are chosen by least absolute value.
std::vector<BigInt> smith_normal_form(const IntMatrix &m);

} // namespace shelf
