#include "shelf/smith.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace shelf {

namespace {

struct Overflow {};

std::int64_t magnitude(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return a < 0 ? -a : a;
}

BigInt magnitude(const BigInt &a) { return abs(a); }

// a -= q * b
void sub_mul(std::int64_t &a, std::int64_t q, std::int64_t b) {
  std::int64_t p;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &a))
    throw Overflow{};
}

void sub_mul(BigInt &a, const BigInt &q, const BigInt &b) { a -= q * b; }

template <typename T>
class Dense {
public:
  Dense(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  T &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t r1, std::size_t r2, std::size_t from) {
    if (r1 == r2)
      return;
    for (std::size_t c = from; c < cols_; ++c)
      std::swap(at(r1, c), at(r2, c));
  }

  void swap_cols(std::size_t c1, std::size_t c2, std::size_t from) {
    if (c1 == c2)
      return;
    for (std::size_t r = from; r < rows_; ++r)
      std::swap(at(r, c1), at(r, c2));
  }

  // Diagonal of an equivalent diagonal matrix; the nonzero entries only,
  // in pivot order.
  std::vector<T> diagonalize() {
    std::vector<T> diag;
    const std::size_t steps = std::min(rows_, cols_);
    for (std::size_t s = 0; s < steps; ++s) {
      std::size_t pr = 0, pc = 0;
      bool found = false;
      T best{};
      for (std::size_t r = s; r < rows_; ++r)
        for (std::size_t c = s; c < cols_; ++c) {
          const T &v = at(r, c);
          if (v == 0)
            continue;
          T mag = magnitude(v);
          if (!found || mag < best) {
            best = std::move(mag);
            pr = r;
            pc = c;
            found = true;
          }
        }
      if (!found)
        break;
      swap_rows(s, pr, s);
      swap_cols(s, pc, s);
      clear_cross(s);
      diag.push_back(magnitude(at(s, s)));
    }
    return diag;
  }

private:
  // Zeroes row s and column s outside the pivot. Remainders smaller than
  // the pivot are swapped in and the sweep repeats.
  void clear_cross(std::size_t s) {
    while (true) {
      for (std::size_t r = s + 1; r < rows_; ++r) {
        if (at(r, s) == 0)
          continue;
        const T q = at(r, s) / at(s, s);
        if (q == 0)
          continue;
        for (std::size_t c = s; c < cols_; ++c)
          if (at(s, c) != 0)
            sub_mul(at(r, c), q, at(s, c));
      }
      for (std::size_t c = s + 1; c < cols_; ++c) {
        if (at(s, c) == 0)
          continue;
        const T q = at(s, c) / at(s, s);
        if (q == 0)
          continue;
        for (std::size_t r = s; r < rows_; ++r)
          if (at(r, s) != 0)
            sub_mul(at(r, c), q, at(r, s));
      }

      std::size_t best_r = s, best_c = s;
      T best = magnitude(at(s, s));
      for (std::size_t r = s + 1; r < rows_; ++r)
        if (at(r, s) != 0 && magnitude(at(r, s)) < best) {
          best = magnitude(at(r, s));
          best_r = r;
          best_c = s;
        }
      for (std::size_t c = s + 1; c < cols_; ++c)
        if (at(s, c) != 0 && magnitude(at(s, c)) < best) {
          best = magnitude(at(s, c));
          best_r = s;
          best_c = c;
        }
      if (best_r == s && best_c == s) {
        // every off-pivot entry is a multiple of the pivot by now, and the
        // quotient pass removed it
        bool clean = true;
        for (std::size_t r = s + 1; r < rows_ && clean; ++r)
          clean = at(r, s) == 0;
        for (std::size_t c = s + 1; c < cols_ && clean; ++c)
          clean = at(s, c) == 0;
        if (clean)
          return;
        continue;
      }
      swap_rows(s, best_r, s);
      swap_cols(s, best_c, s);
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

std::vector<BigInt> normalize(std::vector<BigInt> diag) {
  // (d_i, d_j) -> (gcd, lcm) leaves d_i dividing every later entry
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt g = gcd(diag[i], diag[j]);
      if (g == diag[i])
        continue;
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  return diag;
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix data has " + std::to_string(data_.size()) +
                                " entries, expected " + std::to_string(rows_ * cols_));
}

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    m(i, i) = 1;
  return m;
}

void IntMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  auto &slot = data_[r * cols_ + c];
  if (__builtin_add_overflow(slot, v, &slot))
    throw std::overflow_error("matrix entry overflows 64 bits");
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix multiply(const IntMatrix &lhs, const IntMatrix &rhs) {
  if (lhs.cols() != rhs.rows())
    throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const std::int64_t a = lhs(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        std::int64_t p;
        if (__builtin_mul_overflow(a, rhs(k, j), &p))
          throw std::overflow_error("matrix product overflows 64 bits");
        out.add(i, j, p);
      }
    }
  return out;
}

std::vector<BigInt> smith_normal_form(const IntMatrix &m) {
  std::vector<std::int64_t> raw(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      raw[r * m.cols() + c] = m(r, c);

  std::vector<BigInt> diag;
  try {
    for (auto d : Dense<std::int64_t>(m.rows(), m.cols(), raw).diagonalize())
      diag.emplace_back(d);
  } catch (const Overflow &) {
    diag = Dense<BigInt>(m.rows(), m.cols(), std::vector<BigInt>(raw.begin(), raw.end()))
               .diagonalize();
  }
  return normalize(std::move(diag));
}

} // namespace shelf
