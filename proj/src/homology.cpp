#include "shelf/homology.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace shelf {

namespace {

std::vector<Element> decode(std::size_t index, std::size_t n, std::size_t length) {
  std::vector<Element> tuple(length);
  for (std::size_t k = length; k-- > 0;) {
    tuple[k] = static_cast<Element>(index % n);
    index /= n;
  }
  return tuple;
}

std::size_t encode(const std::vector<Element> &tuple, std::size_t n) {
  std::size_t index = 0;
  for (auto x : tuple)
    index = index * n + x;
  return index;
}

void accumulate_boundary(IntMatrix &out, const OpTable &op, std::size_t degree,
                         std::int64_t weight) {
  if (weight == 0)
    return;
  const std::size_t n = op.size();
  std::vector<Element> face(degree);
  for (std::size_t col = 0; col < out.cols(); ++col) {
    const auto x = decode(col, n, degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) {
      for (std::size_t k = 0; k < i; ++k)
        face[k] = op(x[k], x[i]);
      for (std::size_t k = i + 1; k <= degree; ++k)
        face[k - 1] = x[k];
      out.add(encode(face, n), col, i % 2 == 0 ? weight : -weight);
    }
  }
}

std::size_t rank_of(const std::vector<BigInt> &factors) { return factors.size(); }

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

} // namespace

std::size_t ChainSpec::carrier_size() const {
  if (ops.empty())
    throw std::invalid_argument("chain spec has no operations");
  for (const auto &op : ops)
    require_same_carrier(ops.front(), op);
  if (weights.size() != ops.size())
    throw std::invalid_argument("expected " + std::to_string(ops.size()) + " weights, got " +
                                std::to_string(weights.size()));
  return ops.front().size();
}

std::size_t chain_dimension(std::size_t carrier, std::size_t degree, std::size_t max_dimension) {
  std::size_t dim = 1;
  for (std::size_t k = 0; k <= degree; ++k) {
    if (dim > max_dimension / carrier)
      throw std::domain_error("chain group C_" + std::to_string(degree) +
                              " exceeds the dimension budget of " + std::to_string(max_dimension));
    dim *= carrier;
  }
  return dim;
}

IntMatrix one_term_boundary(const OpTable &op, std::size_t degree) {
  if (degree < 1)
    throw std::invalid_argument("boundary degree must be at least 1");
  const std::size_t n = op.size();
  IntMatrix out(chain_dimension(n, degree - 1, kUnbounded), chain_dimension(n, degree, kUnbounded));
  accumulate_boundary(out, op, degree, 1);
  return out;
}

IntMatrix boundary_matrix(const ChainSpec &spec, std::size_t degree) {
  const std::size_t n = spec.carrier_size();
  if (degree < 1 || degree > spec.max_degree)
    throw std::invalid_argument("boundary degree " + std::to_string(degree) +
                                " is outside [1, " + std::to_string(spec.max_degree) + "]");
  IntMatrix out(chain_dimension(n, degree - 1, kUnbounded), chain_dimension(n, degree, kUnbounded));
  for (std::size_t t = 0; t < spec.ops.size(); ++t)
    accumulate_boundary(out, spec.ops[t], degree, spec.weights[t]);
  return out;
}

bool verify_differential(const ChainSpec &spec) {
  spec.carrier_size();
  for (std::size_t d = 1; d < spec.max_degree; ++d) {
    if (!multiply(boundary_matrix(spec, d), boundary_matrix(spec, d + 1)).is_zero())
      return false;

    // ops with zero weight do not enter the differential
    std::vector<std::size_t> active;
    for (std::size_t t = 0; t < spec.ops.size(); ++t)
      if (spec.weights[t] != 0)
        active.push_back(t);
    std::vector<IntMatrix> lower, upper;
    for (auto t : active) {
      lower.push_back(one_term_boundary(spec.ops[t], d));
      upper.push_back(one_term_boundary(spec.ops[t], d + 1));
    }
    for (std::size_t s = 0; s < active.size(); ++s)
      for (std::size_t t = s; t < active.size(); ++t) {
        IntMatrix sum = multiply(lower[s], upper[t]);
        const IntMatrix other = multiply(lower[t], upper[s]);
        for (std::size_t r = 0; r < sum.rows(); ++r)
          for (std::size_t c = 0; c < sum.cols(); ++c)
            sum.add(r, c, other(r, c));
        if (!sum.is_zero())
          return false;
      }
  }
  return true;
}

std::vector<HomologyGroup> homology_groups(const ChainSpec &spec, const HomologyOptions &opts) {
  const std::size_t n = spec.carrier_size();
  chain_dimension(n, spec.max_degree, opts.max_dimension);
  if (!verify_differential(spec))
    throw std::domain_error("boundary maps do not square to zero; refusing to report homology");

  // factors[d] holds the invariant factors of d_d; d_0 = 0
  std::vector<std::vector<BigInt>> factors(spec.max_degree + 1);
  for (std::size_t d = 1; d <= spec.max_degree; ++d)
    factors[d] = smith_normal_form(boundary_matrix(spec, d));

  std::vector<HomologyGroup> out;
  for (std::size_t d = 0; d < spec.max_degree; ++d) {
    HomologyGroup h{d, 0, {}};
    h.free_rank = chain_dimension(n, d, kUnbounded) - rank_of(factors[d]) - rank_of(factors[d + 1]);
    for (const auto &f : factors[d + 1])
      if (f > 1)
        h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

} // namespace shelf
