#include "shelf/fixtures.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "shelf/io.hpp"
#include "shelf/multishelf.hpp"

namespace shelf::fixtures {

OpTable berman_tau() {
  return make_table(6, {{1, 1, 3, 5, 5, 3},
                        {0, 0, 4, 2, 2, 4},
                        {3, 3, 5, 1, 1, 5},
                        {2, 2, 0, 4, 4, 0},
                        {5, 5, 1, 3, 3, 1},
                        {4, 4, 2, 0, 0, 2}});
}

OpTable berman_sigma() {
  return make_table(6, {{2, 4, 2, 4, 2, 4},
                        {5, 3, 5, 3, 5, 3},
                        {4, 0, 4, 0, 4, 0},
                        {1, 5, 1, 5, 1, 5},
                        {0, 2, 0, 2, 0, 2},
                        {3, 1, 3, 1, 3, 1}});
}

OpTable xor_table() { return make_table(2, {{0, 1}, {1, 0}}); }

const std::vector<Fixture> &all() {
  static const std::vector<Fixture> fixtures = {
      {"berman-d6", "reflection tau and 3-cycle sigma generating a dihedral group of order 6 in Bin(X), |X| = 6",
       6, {berman_tau(), berman_sigma()}, true},
      {"xor", "x xor y on {0, 1}; fails self-distributivity at (0, 0, 1)", 2, {xor_table()}, false},
  };
  return fixtures;
}

const Fixture &get(std::string_view name) {
  for (const auto &f : all())
    if (f.name == name)
      return f;
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::string document(const Fixture &f) { return io::dump_set(f.n, f.ops); }

std::string checksum(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void revalidate(const Fixture &f) {
  const auto fail = [&](const std::string &what) {
    throw std::logic_error("fixture " + f.name + ": " + what);
  };
  const auto violation = first_set_violation(f.ops);
  if (violation.has_value() == f.distributive)
    fail(f.distributive ? "is not distributive" : "unexpectedly distributive");
  if (f.name == "berman-d6") {
    const auto &tau = f.ops[0];
    const auto &sigma = f.ops[1];
    if (!is_invertible(tau) || !is_invertible(sigma))
      fail("generators are not invertible");
    const auto group = close_group(DistributiveSet(f.n, f.ops));
    if (group.ops.size() != 6 || group.abelian)
      fail("closure is not a non-abelian group of order 6");
    if (commutes(tau, sigma))
      fail("generators commute");
  }
}

} // namespace shelf::fixtures
