#include "shelf/multishelf.hpp"

#include <string>
#include <unordered_map>

namespace shelf {

namespace {

std::string describe(const SetWitness &w) {
  return "ops " + std::to_string(w.first) + " and " + std::to_string(w.second) +
         " are not distributive at (" + std::to_string(w.triple.a) + ", " +
         std::to_string(w.triple.b) + ", " + std::to_string(w.triple.c) + ")";
}

ClosureResult close(ClosureKind kind, std::size_t n, const std::vector<OpTable> &generators,
                    const ClosureOptions &opts) {
  std::vector<OpTable> ops;
  std::unordered_map<OpTable, std::size_t> index;
  const auto add = [&](const OpTable &op) {
    if (index.contains(op))
      return;
    if (ops.size() >= opts.budget)
      throw BudgetExceeded("closure exceeds budget of " + std::to_string(opts.budget) +
                           " tables");
    index.emplace(op, ops.size());
    ops.push_back(op);
  };

  add(right_trivial(n));
  for (const auto &g : generators)
    add(g);
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (const auto &g : generators)
      add(compose(ops[i], g));

  const std::size_t k = ops.size();
  std::vector<std::vector<std::size_t>> cayley(k, std::vector<std::size_t>(k));
  bool abelian = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      cayley[i][j] = index.at(compose(ops[i], ops[j]));
  for (std::size_t i = 0; i < k && abelian; ++i)
    for (std::size_t j = i + 1; j < k && abelian; ++j)
      abelian = cayley[i][j] == cayley[j][i];

  if (opts.revalidate) {
    if (auto w = first_set_violation(ops))
      throw std::logic_error("closure is not distributive: " + describe(*w));
  }
  return ClosureResult{kind, std::move(ops), std::move(cayley), abelian};
}

} // namespace

NotDistributive::NotDistributive(SetWitness w)
    : std::runtime_error(describe(w)), witness_(w) {}

DistributiveSet::DistributiveSet(std::size_t n, std::vector<OpTable> ops)
    : n_(n), ops_(std::move(ops)) {
  for (const auto &op : ops_)
    if (op.size() != n_)
      throw std::invalid_argument("member has carrier size " + std::to_string(op.size()) +
                                  ", expected " + std::to_string(n_));
  if (auto w = first_set_violation(ops_))
    throw NotDistributive(*w);
}

DistributiveSet make_distributive_set(std::vector<OpTable> ops) {
  if (ops.empty())
    throw std::invalid_argument("cannot infer the carrier of an empty family");
  const std::size_t n = ops.front().size();
  return DistributiveSet(n, std::move(ops));
}

ClosureResult close_monoid(const DistributiveSet &s, const ClosureOptions &opts) {
  return close(ClosureKind::monoid, s.carrier_size(), s.ops(), opts);
}

ClosureResult close_group(const DistributiveSet &s, const ClosureOptions &opts) {
  std::vector<OpTable> generators;
  generators.reserve(2 * s.size());
  for (const auto &op : s.ops()) {
    generators.push_back(op);
    generators.push_back(invert(op));
  }
  return close(ClosureKind::group, s.carrier_size(), generators, opts);
}

std::vector<IdempotentFlag> idempotent_center_report(const DistributiveSet &s) {
  std::vector<IdempotentFlag> report;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_idempotent(s.ops()[i]))
      continue;
    bool central = true;
    for (const auto &other : s.ops())
      central = central && commutes(other, s.ops()[i]);
    if (!central)
      throw std::logic_error("idempotent member " + std::to_string(i) +
                             " is distributive but not central");
    report.push_back({i, central});
  }
  return report;
}

} // namespace shelf
