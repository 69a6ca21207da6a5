#include "shelf/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "shelf/multishelf.hpp"

namespace shelf {

namespace {

using Clock = std::chrono::steady_clock;

struct TimeUp {};

class Deadline {
public:
  explicit Deadline(double seconds) {
    if (seconds < std::numeric_limits<double>::infinity())
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds));
  }
  bool passed() const { return end_ && Clock::now() >= *end_; }

private:
  std::optional<Clock::time_point> end_;
};

std::vector<std::vector<Element>> all_permutations(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// S_n with precomputed products, used by the backtracking enumerator.
class SymmetricTables {
public:
  explicit SymmetricTables(std::size_t n) : n_(n), perms_(all_permutations(n)) {
    const std::size_t m = perms_.size();
    inv_.resize(m);
    then_.resize(m * m);
    std::vector<Element> q(n);
    const auto rank = [&](const std::vector<Element> &v) {
      return static_cast<std::uint16_t>(std::lower_bound(perms_.begin(), perms_.end(), v) -
                                        perms_.begin());
    };
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t x = 0; x < n; ++x)
        q[perms_[a][x]] = static_cast<Element>(x);
      inv_[a] = rank(q);
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t x = 0; x < n; ++x)
          q[x] = perms_[b][perms_[a][x]];
        then_[a * m + b] = rank(q);
      }
    }
  }

  std::size_t count() const { return perms_.size(); }
  Element apply(std::uint16_t p, Element x) const { return perms_[p][x]; }

  // z^-1, then y, then z
  std::uint16_t conjugate(std::uint16_t y, std::uint16_t z) const {
    const std::size_t m = perms_.size();
    return then_[then_[inv_[z] * m + y] * m + z];
  }

private:
  std::size_t n_;
  std::vector<std::vector<Element>> perms_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> then_;
};

constexpr std::int16_t kUnassigned = -1;
using Columns = std::array<std::int16_t, kPrunedBound>;

class RackBacktracker {
public:
  RackBacktracker(std::size_t n, const Deadline &deadline)
      : n_(n), sym_(n), deadline_(deadline) {}

  void run(RackCatalog &out) {
    Columns cols;
    cols.fill(kUnassigned);
    descend(cols, out);
  }

private:
  // Applies the conjugation rule to every assigned pair until nothing new
  // is forced; false on a contradiction.
  bool propagate(Columns &cols) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element y = 0; y < n_; ++y) {
        if (cols[y] == kUnassigned)
          continue;
        for (Element z = 0; z < n_; ++z) {
          if (cols[z] == kUnassigned)
            continue;
          const Element target = sym_.apply(static_cast<std::uint16_t>(cols[z]), y);
          const auto forced = static_cast<std::int16_t>(sym_.conjugate(
              static_cast<std::uint16_t>(cols[y]), static_cast<std::uint16_t>(cols[z])));
          if (cols[target] == kUnassigned) {
            cols[target] = forced;
            changed = true;
          } else if (cols[target] != forced) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void descend(const Columns &cols, RackCatalog &out) {
    const auto free_col = std::find(cols.begin(), cols.begin() + n_, kUnassigned);
    if (free_col == cols.begin() + n_) {
      std::vector<Element> entries(n_ * n_);
      for (Element y = 0; y < n_; ++y)
        for (Element x = 0; x < n_; ++x)
          entries[x * n_ + y] = sym_.apply(static_cast<std::uint16_t>(cols[y]), x);
      out.racks.emplace_back(n_, std::move(entries));
      return;
    }
    const auto y = static_cast<std::size_t>(free_col - cols.begin());
    for (std::size_t p = 0; p < sym_.count(); ++p) {
      if ((++out.nodes & 0xfff) == 0 && deadline_.passed())
        throw TimeUp{};
      Columns next = cols;
      next[y] = static_cast<std::int16_t>(p);
      if (propagate(next))
        descend(next, out);
      else
        ++out.pruned;
    }
  }

  std::size_t n_;
  SymmetricTables sym_;
  const Deadline &deadline_;
};

void enumerate_unpruned(std::size_t n, RackCatalog &out, const Deadline &deadline) {
  const auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  std::vector<std::size_t> digit(n, 0);
  std::vector<Element> entries(n * n);
  while (true) {
    if ((++out.nodes & 0xfff) == 0 && deadline.passed())
      throw TimeUp{};
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        entries[x * n + y] = perms[digit[y]][x];
    OpTable op(n, entries);
    if (!distributive_witness(op, op))
      out.racks.push_back(std::move(op));

    std::size_t pos = 0;
    while (pos < n && ++digit[pos] == m)
      digit[pos++] = 0;
    if (pos == n)
      break;
  }
}

void fill_canonical(RackCatalog &catalog) {
  const auto perms = all_permutations(catalog.n);
  std::unordered_set<OpTable> seen;
  for (const auto &rack : catalog.racks) {
    if (seen.contains(rack))
      continue;
    OpTable least = rack;
    for (const auto &p : perms) {
      OpTable image = relabel(rack, p);
      least = std::min(least, image);
      seen.insert(std::move(image));
    }
    catalog.canonical.push_back(std::move(least));
  }
  std::sort(catalog.canonical.begin(), catalog.canonical.end());
}

RackCatalog enumerate(std::size_t n, bool use_pruning, const Deadline &deadline) {
  const std::size_t bound = use_pruning ? kPrunedBound : kUnprunedBound;
  if (n < 1 || n > bound)
    throw std::domain_error(std::string(use_pruning ? "pruned" : "unpruned") +
                            " rack enumeration supports 1 <= n <= " + std::to_string(bound));
  RackCatalog catalog;
  catalog.n = n;
  if (use_pruning)
    RackBacktracker(n, deadline).run(catalog);
  else
    enumerate_unpruned(n, catalog, deadline);
  std::sort(catalog.racks.begin(), catalog.racks.end());
  fill_canonical(catalog);
  return catalog;
}

struct SweepSlice {
  bool done = false;
  std::uint64_t checked = 0;
  std::uint64_t compatible = 0;
  std::uint64_t noncommuting = 0;
  std::vector<std::size_t> examples;
};

} // namespace

bool is_rack(const OpTable &op) { return is_invertible(op) && !distributive_witness(op, op); }

RackCatalog enumerate_racks(std::size_t n, bool use_pruning) {
  return enumerate(n, use_pruning, Deadline(std::numeric_limits<double>::infinity()));
}

bool compatible(const OpTable &a, const OpTable &b) {
  return !distributive_witness(a, b) && !distributive_witness(b, a);
}

CompatibilityGraph compatibility_graph(const RackCatalog &catalog) {
  const std::size_t k = catalog.racks.size();
  CompatibilityGraph adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (compatible(catalog.racks[i], catalog.racks[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  for (auto &row : adj)
    std::sort(row.begin(), row.end());
  return adj;
}

OpTable canonical_form(const OpTable &op) {
  if (op.size() > kCanonicalBound)
    throw std::domain_error("canonical form is bounded to n <= " + std::to_string(kCanonicalBound));
  OpTable least = op;
  std::vector<Element> p(op.size());
  std::iota(p.begin(), p.end(), Element{0});
  do {
    least = std::min(least, relabel(op, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return least;
}

std::vector<OpTable> canonical_form(std::span<const OpTable> ops) {
  if (ops.empty())
    return {};
  const std::size_t n = ops.front().size();
  if (n > kCanonicalBound)
    throw std::domain_error("canonical form is bounded to n <= " + std::to_string(kCanonicalBound));
  for (const auto &op : ops)
    require_same_carrier(ops.front(), op);
  std::vector<OpTable> least(ops.begin(), ops.end());
  std::sort(least.begin(), least.end());
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    std::vector<OpTable> image;
    image.reserve(ops.size());
    for (const auto &op : ops)
      image.push_back(relabel(op, p));
    std::sort(image.begin(), image.end());
    if (image < least)
      least = std::move(image);
  } while (std::next_permutation(p.begin(), p.end()));
  return least;
}

std::string to_string(Conclusion c) {
  switch (c) {
  case Conclusion::commutative_only:
    return "commutative-only";
  case Conclusion::nonabelian_found:
    return "nonabelian-found";
  case Conclusion::partial:
    return "partial";
  }
  return "partial";
}

SearchReport certify_no_nonabelian(std::size_t n, const SearchOptions &opts) {
  if (n < 1 || n > kPrunedBound)
    throw std::domain_error("search supports 1 <= n <= " + std::to_string(kPrunedBound));
  const auto start = Clock::now();
  const Deadline deadline(opts.budget_seconds);
  ClosureOptions closure_opts;
  closure_opts.budget = opts.closure_budget;

  SearchReport report;
  report.n = n;

  const auto record = [&](const OpTable &a, const OpTable &b) {
    NonabelianGroup found{a, b, 0};
    try {
      found.order = close_group(DistributiveSet(n, {a, b}), closure_opts).ops.size();
    } catch (const BudgetExceeded &) {
      // order 0 marks a closure larger than the budget
    }
    report.nonabelian_groups.push_back(std::move(found));
  };

  for (const auto &[a, b] : opts.seed_pairs) {
    if (a.size() != n || b.size() != n)
      throw std::invalid_argument("seed pair does not live on a carrier of size " +
                                  std::to_string(n));
    ++report.pairs_checked;
    if (!is_rack(a) || !is_rack(b) || !compatible(a, b))
      continue;
    ++report.compatible_pairs;
    if (!commutes(a, b)) {
      ++report.noncommuting_pairs;
      record(a, b);
    }
  }

  const auto finish = [&](bool complete) {
    if (report.noncommuting_pairs > 0)
      report.conclusion = Conclusion::nonabelian_found;
    else
      report.conclusion = complete ? Conclusion::commutative_only : Conclusion::partial;
    report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
  };

  if (report.noncommuting_pairs > 0 && !opts.exhaustive)
    return finish(false);

  RackCatalog catalog;
  try {
    catalog = enumerate(n, opts.prune, deadline);
  } catch (const TimeUp &) {
    return finish(false);
  }
  report.catalog_built = true;
  report.racks_found = catalog.racks.size();
  report.rack_classes = catalog.canonical.size();
  report.nodes = catalog.nodes;
  report.pruned = catalog.pruned;

  const auto &reps = catalog.canonical;
  std::vector<SweepSlice> slices(reps.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};
  const auto worker = [&] {
    for (std::size_t r = next++; r < reps.size() && !out_of_time; r = next++) {
      SweepSlice &s = slices[r];
      for (std::size_t j = 0; j < catalog.racks.size(); ++j) {
        if ((j & 0xff) == 0 && deadline.passed()) {
          out_of_time = true;
          return;
        }
        ++s.checked;
        const OpTable &b = catalog.racks[j];
        if (!compatible(reps[r], b))
          continue;
        ++s.compatible;
        if (!commutes(reps[r], b)) {
          ++s.noncommuting;
          if (s.examples.size() < opts.max_examples)
            s.examples.push_back(j);
        }
      }
      s.done = true;
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
  }

  bool complete = true;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const SweepSlice &s = slices[r];
    complete = complete && s.done;
    report.pairs_checked += s.checked;
    report.compatible_pairs += s.compatible;
    report.noncommuting_pairs += s.noncommuting;
    for (auto j : s.examples)
      if (report.nonabelian_groups.size() < opts.max_examples)
        record(reps[r], catalog.racks[j]);
  }
  return finish(complete);
}

} // namespace shelf
