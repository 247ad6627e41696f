#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>

#include "icsi/kernels.hpp"

namespace icsi::kernels {

namespace {

Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::size_t rank_of_columns(const Matrix& g, Mask cols) {
  if (cols == 0) return 0;
  const auto idx = mask_indices(cols);
  return rank(g.select_columns(idx));
}

// Subsets of `universe` with `size` elements, in increasing order of the
// compressed mask.
template <typename Fn>
bool for_each_subset(Mask universe, std::size_t size, Fn&& fn) {
  const auto members = mask_indices(universe);
  for (Mask local : subsets_of_size(members.size(), size)) {
    Mask m = 0;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (local & (Mask{1} << j)) m |= Mask{1} << members[j];
    if (!fn(m)) return false;
  }
  return true;
}

std::uint64_t power(std::uint32_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

// Assignment number `a` over the free coordinates (first free index least
// significant) written into x.
void write_assignment(std::uint64_t a, std::span<const std::size_t> free, std::uint32_t q, std::vector<elem_t>& x) {
  for (std::size_t f : free) {
    x[f] = static_cast<elem_t>(a % q);
    a /= q;
  }
}

bool matches(const Matrix& g, const std::vector<elem_t>& x, std::span<const elem_t> s) {
  const Field& f = g.f();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const auto row = g.row(r);
    elem_t acc = 0;
    for (std::size_t c = 0; c < g.cols(); ++c) acc = f.add(acc, f.mul(row[c], x[c]));
    if (acc != s[r]) return false;
  }
  return true;
}

std::uint64_t block_value(const std::vector<elem_t>& x, std::span<const std::size_t> block, std::uint32_t q) {
  std::uint64_t v = 0;
  for (std::size_t b : block) v = v * q + x[b];
  return v;
}

struct PosteriorSetup {
  std::vector<std::size_t> free;
  std::vector<std::size_t> block;
  std::vector<elem_t> base;
  std::uint64_t candidates;
  std::uint64_t outcomes;
};

PosteriorSetup setup_posterior(const Matrix& g, Mask known, std::span<const elem_t> known_values, Mask block) {
  const std::uint32_t q = g.f().order();
  PosteriorSetup p;
  p.free = mask_indices(full_mask(g.cols()) & ~known);
  p.block = mask_indices(block);
  p.base.assign(g.cols(), 0);
  for (std::size_t i : mask_indices(known)) p.base[i] = known_values[i];
  p.candidates = power(q, p.free.size());
  p.outcomes = power(q, p.block.size());
  return p;
}

}  // namespace

std::vector<Mask> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<Mask> out;
  if (size > n || n >= 64) return out;
  if (size == 0) return {Mask{0}};
  const Mask limit = Mask{1} << n;
  Mask m = (Mask{1} << size) - 1;
  while (m < limit) {
    out.push_back(m);
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

bool block_hidden(const Matrix& g, Mask known, Mask block) {
  const Mask rest = full_mask(g.cols()) & ~known & ~block;
  return rank_of_columns(g, rest) == rank_of_columns(g, rest | block);
}

std::size_t block_level_against(const Matrix& g, Mask known, std::size_t cap) {
  const Mask unknown = full_mask(g.cols()) & ~known;
  cap = std::min<std::size_t>(cap, static_cast<std::size_t>(std::popcount(unknown)));
  for (std::size_t b = 1; b <= cap; ++b) {
    const bool all_hidden = for_each_subset(unknown, b, [&](Mask block) { return block_hidden(g, known, block); });
    if (!all_hidden) return b - 1;
  }
  return cap;
}

bool fully_recoverable(const Matrix& g, Mask known) {
  const Mask unknown = full_mask(g.cols()) & ~known;
  return rank_of_columns(g, unknown) == static_cast<std::size_t>(std::popcount(unknown));
}

namespace serial {

std::size_t block_level(const Matrix& g, std::size_t t) {
  const auto adversaries = subsets_of_size(g.cols(), t);
  return block_level(g, adversaries, g.cols() - t);
}

std::size_t block_level(const Matrix& g, std::span<const Mask> adversaries, std::size_t cap) {
  const Mask all = full_mask(g.cols());
  for (std::size_t b = 1; b <= cap; ++b) {
    for (Mask known : adversaries) {
      const Mask unknown = all & ~known;
      if (static_cast<std::size_t>(std::popcount(unknown)) < b) return b - 1;
      const bool ok = for_each_subset(unknown, b, [&](Mask block) { return block_hidden(g, known, block); });
      if (!ok) return b - 1;
    }
  }
  return cap;
}

InsecuritySweep insecurity(const Matrix& g, std::span<const Mask> adversaries) {
  InsecuritySweep out;
  for (Mask known : adversaries) {
    ++out.examined;
    if (fully_recoverable(g, known)) {
      ++out.broken;
      if (!out.first_broken) out.first_broken = known;
    }
  }
  return out;
}

std::vector<std::uint64_t> posterior_counts(const Matrix& g, Mask known, std::span<const elem_t> known_values,
                                            Mask block, std::span<const elem_t> s) {
  const std::uint32_t q = g.f().order();
  const PosteriorSetup p = setup_posterior(g, known, known_values, block);
  std::vector<std::uint64_t> counts(p.outcomes, 0);
  std::vector<elem_t> x = p.base;
  for (std::uint64_t a = 0; a < p.candidates; ++a) {
    write_assignment(a, p.free, q, x);
    if (matches(g, x, s)) ++counts[block_value(x, p.block, q)];
  }
  return counts;
}

}  // namespace serial

namespace omp {

std::size_t block_level(const Matrix& g, std::size_t t) {
  const auto adversaries = subsets_of_size(g.cols(), t);
  return block_level(g, adversaries, g.cols() - t);
}

std::size_t block_level(const Matrix& g, std::span<const Mask> adversaries, std::size_t cap) {
  std::atomic<std::size_t> best{cap};
  const auto count = static_cast<std::int64_t>(adversaries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const std::size_t current = best.load(std::memory_order_relaxed);
    if (current == 0) continue;
    const std::size_t level = block_level_against(g, adversaries[static_cast<std::size_t>(i)], current);
    std::size_t seen = best.load(std::memory_order_relaxed);
    while (level < seen && !best.compare_exchange_weak(seen, level, std::memory_order_relaxed)) {
    }
  }
  return best.load();
}

InsecuritySweep insecurity(const Matrix& g, std::span<const Mask> adversaries) {
  std::vector<unsigned char> broken(adversaries.size(), 0);
  const auto count = static_cast<std::int64_t>(adversaries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i)
    broken[static_cast<std::size_t>(i)] = fully_recoverable(g, adversaries[static_cast<std::size_t>(i)]) ? 1 : 0;
  InsecuritySweep out;
  for (std::size_t i = 0; i < adversaries.size(); ++i) {
    ++out.examined;
    if (broken[i] != 0) {
      ++out.broken;
      if (!out.first_broken) out.first_broken = adversaries[i];
    }
  }
  return out;
}

std::vector<std::uint64_t> posterior_counts(const Matrix& g, Mask known, std::span<const elem_t> known_values,
                                            Mask block, std::span<const elem_t> s) {
  const std::uint32_t q = g.f().order();
  const PosteriorSetup p = setup_posterior(g, known, known_values, block);
  std::vector<std::uint64_t> counts(p.outcomes, 0);
  const auto candidates = static_cast<std::int64_t>(p.candidates);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(p.outcomes, 0);
    std::vector<elem_t> x = p.base;
#pragma omp for schedule(static)
    for (std::int64_t a = 0; a < candidates; ++a) {
      write_assignment(static_cast<std::uint64_t>(a), p.free, q, x);
      if (matches(g, x, s)) ++local[block_value(x, p.block, q)];
    }
#pragma omp critical(icsi_posterior_merge)
    for (std::uint64_t o = 0; o < p.outcomes; ++o) counts[o] += local[o];
  }
  return counts;
}

}  // namespace omp

}  // namespace icsi::kernels
