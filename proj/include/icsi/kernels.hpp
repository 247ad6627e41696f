#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial::` is the
// plain reference kept for testing and benchmarking, `omp::` partitions the
// work across OpenMP threads and merges by exact integer addition (or min /
// boolean-and), so both produce identical results for any thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "icsi/matrix.hpp"

namespace icsi::kernels {

/// Walks the codewords m.G for message indices [start, ...) in mixed-radix
/// order: message digit i (least significant first) is the coefficient of
/// generator row i. Each step updates the codeword in O(n) amortized.
class CodewordCursor {
 public:
  CodewordCursor(const Matrix& generator, std::uint64_t start);

  std::uint64_t index() const noexcept { return index_; }
  std::span<const elem_t> word() const noexcept { return word_; }
  std::span<const elem_t> message() const noexcept { return digits_; }
  void advance();

 private:
  const Matrix* g_;
  const Field* f_;
  std::uint64_t index_;
  std::vector<elem_t> digits_;
  std::vector<elem_t> word_;
};

/// Bit i set <=> index i in the subset. Sweeps require n <= 64.
using Mask = std::uint64_t;

std::vector<Mask> subsets_of_size(std::size_t n, std::size_t size);
std::vector<std::size_t> mask_indices(Mask m);

// Lemma-3 style query: E = [n] \ (known | block); no information about the
// block iff rank(G_E) = rank(G_{E u B}).
bool block_hidden(const Matrix& g, Mask known, Mask block);

// Largest b <= cap such that every b-subset of the complement of `known` is
// hidden; stops at the first leaking size.
std::size_t block_level_against(const Matrix& g, Mask known, std::size_t cap);

// True iff the adversary knowing `known` can recover every other index.
bool fully_recoverable(const Matrix& g, Mask known);

struct InsecuritySweep {
  std::uint64_t examined = 0;
  std::uint64_t broken = 0;
  std::optional<Mask> first_broken;  // in the order of the input list
};

namespace serial {

std::vector<std::uint64_t> weight_counts(const Matrix& g);
std::vector<std::uint64_t> tuple_counts(const Matrix& g, std::span<const std::size_t> columns);
/// Smallest message index whose codeword has weight w.
std::optional<std::uint64_t> first_of_weight(const Matrix& g, std::size_t w);
/// Largest b such that every (X_A, B) with |X_A| = t, |B| = b is hidden,
/// checked size by size straight from the definition.
std::size_t block_level(const Matrix& g, std::size_t t);
std::size_t block_level(const Matrix& g, std::span<const Mask> adversaries, std::size_t cap);
InsecuritySweep insecurity(const Matrix& g, std::span<const Mask> adversaries);
/// Tally of x_B over x in F_q^n with x_i = known_values[i] on the known
/// indices and G x^T = s^T. known_values has length n; entries outside
/// `known` are ignored. Tally index: x_B read base q, lowest block index most
/// significant.
std::vector<std::uint64_t> posterior_counts(const Matrix& g, Mask known, std::span<const elem_t> known_values,
                                            Mask block, std::span<const elem_t> s);

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> weight_counts(const Matrix& g);
std::vector<std::uint64_t> tuple_counts(const Matrix& g, std::span<const std::size_t> columns);
std::optional<std::uint64_t> first_of_weight(const Matrix& g, std::size_t w);
std::size_t block_level(const Matrix& g, std::size_t t);
std::size_t block_level(const Matrix& g, std::span<const Mask> adversaries, std::size_t cap);
InsecuritySweep insecurity(const Matrix& g, std::span<const Mask> adversaries);
std::vector<std::uint64_t> posterior_counts(const Matrix& g, Mask known, std::span<const elem_t> known_values,
                                            Mask block, std::span<const elem_t> s);

}  // namespace omp

}  // namespace icsi::kernels
