#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icsi/matrix.hpp"

namespace icsi {

/// Codeword enumeration is refused beyond q^k = 2^24.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

/// counts[w] = number of codewords of Hamming weight w, w = 0..n.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  /// Smallest w > 0 with counts[w] > 0; 0 if there is none.
  std::size_t min_nonzero_weight() const noexcept;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// An [n, k]_q linear code held by its canonical generator: the nonzero rows
/// of the rref of whatever spanning set it was built from.
class LinearCode {
 public:
  /// Dependent and repeated rows are tolerated; k becomes their rank.
  /// Throws EmptyInput for no rows and ZeroCode when every row is zero.
  static LinearCode from_rows(std::span<const Vector> rows);
  static LinearCode from_generator(const Matrix& spanning_rows);

  const Matrix& generator() const noexcept { return generator_; }
  const FieldRef& field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  /// Pivot column of each generator row.
  const std::vector<std::size_t>& information_set() const noexcept { return pivots_; }

  /// message . G
  Vector encode_message(const Vector& message) const;
  /// Row-space membership.
  bool contains(const Vector& v) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) noexcept { return a.generator_ == b.generator_; }

 private:
  LinearCode(Matrix g, std::vector<std::size_t> pivots) : generator_(std::move(g)), pivots_(std::move(pivots)) {}
  Matrix generator_;
  std::vector<std::size_t> pivots_;
};

/// q^k, or throws TooLargeToEnumerate above kEnumerationLimit.
std::uint64_t enumerable_size(const LinearCode& code);

std::size_t min_distance(const LinearCode& code);
WeightDistribution weight_distribution(const LinearCode& code);

/// Generator of the dual code. Throws ZeroDual when k = n.
LinearCode dual(const LinearCode& code);

/// d of the dual code; n + 1 when k = n (the dual is the zero code).
std::size_t dual_distance(const LinearCode& code);

/// Number of codewords showing each r-tuple on the given columns. Tuples are
/// indexed base q with the first listed column most significant.
struct TupleCounts {
  std::uint32_t q = 2;
  std::size_t arity = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t count(std::span<const elem_t> tuple) const;
  /// True when every q^r tuple occurs equally often.
  bool is_uniform() const noexcept;
};

TupleCounts oa_tuple_counts(const LinearCode& code, std::span<const std::size_t> columns);

/// Systematic (I_k | P) generator of the Reed-Solomon code evaluating
/// polynomials of degree < k at the first n field elements 0, 1, ..., n-1.
LinearCode reed_solomon(std::size_t n, std::size_t k, FieldRef field);

/// d = n - k + 1.
bool is_mds(const LinearCode& code);

}  // namespace icsi
