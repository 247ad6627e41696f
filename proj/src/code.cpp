#include "icsi/code.hpp"

#include <algorithm>
#include <string>

#include "icsi/kernels.hpp"

namespace icsi {

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

std::size_t WeightDistribution::min_nonzero_weight() const noexcept {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return 0;
}

LinearCode LinearCode::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) throw Error(Errc::EmptyInput, "a code needs at least one spanning row");
  return from_generator(Matrix::from_rows(rows));
}

LinearCode LinearCode::from_generator(const Matrix& spanning_rows) {
  if (spanning_rows.rows() == 0 || spanning_rows.cols() == 0)
    throw Error(Errc::EmptyInput, "a code needs at least one spanning row");
  RrefResult rr = rref(spanning_rows);
  if (rr.rank == 0) throw Error(Errc::ZeroCode, "all spanning rows are zero");
  std::vector<std::size_t> keep(rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i) keep[i] = i;
  return LinearCode(rr.reduced.select_rows(keep), std::move(rr.pivots));
}

Vector LinearCode::encode_message(const Vector& message) const { return left_multiply(message, generator_); }

bool LinearCode::contains(const Vector& v) const {
  if (v.size() != length()) throw Error(Errc::DimensionMismatch, "vector length differs from code length");
  return column_span_contains(generator_.transpose(), v);
}

std::uint64_t enumerable_size(const LinearCode& code) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    total *= code.field()->order();
    if (total > kEnumerationLimit)
      throw Error(Errc::TooLargeToEnumerate,
                  "q^k exceeds 2^24 for k = " + std::to_string(code.dimension()) + " over " + code.field()->name());
  }
  return total;
}

WeightDistribution weight_distribution(const LinearCode& code) {
  enumerable_size(code);
  return {kernels::omp::weight_counts(code.generator())};
}

std::size_t min_distance(const LinearCode& code) { return weight_distribution(code).min_nonzero_weight(); }

LinearCode dual(const LinearCode& code) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (k == n) throw Error(Errc::ZeroDual, "the dual of a full-rank code is the zero code");
  const Matrix& g = code.generator();
  const Field& f = g.f();
  const auto& pivots = code.information_set();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> rows;
  rows.reserve(n - k);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector h(code.field(), n);
    h[free] = 1;
    for (std::size_t i = 0; i < k; ++i) h[pivots[i]] = f.neg(g(i, free));
    rows.push_back(std::move(h));
  }
  return LinearCode::from_rows(rows);
}

std::size_t dual_distance(const LinearCode& code) {
  if (code.dimension() == code.length()) return code.length() + 1;
  return min_distance(dual(code));
}

std::uint64_t TupleCounts::count(std::span<const elem_t> tuple) const {
  if (tuple.size() != arity) throw Error(Errc::DimensionMismatch, "tuple arity mismatch");
  std::uint64_t idx = 0;
  for (elem_t v : tuple) {
    if (v >= q) throw Error(Errc::InvalidArgument, "tuple entry outside the field");
    idx = idx * q + v;
  }
  return counts[idx];
}

bool TupleCounts::is_uniform() const noexcept {
  return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
}

TupleCounts oa_tuple_counts(const LinearCode& code, std::span<const std::size_t> columns) {
  enumerable_size(code);
  std::uint64_t space = 1;
  for (std::size_t c : columns) {
    if (c >= code.length()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(c));
    space *= code.field()->order();
    if (space > kEnumerationLimit) throw Error(Errc::TooLargeToEnumerate, "too many tuples");
  }
  return {code.field()->order(), columns.size(), kernels::omp::tuple_counts(code.generator(), columns)};
}

LinearCode reed_solomon(std::size_t n, std::size_t k, FieldRef field) {
  if (k < 1 || k > n) throw Error(Errc::InvalidArgument, "need 1 <= k <= n");
  if (field->order() < n)
    throw Error(Errc::FieldTooSmall, field->name() + " has fewer than " + std::to_string(n) + " evaluation points");
  const Field& f = *field;
  Matrix vandermonde(field, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto point = static_cast<elem_t>(j);
    elem_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      vandermonde(i, j) = power;
      power = f.mul(power, point);
    }
  }
  return LinearCode::from_generator(vandermonde);
}

bool is_mds(const LinearCode& code) { return min_distance(code) == code.length() - code.dimension() + 1; }

}  // namespace icsi
