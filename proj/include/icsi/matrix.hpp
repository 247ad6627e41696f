#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "icsi/field.hpp"

namespace icsi {

/// A row vector over F_q. Library indices are 0-based; file formats and the
/// CLI translate to 1-based at the boundary.
class Vector {
 public:
  Vector(FieldRef field, std::size_t length);
  Vector(FieldRef field, std::vector<elem_t> values);
  /// Braced literals are values, so Vector(f, {3}) is the one-element vector (3).
  Vector(FieldRef field, std::initializer_list<elem_t> values)
      : Vector(std::move(field), std::vector<elem_t>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const FieldRef& field() const noexcept { return field_; }
  std::span<const elem_t> values() const noexcept { return values_; }
  std::span<elem_t> values() noexcept { return values_; }

  elem_t operator[](std::size_t i) const noexcept { return values_[i]; }
  elem_t& operator[](std::size_t i) noexcept { return values_[i]; }
  elem_t at(std::size_t i) const;

  bool is_zero() const noexcept;
  /// supp(v), ascending.
  std::vector<std::size_t> support() const;
  std::size_t weight() const noexcept;

  friend bool operator==(const Vector& a, const Vector& b) noexcept {
    return same_field(a.field_, b.field_) && a.values_ == b.values_;
  }

 private:
  FieldRef field_;
  std::vector<elem_t> values_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(elem_t c, const Vector& v);
elem_t dot(const Vector& a, const Vector& b);
std::size_t hamming_distance(const Vector& a, const Vector& b);

/// The unit vector e_i of length n (i is 0-based).
Vector unit_vector(std::size_t i, std::size_t n, FieldRef field);

/// Row-major k x n matrix over F_q.
class Matrix {
 public:
  Matrix(FieldRef field, std::size_t rows, std::size_t cols);
  Matrix(FieldRef field, std::size_t rows, std::size_t cols, std::vector<elem_t> row_major);
  static Matrix from_rows(std::span<const Vector> rows);
  static Matrix identity(FieldRef field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldRef& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }

  elem_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  elem_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const elem_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<elem_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;
  std::span<const elem_t> data() const noexcept { return data_; }

  Matrix transpose() const;
  /// Columns in the given order.
  Matrix select_columns(std::span<const std::size_t> cols) const;
  /// Rows in the given order.
  Matrix select_rows(std::span<const std::size_t> rows) const;
  /// [this | extra] side by side.
  Matrix append_columns(const Matrix& extra) const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldRef field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<elem_t> data_;
};

/// M v^T as a vector of length rows().
Vector multiply(const Matrix& m, const Vector& v);
/// y M as a vector of length cols().
Vector left_multiply(const Vector& y, const Matrix& m);

struct RrefResult {
  Matrix reduced;                   // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, strictly increasing
};

/// Reduced row echelon form. The pivot for each column is the topmost
/// remaining row with a nonzero entry; pivots are scaled to 1.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct Solution {
  Vector particular;            // free variables set to zero
  std::vector<Vector> kernel;   // basis of { y : A y^T = 0 }, one per free column
};

/// Solves A y^T = b^T. nullopt when the system is inconsistent. The solution
/// set has q^(cols - rank) elements: particular + span(kernel).
std::optional<Solution> solve(const Matrix& a, const Vector& b);

/// True iff v lies in the span of the columns of `cols`.
bool column_span_contains(const Matrix& cols, const Vector& v);

}  // namespace icsi
