#include "icsi/matrix.hpp"

#include <algorithm>
#include <string>

namespace icsi {

namespace {

void require_same(const FieldRef& a, const FieldRef& b) {
  if (!same_field(a, b)) throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

void require_length(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(Errc::DimensionMismatch, "length " + std::to_string(a) + " vs " + std::to_string(b));
}

void check_values(const Field& f, std::span<const elem_t> values) {
  for (elem_t v : values)
    if (!f.contains(v)) throw Error(Errc::InvalidArgument, "value " + std::to_string(v) + " not in " + f.name());
}

}  // namespace

Vector::Vector(FieldRef field, std::size_t length) : field_(std::move(field)), values_(length, 0) {}

Vector::Vector(FieldRef field, std::vector<elem_t> values) : field_(std::move(field)), values_(std::move(values)) {
  check_values(*field_, values_);
}

elem_t Vector::at(std::size_t i) const {
  if (i >= values_.size()) throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i));
  return values_[i];
}

bool Vector::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](elem_t v) { return v == 0; });
}

std::vector<std::size_t> Vector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != 0) s.push_back(i);
  return s;
}

std::size_t Vector::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](elem_t v) { return v != 0; }));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same(a.field(), b.field());
  require_length(a.size(), b.size());
  Vector out(a.field(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.field()->add(a[i], b[i]);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same(a.field(), b.field());
  require_length(a.size(), b.size());
  Vector out(a.field(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.field()->sub(a[i], b[i]);
  return out;
}

Vector scale(elem_t c, const Vector& v) {
  Vector out(v.field(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.field()->mul(c, v[i]);
  return out;
}

elem_t dot(const Vector& a, const Vector& b) {
  require_same(a.field(), b.field());
  require_length(a.size(), b.size());
  const Field& f = *a.field();
  elem_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::size_t hamming_distance(const Vector& a, const Vector& b) { return (a - b).weight(); }

Vector unit_vector(std::size_t i, std::size_t n, FieldRef field) {
  if (i >= n) throw Error(Errc::IndexOutOfRange, "unit vector index " + std::to_string(i) + " >= " + std::to_string(n));
  Vector e(std::move(field), n);
  e[i] = 1;
  return e;
}

Matrix::Matrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldRef field, std::size_t rows, std::size_t cols, std::vector<elem_t> row_major)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw Error(Errc::DimensionMismatch, "matrix data size does not match shape");
  check_values(*field_, data_);
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) throw Error(Errc::EmptyInput, "no rows");
  const std::size_t n = rows.front().size();
  Matrix m(rows.front().field(), rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same(rows[r].field(), m.field_);
    require_length(rows[r].size(), n);
    std::copy(rows[r].values().begin(), rows[r].values().end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::identity(FieldRef field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  if (r >= rows_) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(r));
  return Vector(field_, std::vector<elem_t>(row(r).begin(), row(r).end()));
}

Vector Matrix::column_vector(std::size_t c) const {
  if (c >= cols_) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(c));
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(cols[j]));
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(rows[i]));
    std::copy(row(rows[i]).begin(), row(rows[i]).end(), out.row(i).begin());
  }
  return out;
}

Matrix Matrix::append_columns(const Matrix& extra) const {
  require_same(field_, extra.field_);
  require_length(rows_, extra.rows_);
  Matrix out(field_, rows_, cols_ + extra.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(row(r).begin(), row(r).end(), out.row(r).begin());
    std::copy(extra.row(r).begin(), extra.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(cols_));
  }
  return out;
}

Vector multiply(const Matrix& m, const Vector& v) {
  require_same(m.field(), v.field());
  require_length(m.cols(), v.size());
  const Field& f = m.f();
  Vector out(m.field(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    elem_t acc = 0;
    const auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(row[c], v[c]));
    out[r] = acc;
  }
  return out;
}

Vector left_multiply(const Vector& y, const Matrix& m) {
  require_same(m.field(), y.field());
  require_length(m.rows(), y.size());
  const Field& f = m.f();
  Vector out(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (y[r] == 0) continue;
    const auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(y[r], row[c]));
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const Field& f = a.f();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead) std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(lead).begin());
    const elem_t inv = f.inv(a(lead, col));
    auto lrow = a.row(lead);
    for (std::size_t c = col; c < a.cols(); ++c) lrow[c] = f.mul(lrow[c], inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const elem_t factor = a(r, col);
      if (factor == 0) continue;
      auto row = a.row(r);
      for (std::size_t c = col; c < a.cols(); ++c) row[c] = f.sub(row[c], f.mul(factor, lrow[c]));
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Solution> solve(const Matrix& a, const Vector& b) {
  require_same(a.field(), b.field());
  require_length(a.rows(), b.size());
  const Field& f = a.f();
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r];
  }
  const RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;

  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;

  Solution sol{Vector(a.field(), n), {}};
  for (std::size_t i = 0; i < rr.rank; ++i) sol.particular[rr.pivots[i]] = rr.reduced(i, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector k(a.field(), n);
    k[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) k[rr.pivots[i]] = f.neg(rr.reduced(i, free));
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

bool column_span_contains(const Matrix& cols, const Vector& v) {
  require_same(cols.field(), v.field());
  require_length(cols.rows(), v.size());
  return solve(cols, v).has_value();
}

}  // namespace icsi
