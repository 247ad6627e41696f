#include <gtest/gtest.h>

#include <set>

#include "icsi/matrix.hpp"
#include "icsi/rng.hpp"

using namespace icsi;

namespace {

Matrix rows_of(const FieldRef& f, std::vector<std::vector<elem_t>> rows) {
  std::vector<Vector> v;
  for (auto& r : rows) v.emplace_back(f, std::move(r));
  return Matrix::from_rows(v);
}

// |row space| by enumerating every combination.
std::size_t row_space_size(const Matrix& m) {
  const std::uint32_t q = m.f().order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) total *= q;
  std::set<std::vector<elem_t>> words;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<elem_t> w(m.cols(), 0);
    std::uint64_t rest = idx;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto c = static_cast<elem_t>(rest % q);
      rest /= q;
      for (std::size_t j = 0; j < m.cols(); ++j) w[j] = m.f().add(w[j], m.f().mul(c, m(r, j)));
    }
    words.insert(w);
  }
  return words.size();
}

Matrix random_matrix(SplitMix64& rng, const FieldRef& f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<elem_t>(rng.below(f->order()));
  return m;
}

}  // namespace

TEST(Rref, Identity) {
  auto f = Field::make(2);
  const auto r = rref(Matrix::identity(f, 3));
  EXPECT_EQ(r.reduced, Matrix::identity(f, 3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, DependentRow) {
  auto f = Field::make(2);
  EXPECT_EQ(rank(rows_of(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 2u);
}

TEST(Rref, ZeroMatrix) { EXPECT_EQ(rank(Matrix(Field::make(2), 1, 1)), 0u); }

TEST(Rref, RankMatchesRowSpaceSize) {
  SplitMix64 rng(17);
  for (auto f : {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
      const Matrix m = random_matrix(rng, f, r, c);
      const auto red = rref(m);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < red.rank; ++i) expect *= f->order();
      ASSERT_EQ(row_space_size(m), expect);
      ASSERT_EQ(row_space_size(red.reduced), expect);
      for (std::size_t i = 0; i < red.rank; ++i) {
        ASSERT_EQ(red.reduced(i, red.pivots[i]), 1);
        for (std::size_t k = 0; k < r; ++k)
          if (k != i) ASSERT_EQ(red.reduced(k, red.pivots[i]), 0);
      }
    }
  }
}

TEST(Solve, IdentitySystem) {
  auto f = Field::make(3);
  const auto s = solve(Matrix::identity(f, 2), Vector(f, {2, 1}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, Vector(f, {2, 1}));
  EXPECT_TRUE(s->kernel.empty());
}

TEST(Solve, Underdetermined) {
  auto f = Field::make(2);
  const auto s = solve(rows_of(f, {{1, 1}}), Vector(f, {1}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, Vector(f, {1, 0}));
  ASSERT_EQ(s->kernel.size(), 1u);
  EXPECT_EQ(s->kernel[0], Vector(f, {1, 1}));
}

TEST(Solve, Inconsistent) {
  auto f = Field::make(2);
  EXPECT_FALSE(solve(rows_of(f, {{0, 0}}), Vector(f, {1})));
}

TEST(Solve, RandomSystemsAgreeWithEnumeration) {
  SplitMix64 rng(5);
  for (auto f : {Field::make(2), Field::make(3), Field::make(2, 2)}) {
    const std::uint32_t q = f->order();
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng.below(3), c = 1 + rng.below(4);
      const Matrix a = random_matrix(rng, f, r, c);
      Vector b(f, r);
      for (std::size_t i = 0; i < r; ++i) b[i] = static_cast<elem_t>(rng.below(q));
      std::uint64_t total = 1, solutions = 0;
      for (std::size_t i = 0; i < c; ++i) total *= q;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector y(f, c);
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < c; ++i, rest /= q) y[i] = static_cast<elem_t>(rest % q);
        if (multiply(a, y) == b) ++solutions;
      }
      const auto s = solve(a, b);
      if (solutions == 0) {
        ASSERT_FALSE(s);
        continue;
      }
      ASSERT_TRUE(s);
      ASSERT_EQ(multiply(a, s->particular), b);
      std::uint64_t expect = 1;
      for (std::size_t i = 0; i < s->kernel.size(); ++i) expect *= q;
      ASSERT_EQ(solutions, expect);
      for (const auto& k : s->kernel) ASSERT_TRUE(multiply(a, k).is_zero());
    }
  }
}

TEST(ColumnSpan, Examples) {
  auto f2 = Field::make(2);
  EXPECT_TRUE(column_span_contains(Matrix::identity(f2, 2), Vector(f2, {1, 1})));
  EXPECT_FALSE(column_span_contains(Matrix(f2, 2, 1, {1, 0}), Vector(f2, {0, 1})));
  auto f3 = Field::make(3);
  EXPECT_TRUE(column_span_contains(Matrix(f3, 2, 2, {1, 2, 1, 2}), Vector(f3, {2, 2})));
}

TEST(UnitVector, Examples) {
  EXPECT_EQ(unit_vector(0, 3, Field::make(2)), Vector(Field::make(2), {1, 0, 0}));
  EXPECT_EQ(unit_vector(2, 3, Field::make(3)), Vector(Field::make(3), {0, 0, 1}));
  try {
    unit_vector(3, 3, Field::make(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(Vector, Basics) {
  auto f = Field::make(3);
  const Vector a(f, {1, 2, 0}), b(f, {2, 2, 1});
  EXPECT_EQ(a + b, Vector(f, {0, 1, 1}));
  EXPECT_EQ(a - b, Vector(f, {2, 0, 2}));
  EXPECT_EQ(scale(2, a), Vector(f, {2, 1, 0}));
  EXPECT_EQ(dot(a, b), 0);  // 2 + 4 = 6
  EXPECT_EQ(hamming_distance(a, b), 2u);
  EXPECT_EQ(a.support(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.weight(), 2u);
  EXPECT_THROW(Vector(f, {3}), Error);
  EXPECT_THROW((void)(a + Vector(f, {1})), Error);
}

TEST(Matrix, MultiplyAndSelect) {
  auto f = Field::make(2);
  const Matrix g = rows_of(f, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(multiply(g, Vector(f, {1, 1, 0})), Vector(f, {1, 1}));
  EXPECT_EQ(left_multiply(Vector(f, {1, 1}), g), Vector(f, {1, 1, 0}));
  const std::vector<std::size_t> cols{2, 0};
  EXPECT_EQ(g.select_columns(cols), rows_of(f, {{1, 1}, {1, 0}}));
  EXPECT_EQ(g.transpose().transpose(), g);
  EXPECT_EQ(g.column_vector(2), Vector(f, {1, 1}));
}
