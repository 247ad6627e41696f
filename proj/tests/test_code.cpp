#include <gtest/gtest.h>

#include <algorithm>

#include "icsi/code.hpp"
#include "icsi/verify.hpp"

using namespace icsi;

namespace {

LinearCode code_of(const FieldRef& f, std::vector<std::vector<elem_t>> rows) {
  std::vector<Vector> v;
  for (auto& r : rows) v.emplace_back(f, std::move(r));
  return LinearCode::from_rows(v);
}

LinearCode hamming() {
  auto f = Field::make(2);
  return code_of(f, {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}});
}

std::vector<Vector> all_vectors(const FieldRef& f, std::size_t n) {
  std::vector<Vector> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f->order();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vector v(f, n);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i, rest /= f->order()) v[i] = static_cast<elem_t>(rest % f->order());
    out.push_back(std::move(v));
  }
  return out;
}

// Brute force over F_q^n: the code is every vector in the row space, the dual
// every vector orthogonal to all generator rows.
struct Brute {
  std::vector<std::uint64_t> weights;
  std::size_t dual_size = 0;
  std::size_t dual_d = 0;
};

Brute brute(const LinearCode& c) {
  const std::size_t n = c.length();
  Brute b;
  b.weights.assign(n + 1, 0);
  b.dual_d = n + 1;
  for (const Vector& v : all_vectors(c.field(), n)) {
    if (c.contains(v)) ++b.weights[v.weight()];
    bool orth = true;
    for (std::size_t r = 0; r < c.dimension() && orth; ++r) orth = dot(c.generator().row_vector(r), v) == 0;
    if (orth) {
      ++b.dual_size;
      if (!v.is_zero()) b.dual_d = std::min(b.dual_d, v.weight());
    }
  }
  return b;
}

}  // namespace

TEST(LinearCode, FromRows) {
  auto f = Field::make(2);
  const auto rep = code_of(f, {{1, 1, 1}});
  EXPECT_EQ(rep.length(), 3u);
  EXPECT_EQ(rep.dimension(), 1u);
  EXPECT_EQ(code_of(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}).dimension(), 2u);
  const auto h = hamming();
  EXPECT_EQ(h.length(), 7u);
  EXPECT_EQ(h.dimension(), 4u);
  EXPECT_THROW(LinearCode::from_rows(std::vector<Vector>{}), Error);
  try {
    code_of(f, {{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroCode);
  }
}

TEST(LinearCode, Distances) {
  auto f = Field::make(2);
  EXPECT_EQ(min_distance(code_of(f, {{1, 1, 1}})), 3u);
  EXPECT_EQ(min_distance(hamming()), 3u);
  EXPECT_EQ(min_distance(LinearCode::from_generator(Matrix::identity(f, 5))), 1u);
}

TEST(LinearCode, Duals) {
  auto f = Field::make(2);
  const auto rep = code_of(f, {{1, 1, 1}});
  const auto even = dual(rep);
  EXPECT_EQ(even.dimension(), 2u);
  EXPECT_EQ(min_distance(even), 2u);
  EXPECT_EQ(dual_distance(hamming()), 4u);
  EXPECT_EQ(dual_distance(LinearCode::from_generator(Matrix::identity(f, 3))), 4u);
  try {
    dual(LinearCode::from_generator(Matrix::identity(f, 3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDual);
  }
}

TEST(LinearCode, WeightDistributions) {
  auto f = Field::make(2);
  EXPECT_EQ(weight_distribution(code_of(f, {{1, 1, 1}})).counts, (std::vector<std::uint64_t>{1, 0, 0, 1}));
  EXPECT_EQ(weight_distribution(hamming()).counts, (std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1}));
  EXPECT_EQ(weight_distribution(LinearCode::from_generator(Matrix::identity(f, 2))).counts,
            (std::vector<std::uint64_t>{1, 2, 1}));
}

TEST(LinearCode, CorpusAgreesWithBruteForce) {
  for (const auto& e : verify::builtin_corpus(verify::kCorpusSeed, 20)) {
    if (e.code.length() > 7) continue;
    const Brute b = brute(e.code);
    const auto wd = weight_distribution(e.code);
    EXPECT_EQ(wd.counts, b.weights) << e.name;
    EXPECT_EQ(min_distance(e.code), wd.min_nonzero_weight()) << e.name;
    EXPECT_EQ(dual_distance(e.code), b.dual_d) << e.name;
    if (e.code.dimension() < e.code.length()) {
      const auto d = dual(e.code);
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < d.dimension(); ++i) size *= e.code.field()->order();
      EXPECT_EQ(size, b.dual_size) << e.name;
      EXPECT_EQ(dual(d), e.code) << e.name;
    }
  }
}

TEST(OrthogonalArray, Examples) {
  const auto h = hamming();
  const std::vector<std::size_t> cols{0, 3, 6};
  const auto tc = oa_tuple_counts(h, cols);
  ASSERT_EQ(tc.counts.size(), 8u);
  for (auto c : tc.counts) EXPECT_EQ(c, 2u);
  EXPECT_TRUE(tc.is_uniform());

  auto f = Field::make(2);
  const auto rep = code_of(f, {{1, 1, 1}});
  const std::vector<std::size_t> one{1};
  EXPECT_EQ(oa_tuple_counts(rep, one).counts, (std::vector<std::uint64_t>{1, 1}));
  const std::vector<std::size_t> two{0, 2};
  const auto tc2 = oa_tuple_counts(rep, two);
  const std::vector<elem_t> t01{0, 1};
  EXPECT_EQ(tc2.count(t01), 0u);
  EXPECT_FALSE(tc2.is_uniform());
}

TEST(ReedSolomon, Parameters) {
  const auto rs = reed_solomon(7, 3, Field::make(2, 3));
  EXPECT_EQ(rs.dimension(), 3u);
  EXPECT_EQ(min_distance(rs), 5u);
  EXPECT_EQ(dual_distance(rs), 4u);
  EXPECT_TRUE(is_mds(rs));
  // systematic
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(rs.generator()(i, j), i == j ? 1 : 0);

  EXPECT_EQ(min_distance(reed_solomon(3, 3, Field::make(5))), 1u);
  try {
    reed_solomon(4, 2, Field::make(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldTooSmall);
  }
}

TEST(ReedSolomon, EveryKSubsetIsAnInformationSet) {
  // MDS <=> every k columns of G are independent
  const auto rs = reed_solomon(7, 3, Field::make(2, 3));
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b)
      for (std::size_t c = b + 1; c < 7; ++c) {
        const std::vector<std::size_t> cols{a, b, c};
        EXPECT_EQ(rank(rs.generator().select_columns(cols)), 3u);
      }
}

TEST(IsMds, Examples) {
  EXPECT_TRUE(is_mds(code_of(Field::make(2), {{1, 1, 1}})));
  EXPECT_FALSE(is_mds(hamming()));
}

TEST(Enumeration, GuardRefusesHugeCodes) {
  auto f = Field::make(2);
  try {
    enumerable_size(LinearCode::from_generator(Matrix::identity(f, 25)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLargeToEnumerate);
  }
  EXPECT_EQ(enumerable_size(LinearCode::from_generator(Matrix::identity(f, 24))), std::uint64_t{1} << 24);
}
