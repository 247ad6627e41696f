#include <gtest/gtest.h>

#include "icsi/field.hpp"

using namespace icsi;

namespace {

// Schoolbook polynomial multiplication mod (p, modulus), digits constant
// term first. Independent of the log tables.
elem_t slow_mul(std::uint32_t p, const std::vector<std::uint32_t>& mod, elem_t a, elem_t b) {
  const std::size_t m = mod.size() - 1;
  std::vector<std::uint32_t> da(m), db(m), prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    da[i] = a % p;
    a = static_cast<elem_t>(a / p);
    db[i] = b % p;
    b = static_cast<elem_t>(b / p);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + p * p - c * mod[i] % p) % p;
  }
  std::uint32_t out = 0;
  for (std::size_t i = m; i-- > 0;) out = out * p + prod[i];
  return static_cast<elem_t>(out);
}

}  // namespace

TEST(Field, BinaryOnePlusOne) {
  auto f = Field::make(2);
  EXPECT_EQ(f->add(1, 1), 0);
  EXPECT_EQ(f->order(), 2u);
  EXPECT_EQ(f->name(), "GF(2)");
}

TEST(Field, F8GeneratorHasOrderSeven) {
  auto f = Field::make(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
  const elem_t x = 2;
  elem_t acc = 1;
  std::vector<bool> seen(8, false);
  for (int e = 1; e <= 7; ++e) {
    acc = f->mul(acc, x);
    seen[acc] = true;
  }
  EXPECT_EQ(acc, 1);
  for (elem_t v = 1; v < 8; ++v) EXPECT_TRUE(seen[v]) << v;
  EXPECT_EQ(f->pow(x, 7), 1);
}

TEST(Field, ReducibleModulusRejected) {
  try {
    Field::make(2, 2, std::vector<std::uint32_t>{0, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ReduciblePolynomial);
  }
}

TEST(Field, ConstructionErrors) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { Field::make(4); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { Field::make(2, 17); }), Errc::FieldTooLarge);
  EXPECT_NO_THROW(Field::make(2, 16));
}

TEST(Field, DefaultModuli) {
  EXPECT_EQ(default_modulus(2, 3), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(default_modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(default_modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_TRUE(is_irreducible(2, {1, 1, 0, 1}));
  EXPECT_FALSE(is_irreducible(2, {1, 0, 0, 1}));  // (x+1)(x^2+x+1)
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldAxioms, MatchSchoolbookArithmetic) {
  const auto [p, m] = GetParam();
  auto f = Field::make(p, m);
  const std::uint32_t q = f->order();
  const auto mod = m > 1 ? f->modulus() : std::vector<std::uint32_t>{0, 1};
  for (elem_t a = 0; a < q; ++a) {
    for (elem_t b = 0; b < q; ++b) {
      const elem_t expected = m > 1 ? slow_mul(p, mod, a, b) : static_cast<elem_t>((a * b) % p);
      ASSERT_EQ(f->mul(a, b), expected) << a << "*" << b;
      ASSERT_EQ(f->sub(f->add(a, b), b), a);
    }
    if (a != 0) {
      ASSERT_EQ(f->mul(a, f->inv(a)), 1);
      ASSERT_EQ(f->div(a, a), 1);
    }
    ASSERT_EQ(f->add(a, f->neg(a)), 0);
  }
  // the primitive element generates F_q^*
  std::vector<bool> seen(q, false);
  elem_t acc = 1;
  for (std::uint32_t e = 0; e + 1 < q; ++e) {
    seen[acc] = true;
    acc = f->mul(acc, f->primitive_element());
  }
  for (elem_t v = 1; v < q; ++v) ASSERT_TRUE(seen[v]);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{7u, 1u}, std::pair{2u, 2u},
                                           std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{2u, 5u},
                                           std::pair{3u, 3u}));

TEST(Field, InverseOfZeroThrows) {
  auto f = Field::make(5);
  EXPECT_THROW((void)f->inv(0), Error);
}

TEST(FieldElement, MixingFieldsThrows) {
  FieldElement a(Field::make(3), 2), b(Field::make(5), 2);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
  FieldElement c(Field::make(3), 2);
  EXPECT_EQ((a * c).value(), 1);
  EXPECT_EQ(a.inverse().value(), 2);
  // equal parameters count as the same field
  EXPECT_TRUE(same_field(Field::make(2, 3), Field::make(2, 3)));
}
