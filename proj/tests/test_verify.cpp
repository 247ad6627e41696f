#include <gtest/gtest.h>

#include <map>

#include "icsi/verify.hpp"

using namespace icsi;

TEST(Corpus, Composition) {
  const auto corpus = verify::builtin_corpus();
  ASSERT_EQ(corpus.size(), 53u);
  EXPECT_EQ(corpus[0].name, "repetition-3-1");
  EXPECT_EQ(corpus[1].name, "hamming-7-4");
  EXPECT_EQ(corpus[2].name, "rs-7-3-gf8");
  std::map<std::uint32_t, int> orders;
  for (std::size_t i = 3; i < corpus.size(); ++i) {
    EXPECT_LE(corpus[i].code.length(), 8u);
    ++orders[corpus[i].code.field()->order()];
  }
  EXPECT_EQ(orders.size(), 3u);
  for (const auto& [q, count] : orders) EXPECT_TRUE(q == 2 || q == 3 || q == 4) << q;
  // same seed, same corpus
  const auto again = verify::builtin_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(corpus[i].code, again[i].code);
}

TEST(Corpus, ReedSolomonScheme) {
  const auto scheme = verify::reed_solomon_scheme(7, 3, Field::make(2, 3));
  EXPECT_EQ(scheme.code(), reed_solomon(7, 3, Field::make(2, 3)));
  EXPECT_EQ(scheme.instance().receiver_count(), 3u);
}

TEST(Corpus, BinaryInstanceEnumerationCount) {
  auto f2 = Field::make(2);
  std::size_t count = 0;
  verify::for_each_binary_instance(2, 2, f2, [&](const IcsiInstance&) { ++count; });
  // n=1: 2 + 4; n=2: 8 + 64
  EXPECT_EQ(count, 78u);
}

TEST(Suites, PassOnTheCorpus) {
  verify::VerifyOptions opt;
  opt.random_instances = 40;
  for (const auto& r : verify::run("all", opt)) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.counterexample;
    EXPECT_GT(r.cases, 0u) << r.name;
  }
}

TEST(Suites, CorruptionIsCaught) {
  verify::VerifyOptions opt;
  opt.corrupt = true;
  opt.random_instances = 0;
  for (const auto& r : verify::run("all", opt)) {
    EXPECT_FALSE(r.passed()) << r.name;
    EXPECT_NE(r.counterexample.find("hamming"), std::string::npos) << r.counterexample;
  }
}

TEST(Suites, UnknownNameRejected) { EXPECT_THROW(verify::run("thm9", {}), Error); }
