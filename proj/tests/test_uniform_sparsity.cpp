// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "nsg/error.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/relation.hpp"
#include "nsg/sparsity.hpp"
#include "nsg/uniform.hpp"
#include "oracle.hpp"

using namespace nsg;

namespace {

using Row = std::tuple<std::int64_t, std::int64_t, std::int64_t, long, long>;

std::vector<Row> rows(const std::vector<UniformRecord>& r) {
  std::vector<Row> out;
  for (const auto& x : r) {
    out.emplace_back(x.triple[0], x.triple[1], x.triple[2], x.frobenius.get_si(), x.genus.get_si());
  }
  return out;
}

}  // namespace

TEST(Uniform, ClosedFormSmall) {
  auto u = uniform_closed(3, validate_generators({5, 7, 8}));
  EXPECT_EQ(u.frobenius, 11);
  EXPECT_EQ(u.genus, 7);
  auto v = uniform_closed(4, validate_generators({10, 13, 14}));
  EXPECT_EQ(v.frobenius, 45);
  EXPECT_EQ(v.genus, 24);
  EXPECT_THROW(uniform_closed(3, validate_generators({3, 4, 5})), Error);
}

TEST(Uniform, ScanListsForSmallDiagonals) {
  EXPECT_EQ(rows(scan_uniform(3, 30)), (std::vector<Row>{{5, 7, 8, 11, 7}}));
  EXPECT_EQ(rows(scan_uniform(4, 30)), (std::vector<Row>{{7, 13, 15, 38, 21}, {10, 13, 14, 45, 24}}));
  const std::vector<Row> five = {
      {9, 22, 23, 83, 46},   {13, 17, 24, 83, 46},  {13, 19, 23, 86, 48},
      {13, 21, 22, 93, 50},  {13, 21, 23, 100, 52}, {16, 17, 23, 93, 50},
      {16, 19, 21, 87, 50},  {17, 19, 22, 103, 54}, {17, 21, 22, 113, 58},
  };
  EXPECT_EQ(rows(scan_uniform(5, 30, 2)), five);
}

TEST(Uniform, ScanRecordsAgreeWithOracle) {
  for (std::int64_t a = 3; a <= 5; ++a) {
    for (const auto& r : scan_uniform(a, 30)) {
      const std::vector<std::int64_t> d(r.triple.begin(), r.triple.end());
      auto gaps = oracle::gaps(d);
      EXPECT_EQ(r.frobenius, gaps.back());
      EXPECT_EQ(r.genus, static_cast<long>(gaps.size()));
    }
  }
  EXPECT_THROW(scan_uniform(2, 30), Error);
}

TEST(Sparsity, FourGeneratorExamples) {
  auto g = validate_generators({4, 21, 26, 43});
  auto r = sparsity_check(g);
  EXPECT_EQ(r.count, 18);
  EXPECT_EQ(r.distinct, 17u);
  EXPECT_EQ(r.bound, 26);
  EXPECT_EQ(r.weak_bound, 26);
  EXPECT_TRUE(r.holds);
  auto h = validate_generators({4, 31, 37, 50});
  EXPECT_EQ(sparsity_check(h).count, 18);
  EXPECT_TRUE(sparsity_check(h).holds);
}

TEST(Sparsity, ThreeGeneratorCounts) {
  auto n = sparsity_check(validate_generators({3, 4, 5}));
  EXPECT_EQ(n.count, 6);
  EXPECT_EQ(n.bound, 6);
  EXPECT_TRUE(n.holds);
  auto s = sparsity_check(validate_generators({4, 5, 6}));
  EXPECT_EQ(s.count, 4);
  auto c = sparsity_check(validate_generators({6, 10, 15}));
  EXPECT_EQ(c.count, 4);
  EXPECT_EQ(c.distinct, 3u);
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(s.holds);
  try {
    sparsity_check(validate_generators({3, 5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionUnsupported);
  }
}

TEST(Sparsity, RandomFourGeneratorTuples) {
  for (const auto& d : oracle::random_tuples(4, 200, 200, 2024)) {
    auto g = validate_generators(d);
    std::vector<std::int64_t> diag;
    for (std::size_t j = 0; j < 4; ++j) diag.push_back(oracle::relation_row(d, j).diagonal);
    auto q = hilbert_numerator(g);
    auto r = sparsity_check(g, q, diag);
    EXPECT_TRUE(r.holds) << g.to_string() << " count=" << to_decimal(r.count) << " bound=" << to_decimal(r.bound);
    auto ds = diagonal_sum_check(g, diag);
    EXPECT_TRUE(ds.holds) << g.to_string();
    EXPECT_TRUE(min_element_check(g));
  }
}

TEST(Sparsity, DiagonalSumExactRational) {
  auto g = validate_generators({4, 21, 26, 43});
  auto ds = diagonal_sum_check(g, {13, 2, 2, 2});
  EXPECT_EQ(ds.lhs, 6);
  EXPECT_EQ(ds.rhs, Rational(4) + Rational(6) * Rational(7, 8));
  EXPECT_TRUE(ds.holds);
}
