// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "nsg/diagrams.hpp"
#include "nsg/error.hpp"
#include "nsg/relation.hpp"
#include "oracle.hpp"

using namespace nsg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

/// sum_{k<d1} z^k - (1 - z^{d1}) sum_{gaps} z^s, from the oracle gaps.
SparsePolynomial oracle_apery(const std::vector<std::int64_t>& d) {
  SparsePolynomial p;
  for (std::int64_t k = 0; k < d[0]; ++k) p.add_term(static_cast<std::uint64_t>(k), 1);
  for (auto s : oracle::gaps(d)) {
    p.add_term(static_cast<std::uint64_t>(s), -1);
    p.add_term(static_cast<std::uint64_t>(s + d[0]), 1);
  }
  return p;
}

SparsePolynomial oracle_numerator(const std::vector<std::int64_t>& d) {
  SparsePolynomial p;
  for (auto [e, c] : oracle::numerator(d)) p.add_term(static_cast<std::uint64_t>(e), c);
  return p;
}

bool nonsymmetric(const Generators& g, const RelationMatrix& a) {
  return classify(g, a).kind == SymmetryKind::NonSymmetric;
}

}  // namespace

TEST(Diagram, GridCoordinates) {
  EXPECT_EQ(pq_of(4, 3, 5), (std::pair<std::int64_t, std::int64_t>{2, 1}));
  EXPECT_EQ(code_of([] { pq_of(5, 3, 5); }), ErrorCode::NotAGap);
  EXPECT_EQ(code_of([] { pq_of(8, 3, 5); }), ErrorCode::NotAGap);
  EXPECT_EQ(code_of([] { pq_of(0, 3, 5); }), ErrorCode::NotAGap);
  EXPECT_EQ(code_of([] { pq_of(1, 4, 6); }), ErrorCode::NotCoprime);
  for (std::int64_t d1 = 2; d1 <= 15; ++d1) {
    for (std::int64_t d2 = d1 + 1; d2 <= 20; ++d2) {
      if (std::gcd(d1, d2) != 1) continue;
      for (auto t : oracle::gaps({d1, d2})) {
        auto [p, q] = pq_of(t, d1, d2);
        ASSERT_EQ(sigma(d1, d2, p, q), t);
        ASSERT_TRUE(q >= 1 && q < d1 && p >= 1);
      }
    }
  }
}

TEST(Diagram, SmallGrid) {
  auto grid = delta2_grid(3, 5);
  EXPECT_EQ(grid.value(1, 1), 7);
  EXPECT_EQ(grid.value(2, 1), 4);
  EXPECT_EQ(grid.value(3, 1), 1);
  EXPECT_EQ(grid.value(1, 2), 2);
  EXPECT_EQ(grid.height(1), 3);
  EXPECT_EQ(grid.height(2), 1);
  EXPECT_EQ(grid.cell_count(), 4u);
}

TEST(Diagram, GridLayersAgainstOracle) {
  for (std::int64_t d1 = 2; d1 <= 20; ++d1) {
    for (std::int64_t d2 = d1 + 1; d2 <= 30; ++d2) {
      if (std::gcd(d1, d2) != 1) continue;
      auto grid = delta2_grid(d1, d2);
      ASSERT_EQ(grid.values(), oracle::gaps({d1, d2}));
      std::vector<std::int64_t> bottom;
      for (const auto& c : grid.bottom_layer()) bottom.push_back(c.value);
      std::sort(bottom.begin(), bottom.end());
      std::vector<std::int64_t> expected(static_cast<std::size_t>(d1 - 1));
      std::iota(expected.begin(), expected.end(), 1);
      EXPECT_EQ(bottom, expected);
      EXPECT_EQ(grid.top_layer().front().value, d1 * d2 - d1 - d2);
    }
  }
}

TEST(Diagram, FramePrefersFirstCoprimePair) {
  auto g = validate_generators({4, 6, 7});
  auto f = diagram_frame(g, relation_matrix(g));
  EXPECT_EQ(f.base1, 4);
  EXPECT_EQ(f.base2, 7);
  EXPECT_EQ(f.third, 6);
  auto h = validate_generators({6, 10, 15});
  EXPECT_EQ(code_of([&] { diagram_frame(h, relation_matrix(h)); }), ErrorCode::NoCoprimeBasePair);
}

TEST(Diagram, AssociatedSets) {
  auto g = validate_generators({5, 7, 8});
  auto a = relation_matrix(g);
  const auto base = oracle::gaps({5, 7});
  for (std::int64_t k = 1; k < a.diagonal[2]; ++k) {
    auto omega = associated_set(g, k);
    EXPECT_TRUE(std::binary_search(omega.begin(), omega.end(), k * 8));
    for (auto v : omega) {
      EXPECT_TRUE(std::binary_search(base.begin(), base.end(), v)) << v;
      EXPECT_TRUE(oracle::representable({5, 7, 8}, v)) << v;
    }
  }
  EXPECT_EQ(code_of([&] { associated_set(g, 0); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { associated_set(g, a.diagonal[2]); }), ErrorCode::IndexOutOfRange);
}

TEST(Diagram, GapsOfTriplesThroughTheDiagram) {
  for (const auto& d : oracle::triples(45)) {
    auto g = validate_generators(d);
    const bool coprime_pair = std::gcd(d[0], d[1]) == 1 || std::gcd(d[0], d[2]) == 1 || std::gcd(d[1], d[2]) == 1;
    if (!coprime_pair) {
      EXPECT_EQ(code_of([&] { delta3_via_diagram(g); }), ErrorCode::NoCoprimeBasePair);
      continue;
    }
    ASSERT_EQ(delta3_via_diagram(g).gaps, oracle::gaps(d)) << g.to_string();
  }
}

TEST(Diagram, ResidueSetIdentities) {
  for (const auto& d : oracle::triples(45)) {
    auto g = validate_generators(d);
    auto a = relation_matrix(g);
    if (!nonsymmetric(g, a)) {
      EXPECT_EQ(code_of([&] { lambda_set(g, a); }), ErrorCode::SymmetricInput);
      continue;
    }
    auto lambda = lambda_set(g, a);
    const auto apery = oracle_apery(d);
    ASSERT_EQ(lambda.polynomial(), apery) << g.to_string();
    EXPECT_EQ(lambda.values().front(), 0);
    if (std::gcd(d[0], d[1]) == 1) EXPECT_EQ(lambda_from_diagram(g), lambda.values()) << g.to_string();
    ASSERT_EQ(shifted_columns_polynomial(g, a), SparsePolynomial::one_minus_power(static_cast<std::uint64_t>(d[1])) * apery);
    ASSERT_EQ(numerator_via_diagram(g, a), oracle_numerator(d)) << g.to_string();
  }
}

TEST(Diagram, SmallNumeratorThroughTelescoping) {
  auto g = validate_generators({5, 7, 8});
  EXPECT_EQ(numerator_via_diagram(g, relation_matrix(g)).to_string(), "1 - z^15 - z^21 - z^24 + z^29 + z^31");
}

TEST(Diagram, MultiplesOfLargestGenerator) {
  for (const auto& d : oracle::triples(45)) {
    auto g = validate_generators(d);
    auto a = relation_matrix(g);
    if (!nonsymmetric(g, a)) continue;
    const auto gaps = oracle::gaps(d);
    auto is_gap = [&](std::int64_t v) { return std::binary_search(gaps.begin(), gaps.end(), v); };
    for (std::int64_t k = 1; k < a.diagonal[2]; ++k) {
      EXPECT_FALSE(is_gap(k * d[2]));
      EXPECT_TRUE(is_gap(k * d[2] - d[0])) << g.to_string() << " k=" << k;
    }
  }
}

TEST(Render, AsciiAndSvg) {
  auto grid = delta2_grid(3, 5);
  auto ascii = render_delta2(grid, RenderFormat::Ascii);
  EXPECT_NE(ascii.find("gaps of <3,5>"), std::string::npos);
  EXPECT_NE(ascii.find(" 7"), std::string::npos);
  auto svg = render_delta2(grid, RenderFormat::Svg);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("width=\"24\" height=\"24\""), std::string::npos);
  EXPECT_NE(svg.find("#d3d3d3"), std::string::npos);
  EXPECT_NE(svg.find("#696969"), std::string::npos);
  auto g = validate_generators({5, 7, 8});
  auto svg3 = render_delta3(g, RenderFormat::Svg);
  EXPECT_NE(svg3.find("fill=\"#000000\" stroke"), std::string::npos);
  auto ascii3 = render_delta3(g, RenderFormat::Ascii);
  EXPECT_NE(ascii3.find("##"), std::string::npos);
  auto lam = render_lambda(lambda_set(g, relation_matrix(g)), RenderFormat::Ascii);
  EXPECT_NE(lam.find("v3"), std::string::npos);
}

TEST(Render, EmptyPlaceholder) {
  EXPECT_NE(render_lambda(LambdaSet{}, RenderFormat::Ascii).find("(empty diagram)"), std::string::npos);
  EXPECT_NE(render_lambda(LambdaSet{}, RenderFormat::Svg).find("empty diagram"), std::string::npos);
}

TEST(Render, Deterministic) {
  auto g = validate_generators({23, 29, 44});
  EXPECT_EQ(render_delta3(g, RenderFormat::Svg), render_delta3(g, RenderFormat::Svg));
}
