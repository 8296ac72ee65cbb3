// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/genera.hpp"

#include <numeric>

#include "nsg/error.hpp"

namespace nsg {

namespace {

Integer require_integral(const Rational& v, const char* what) {
  if (v.get_den() != 1) raise(ErrorCode::NonIntegerResult, std::string(what) + " evaluates to " + to_decimal(v));
  return v.get_num();
}

}  // namespace

std::vector<Integer> power_sums(const GapSet& gaps, unsigned n_max) {
  std::vector<Integer> sums(n_max + 1, 0);
  for (auto s : gaps.gaps) {
    Integer power = 1;
    const Integer base = make_integer(s);
    for (unsigned n = 0; n <= n_max; ++n) {
      sums[n] += power;
      power *= base;
    }
  }
  return sums;
}

std::array<Integer, 3> genera2_closed(std::int64_t d1, std::int64_t d2) {
  if (std::gcd(d1, d2) != 1) raise(ErrorCode::NotCoprime, "generators are not coprime");
  const Rational a = make_integer(d1), b = make_integer(d2);
  const Rational g = (a - 1) * (b - 1) / 2;
  const Rational f = a * b - a - b;
  const Rational g1 = g * (2 * a * b - a - b - 1) / 6;
  const Rational g2 = a * b * g * f / 6;
  const Rational sq = 1 + a * a + b * b;
  const Rational g3 = g / 60 * ((1 + a * b) * (sq + 6 * a * a * b * b) + (a + b) * (sq - 9 * a * a * b * b));
  return {require_integral(g1, "g1"), require_integral(g2, "g2"), require_integral(g3, "g3")};
}

Integer genus1_closed3(const Generators& g, const RelationMatrix& a) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "needs three generators");
  if (classify(g, a).kind == SymmetryKind::Symmetric) raise(ErrorCode::SymmetricInput, g.to_string() + " is symmetric");
  Rational total = -1 + Rational(g.product());
  Integer volume = 1;
  for (std::size_t i = 0; i < 3; ++i) volume *= make_integer(a.diagonal[i]);
  for (std::size_t i = 0; i < 3; ++i) {
    const Integer ai = make_integer(a.diagonal[i]), di = make_integer(g[i]);
    total += (ai - 1) * (2 * ai - 1) * di * di;
    total -= volume * (2 * ai - 3) * di;
    for (std::size_t j = 0; j < i; ++j) {
      const Integer aj = make_integer(a.diagonal[j]), dj = make_integer(g[j]);
      total += (3 * (ai - 1) * (aj - 1) - ai * aj) * di * dj;
    }
  }
  return require_integral(total / 12, "g1");
}

std::array<Integer, 3> genera_from_derivatives(const SparsePolynomial& gap_poly) {
  const Integer p1 = gap_poly.derivative_at_one(1);
  const Integer p2 = gap_poly.derivative_at_one(2);
  const Integer p3 = gap_poly.derivative_at_one(3);
  return {p1, p2 + p1, p3 + 3 * p2 + p1};
}

}  // namespace nsg
