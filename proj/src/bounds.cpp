// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "nsg/error.hpp"
#include "nsg/representability.hpp"

namespace nsg {

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

namespace {

BoundCheck squared_at_least(std::string name, const Integer& base, const Integer& rhs) {
  Integer sq = base * base;
  const bool holds = sgn(base) >= 0 && sq >= rhs;
  return {std::move(name), ">=", std::move(sq), rhs, holds};
}

bool power_of_two(const Integer& x) { return sgn(x) > 0 && mpz_popcount(x.get_mpz_t()) == 1; }

/// Bracket of log2(x) for x >= 1 with resolution 2^-16.
std::pair<Rational, Rational> log2_bracket(const Integer& x) {
  if (power_of_two(x)) {
    Rational e(static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2) - 1));
    return {e, e};
  }
  constexpr unsigned long kScale = 1UL << 16;
  const Integer big = ipow(x, kScale);
  const auto bits = static_cast<unsigned long>(mpz_sizeinbase(big.get_mpz_t(), 2));
  return {Rational(bits - 1, kScale), Rational(bits, kScale)};
}

}  // namespace

BoundReport lower_bounds(const Generators& g, const Integer& frobenius, const Integer& genus, SymmetryKind kind) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "bounds need three generators");
  const Integer sum = g.sum();
  const Integer vol = g.product();
  const Integer x = frobenius + sum;
  BoundReport r;
  r.checks.push_back(squared_at_least("frobenius_general", x, 3 * vol));
  if (kind == SymmetryKind::NonSymmetric) {
    r.checks.push_back(squared_at_least("frobenius_nonsymmetric", x, 3 * (vol + 1)));
    r.checks.push_back({"genus_exceeds_frobenius", ">=", 2 * genus, frobenius + 2, 2 * genus >= frobenius + 2});
    r.checks.push_back(squared_at_least("genus_nonsymmetric", 2 * genus - 2 + sum, 3 * (vol + 1)));
  } else {
    r.checks.push_back(squared_at_least("frobenius_symmetric", x, 4 * vol));
    r.checks.push_back({"genus_symmetric_identity", "==", 2 * genus, frobenius + 1, 2 * genus == frobenius + 1});
    r.checks.push_back(squared_at_least("genus_symmetric", 2 * genus - 1 + sum, 4 * vol));
  }
  return r;
}

Admissibility admissible(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  if (d1 <= 0 || d2 <= 0 || d3 <= 0) raise(ErrorCode::InvalidInput, "entries must be positive");
  std::array<std::int64_t, 3> d{d1, d2, d3};
  std::sort(d.begin(), d.end());
  auto s = [](std::int64_t v) { return std::to_string(v); };
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      if (auto g = std::gcd(d[i], d[k]); g != 1) {
        return {false, "gcd(" + s(d[i]) + "," + s(d[k]) + ") = " + s(g)};
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    const std::int64_t a = d[(i + 1) % 3], b = d[(i + 2) % 3];
    const std::int64_t pair[2] = {a, b};
    if (ResidueTable(pair).contains(d[i])) return {false, s(d[i]) + " is generated by " + s(a) + " and " + s(b)};
  }
  for (int i = 0; i < 3; ++i) {
    const std::int64_t a = d[(i + 1) % 3], b = d[(i + 2) % 3];
    if ((a + b) % d[i] == 0) return {false, s(d[i]) + " divides " + s(a) + "+" + s(b)};
  }
  const std::int64_t b = d[2] - d[1];
  const std::int64_t twice = 2 * d[1] - d[2];
  if (b >= 1 && twice > 0 && twice % d[0] == 0 && std::gcd(d[0], b) == 1) {
    return {false, "almost arithmetic with a = " + s(twice / d[0]) + ", b = " + s(b)};
  }
  return {true, ""};
}

ConjectureCheck conjecture_bound_check(std::array<std::int64_t, 3> d, const Integer& frobenius, const Rational& c,
                                       const Rational& nu) {
  if (sgn(c) <= 0 || sgn(nu) <= 0) raise(ErrorCode::InvalidInput, "C and nu must be positive");
  if (!nu.get_num().fits_ulong_p() || !nu.get_den().fits_ulong_p()) raise(ErrorCode::OutOfRange, "nu too large");
  const unsigned long p = nu.get_num().get_ui(), q = nu.get_den().get_ui();
  const Integer sum = make_integer(d[0]) + d[1] + d[2];
  const Integer vol = make_integer(d[0]) * d[1] * d[2];
  const Integer x = frobenius + sum;
  ConjectureCheck r;
  r.lhs = ipow(x, q) * ipow(c.get_den(), q);
  r.rhs = ipow(c.get_num(), q) * ipow(vol, p);
  r.holds = sgn(x) <= 0 || r.lhs <= r.rhs;
  // floor(1000 C vol^nu) via an integer q-th root.
  Integer scaled = r.rhs * ipow(1000, q);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), ipow(c.get_den(), q).get_mpz_t());
  mpz_root(scaled.get_mpz_t(), scaled.get_mpz_t(), q);
  r.bound_approx = to_fixed(Rational(scaled - 1000 * sum, 1000), 3);
  return r;
}

FamilyMember counterexample_family(std::int64_t l) {
  if (l < 1) raise(ErrorCode::InvalidInput, "l must be at least 1");
  if (l > 250000000) raise(ErrorCode::OutOfRange, "l too large");
  FamilyMember f;
  f.l = l;
  f.triple = {2 * l + 1, 2 * l + 3, 4 * l + 3};
  f.matrix.diagonal = {l + 3, l + 1, 2};
  f.matrix.rows = {{0, l, 1}, {l, 0, 1}, {3, 1, 0}};
  for (std::size_t j = 0; j < 3; ++j) {
    Integer rhs = 0;
    for (std::size_t i = 0; i < 3; ++i) rhs += make_integer(f.matrix.rows[j][i]) * f.triple[i];
    if (rhs != make_integer(f.matrix.diagonal[j]) * f.triple[j]) raise(ErrorCode::InternalMismatch, "family row");
  }
  const Integer li = make_integer(l);
  f.frobenius = 2 * li * li + 3 * li - 1;
  f.admissibility = admissible(f.triple[0], f.triple[1], f.triple[2]);
  const Integer first = make_integer(f.triple[0]);
  f.first_prime = mpz_probab_prime_p(first.get_mpz_t(), 30) > 0;
  return f;
}

CriticalL critical_l(const Rational& c, const Rational& nu) {
  if (sgn(c) <= 0 || sgn(nu) <= 0) raise(ErrorCode::InvalidInput, "C and nu must be positive");
  if (nu >= Rational(2, 3)) raise(ErrorCode::NuTooLarge, "nu must be below 2/3");
  const Rational den = 2 - 3 * nu;
  const Rational base = (4 * nu - 1) / den;
  const auto [nlo, nhi] = log2_bracket(c.get_num());
  const auto [dlo, dhi] = log2_bracket(c.get_den());
  CriticalL r;
  r.exact = nlo == nhi && dlo == dhi;
  r.log2_lo = base + (nlo - dhi) / den;
  r.log2_hi = base + (nhi - dlo) / den;
  r.value = 0;
  if (r.exact && r.log2_lo.get_den() == 1 && sgn(r.log2_lo) >= 0 && r.log2_lo.get_num().fits_ulong_p()) {
    r.value = ipow(2, r.log2_lo.get_num().get_ui());
  }
  return r;
}

}  // namespace nsg
