// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/relation.hpp"

#include <numeric>

#include "nsg/error.hpp"
#include "nsg/representability.hpp"

namespace nsg {

Integer RelationMatrix::diagonal_product(const Generators& g, std::size_t j) const {
  return make_integer(diagonal[j]) * make_integer(g[j]);
}

namespace {

std::vector<std::int64_t> others(const Generators& g, std::size_t j) {
  std::vector<std::int64_t> o;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != j) o.push_back(g[i]);
  }
  return o;
}

void check_index(const Generators& g, std::size_t j) {
  if (j >= g.size()) {
    raise(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(j) + " out of range",
          static_cast<std::int64_t>(j));
  }
}

std::int64_t diagonal_with(const ResidueTable& rest, std::int64_t dj) {
  for (std::int64_t v = 2;; ++v) {
    if (rest.contains(v * dj)) return v;
  }
}

}  // namespace

std::int64_t diagonal_coefficient(const Generators& g, std::size_t j) {
  check_index(g, j);
  return diagonal_with(ResidueTable(others(g, j)), g[j]);
}

RelationMatrix relation_matrix(const Generators& g) {
  const std::size_t m = g.size();
  RelationMatrix a;
  a.diagonal.resize(m);
  a.rows.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    const auto rest = others(g, j);
    a.diagonal[j] = diagonal_with(ResidueTable(rest), g[j]);
    // suffix[t] answers representability by rest[t..].
    std::vector<ResidueTable> suffix;
    suffix.reserve(rest.size() + 1);
    for (std::size_t t = 0; t <= rest.size(); ++t) {
      suffix.emplace_back(std::span<const std::int64_t>(rest.data() + t, rest.size() - t));
    }
    std::int64_t remaining = a.diagonal[j] * g[j];
    std::vector<std::int64_t> witness(rest.size(), 0);
    for (std::size_t t = 0; t < rest.size(); ++t) {
      std::int64_t v = 0;
      while (!suffix[t + 1].contains(remaining - v * rest[t])) ++v;
      witness[t] = v;
      remaining -= v * rest[t];
    }
    if (remaining != 0) raise(ErrorCode::InternalMismatch, "witness search did not close");
    for (std::size_t i = 0, t = 0; i < m; ++i) {
      if (i != j) a.rows[j][i] = witness[t++];
    }
  }
  return a;
}

bool is_symmetric(const Generators& g) {
  const ResidueTable table(g.elements());
  const Integer f = table.frobenius();
  constexpr long kLiteralLimit = 4000000;
  if (f <= kLiteralLimit) {
    const auto fv = static_cast<std::int64_t>(f.get_si());
    for (std::int64_t s = 0; s <= fv; ++s) {
      if (table.contains(s) == table.contains(fv - s)) return false;
    }
    return true;
  }
  // Beyond the literal range: symmetric exactly when half of 0..F are gaps.
  return 2 * table.genus() == f + 1;
}

Classification classify(const Generators& g, const RelationMatrix& a) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "classification needs three generators");
  Classification c;
  bool collision = false;
  for (std::size_t i = 0; i < 3 && !collision; ++i) {
    for (std::size_t k = i + 1; k < 3 && !collision; ++k) {
      if (a.diagonal_product(g, i) == a.diagonal_product(g, k)) {
        collision = true;
        c.i = i;
        c.k = k;
        c.j = 3 - i - k;
        c.lcm = a.diagonal_product(g, i);
      }
    }
  }
  const bool by_matrix = collision;
  if (by_matrix != is_symmetric(g)) {
    raise(ErrorCode::InternalMismatch, "matrix and gap-set symmetry tests disagree for " + g.to_string());
  }
  if (!by_matrix) c = Classification{};
  c.kind = by_matrix ? SymmetryKind::Symmetric : SymmetryKind::NonSymmetric;
  return c;
}

StandardFormReport verify_standard_form(const Generators& g, const RelationMatrix& a) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "standard form needs three generators");
  if (classify(g, a).kind == SymmetryKind::Symmetric) {
    raise(ErrorCode::SymmetricInput, g.to_string() + " is symmetric");
  }
  auto e = [&](std::size_t j, std::size_t i) { return make_integer(a.at(j - 1, i - 1)); };
  auto s = [&](std::size_t j, std::size_t i) { return make_integer(a.signed_at(j - 1, i - 1)); };
  const Integer d1 = make_integer(g[0]), d2 = make_integer(g[1]), d3 = make_integer(g[2]);

  StandardFormReport r;
  r.cofactors = {e(2, 2) * e(3, 3) - e(2, 3) * e(3, 2), e(1, 1) * e(3, 3) - e(1, 3) * e(3, 1),
                 e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)};
  const Integer det = s(1, 1) * (s(2, 2) * s(3, 3) - s(2, 3) * s(3, 2)) -
                      s(1, 2) * (s(2, 1) * s(3, 3) - s(2, 3) * s(3, 1)) +
                      s(1, 3) * (s(2, 1) * s(3, 2) - s(2, 2) * s(3, 1));
  auto row_gcd = [&](std::size_t j) {
    Integer t;
    mpz_gcd(t.get_mpz_t(), e(j, 1).get_mpz_t(), e(j, 2).get_mpz_t());
    mpz_gcd(t.get_mpz_t(), t.get_mpz_t(), e(j, 3).get_mpz_t());
    return t;
  };
  auto sandwich = [](const Integer& x, const Integer& y, const Integer& d) {
    return x + y <= d + 1 && d + 1 <= x * y;
  };
  r.checks = {
      {"column_sum_1", e(1, 1) == e(2, 1) + e(3, 1)},
      {"column_sum_2", e(2, 2) == e(1, 2) + e(3, 2)},
      {"column_sum_3", e(3, 3) == e(1, 3) + e(2, 3)},
      {"cofactor_1", r.cofactors[0] == d1},
      {"cofactor_2", r.cofactors[1] == d2},
      {"cofactor_3", r.cofactors[2] == d3},
      {"determinant_zero", det == 0},
      {"row_gcd_1", row_gcd(1) == 1},
      {"row_gcd_2", row_gcd(2) == 1},
      {"row_gcd_3", row_gcd(3) == 1},
      {"row_order_1", e(1, 1) > e(1, 2) + e(1, 3)},
      {"row_order_2", e(2, 2) > e(2, 3)},
      {"row_order_3", e(3, 3) < e(3, 1) + e(3, 2)},
      {"diagonal_sandwich_1", sandwich(e(2, 2), e(3, 3), d1)},
      {"diagonal_sandwich_2", sandwich(e(1, 1), e(3, 3), d2)},
      {"diagonal_sandwich_3", sandwich(e(1, 1), e(2, 2), d3)},
  };
  for (const auto& c : r.checks) {
    if (!c.holds) raise(ErrorCode::StandardFormViolation, c.name + " fails for " + g.to_string());
  }
  return r;
}

}  // namespace nsg
