// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/closed3.hpp"

#include <algorithm>
#include <numeric>

#include "nsg/error.hpp"
#include "nsg/gap_set.hpp"

namespace nsg {

namespace {

void require_triple(const Generators& g) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "closed forms need three generators");
}

Integer entry(const RelationMatrix& a, std::size_t j, std::size_t i) {
  return make_integer(a.at(j - 1, i - 1));
}

Integer diagonal_sum(const Generators& g, const RelationMatrix& a) {
  Integer s = 0;
  for (std::size_t i = 0; i < 3; ++i) s += a.diagonal_product(g, i);
  return s;
}

Integer pairwise_diagonal_sum(const Generators& g, const RelationMatrix& a) {
  Integer s = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = i + 1; k < 3; ++k) s += a.diagonal_product(g, i) * a.diagonal_product(g, k);
  }
  return s;
}

Integer cycle_forward(const RelationMatrix& a) { return entry(a, 1, 2) * entry(a, 2, 3) * entry(a, 3, 1); }
Integer cycle_backward(const RelationMatrix& a) { return entry(a, 1, 3) * entry(a, 3, 2) * entry(a, 2, 1); }
Integer diagonal_volume(const RelationMatrix& a) { return entry(a, 1, 1) * entry(a, 2, 2) * entry(a, 3, 3); }

std::uint64_t as_degree(const Integer& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) raise(ErrorCode::OutOfRange, "exponent " + to_decimal(v) + " out of range");
  return v.get_ui();
}

Integer frobenius_of_minimal(const std::vector<std::int64_t>& sub) {
  if (sub.size() == 1) return -1;  // only {1} is minimal and of size one
  if (sub.size() == 2) return sylvester_closed(sub[0], sub[1]).frobenius;
  if (sub.size() == 3) return solve_triple(validate_generators(sub)).frobenius;
  raise(ErrorCode::InternalMismatch, "unexpected subset size");
}

}  // namespace

Integer j_invariant(const Generators& g, const RelationMatrix& a) {
  require_triple(g);
  if (classify(g, a).kind == SymmetryKind::Symmetric) raise(ErrorCode::SymmetricInput, g.to_string() + " is symmetric");
  const Integer inner = diagonal_sum(g, a);
  const Integer disc = inner * inner - 4 * pairwise_diagonal_sum(g, a) + 4 * g.product();
  auto root = exact_sqrt(disc);
  if (!root) raise(ErrorCode::InternalMismatch, "discriminant is not a square for " + g.to_string());
  if (*root != abs(cycle_forward(a) - cycle_backward(a))) {
    raise(ErrorCode::InternalMismatch, "discriminant root disagrees with the off-diagonal cycles");
  }
  return *root;
}

Integer frobenius_from_matrix(const Generators& g, const RelationMatrix& a) {
  require_triple(g);
  return diagonal_volume(a) + std::max(cycle_forward(a), cycle_backward(a)) - g.sum();
}

Integer genus_from_matrix(const Generators& g, const RelationMatrix& a) {
  require_triple(g);
  return exact_div(1 + diagonal_volume(a) + cycle_forward(a) + cycle_backward(a) - g.sum(), 2, "genus from matrix");
}

ClosedForm3 closed_form(const Generators& g) {
  require_triple(g);
  return closed_form(g, relation_matrix(g));
}

ClosedForm3 closed_form(const Generators& g, const RelationMatrix& a) {
  ClosedForm3 c;
  c.kind = SymmetryKind::NonSymmetric;
  c.matrix = a;
  c.j = j_invariant(g, a);
  c.inner = diagonal_sum(g, a);
  const Integer low = exact_div(c.inner - c.j, 2, "first numerator exponent");
  const Integer high = exact_div(c.inner + c.j, 2, "second numerator exponent");
  const Integer d2 = make_integer(g[1]), d3 = make_integer(g[2]);
  c.l1 = entry(a, 1, 2) * d2 + entry(a, 3, 3) * d3;
  c.l2 = entry(a, 2, 2) * d2 + entry(a, 1, 3) * d3;
  c.frobenius = high - g.sum();
  c.genus = exact_div(1 + c.inner - diagonal_volume(a) - g.sum(), 2, "genus");
  c.numerator = SparsePolynomial::constant(1);
  for (std::size_t i = 0; i < 3; ++i) c.numerator.add_term(as_degree(a.diagonal_product(g, i)), -1);
  c.numerator.add_term(as_degree(c.l1), 1);
  c.numerator.add_term(as_degree(c.l2), 1);

  const bool consistent =
      c.l1 * c.l2 == pairwise_diagonal_sum(g, a) - g.product() &&
      std::minmax(c.l1, c.l2) == std::minmax(low, high) &&
      c.frobenius == frobenius_from_matrix(g, a) && c.genus == genus_from_matrix(g, a);
  if (!consistent) raise(ErrorCode::InternalMismatch, "closed forms disagree for " + g.to_string());
  return c;
}

ClosedForm3 symmetric_closed(const Generators& g) {
  require_triple(g);
  return symmetric_closed(g, relation_matrix(g));
}

ClosedForm3 symmetric_closed(const Generators& g, const RelationMatrix& a) {
  require_triple(g);
  const Classification cls = classify(g, a);
  if (cls.kind != SymmetryKind::Symmetric) raise(ErrorCode::NonSymmetricInput, g.to_string() + " is not symmetric");
  ClosedForm3 c;
  c.kind = SymmetryKind::Symmetric;
  c.matrix = a;
  c.inner = diagonal_sum(g, a);
  c.j = a.diagonal_product(g, cls.j);
  c.l1 = std::min(cls.lcm, c.j);
  c.l2 = cls.lcm + c.j;
  c.frobenius = cls.lcm + c.j - g.sum();
  c.genus = exact_div(c.frobenius + 1, 2, "symmetric genus");
  c.numerator = SparsePolynomial::one_minus_power(as_degree(cls.lcm)) *
                SparsePolynomial::one_minus_power(as_degree(c.j));
  return c;
}

ClosedForm3 solve_triple(const Generators& g) {
  require_triple(g);
  const RelationMatrix a = relation_matrix(g);
  if (classify(g, a).kind == SymmetryKind::Symmetric) return symmetric_closed(g, a);
  return closed_form(g, a);
}

PythagoreanForm pythagorean(std::int64_t k1, std::int64_t k2) {
  if (!(k1 > k2 && k2 >= 1) || std::gcd(k1, k2) != 1 || (k1 - k2) % 2 == 0) {
    raise(ErrorCode::NotPrimitive, "(" + std::to_string(k1) + ", " + std::to_string(k2) +
                                       ") needs k1 > k2 >= 1, coprime, of opposite parity");
  }
  if (k1 > 30000) raise(ErrorCode::OutOfRange, "k1 too large");
  PythagoreanForm p{{k1 * k1 - k2 * k2, 2 * k1 * k2, k1 * k1 + k2 * k2},
                    validate_generators({k1 * k1 - k2 * k2, 2 * k1 * k2, k1 * k1 + k2 * k2}),
                    {},
                    0,
                    0,
                    0};
  p.matrix.diagonal = {k1 + k2, k1, k1};
  p.matrix.rows = {{0, k1 - k2, k1 - k2}, {k2, 0, k2}, {k1, k2, 0}};
  for (std::size_t j = 0; j < 3; ++j) {
    Integer rhs = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != j) rhs += make_integer(p.matrix.rows[j][i]) * make_integer(p.triple[i]);
    }
    if (rhs != make_integer(p.matrix.diagonal[j]) * make_integer(p.triple[j])) {
      raise(ErrorCode::InternalMismatch, "relation row does not balance");
    }
  }
  const Integer a = make_integer(k1), b = make_integer(k2);
  p.frobenius = a * (a * a - b * b + 2 * (a * b - a - b));
  p.genus = exact_div(1 + a * a * a - b * b * b, 2, "pythagorean genus") + a * (a * b - a - b);
  p.j = b * (a - b) * (a - b);
  return p;
}

Integer johnson_reduce(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  if (d1 <= 0 || d2 <= 0 || d3 <= 0) raise(ErrorCode::InvalidInput, "entries must be positive");
  if (std::gcd(std::gcd(d1, d2), d3) != 1) raise(ErrorCode::NotCoprime, "entries share a factor");
  const std::int64_t k = std::gcd(d1, d2);
  const std::vector<std::int64_t> raw{d1 / k, d2 / k, d3};
  const Integer inner = frobenius_of_minimal(minimal_subset(raw));
  return make_integer(k) * inner + make_integer(k - 1) * make_integer(d3);
}

}  // namespace nsg
