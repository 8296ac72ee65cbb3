// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/sparsity.hpp"

#include "nsg/error.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/relation.hpp"

namespace nsg {

SparsityReport sparsity_check(const Generators& g) {
  if (g.size() < 3) raise(ErrorCode::DimensionUnsupported, "sparsity needs at least three generators");
  std::vector<std::int64_t> diagonal;
  for (std::size_t j = 0; j < g.size(); ++j) diagonal.push_back(diagonal_coefficient(g, j));
  return sparsity_check(g, hilbert_numerator(g), diagonal);
}

SparsityReport sparsity_check(const Generators& g, const SparsePolynomial& q,
                              const std::vector<std::int64_t>& diagonal) {
  const std::size_t m = g.size();
  if (m < 3) raise(ErrorCode::DimensionUnsupported, "sparsity needs at least three generators");
  if (diagonal.size() != m) raise(ErrorCode::InvalidInput, "diagonal length differs from the generator count");
  SparsityReport r;
  r.count = q.multiplicity_count();
  r.distinct = q.nonzero_count();
  const Integer scale = ipow(2, static_cast<unsigned long>(m - 1));
  const Integer d1 = make_integer(g[0]);
  r.weak_bound = scale * d1 - 2 * Integer(static_cast<unsigned long>(m - 1));
  if (m == 3) {
    r.bound = is_symmetric(g) ? 4 : 6;
    r.holds = r.count == r.bound;
    return r;
  }
  Integer excess = 0;
  for (std::size_t j = 1; j < m; ++j) excess += make_integer(diagonal[j]) - 2;
  r.bound = scale * (d1 - excess) - 2 * Integer(static_cast<unsigned long>(m - 1));
  r.holds = r.count <= r.bound && r.bound <= r.weak_bound;
  return r;
}

DiagonalSumCheck diagonal_sum_check(const Generators& g, const std::vector<std::int64_t>& diagonal) {
  const std::size_t m = g.size();
  if (diagonal.size() != m) raise(ErrorCode::InvalidInput, "diagonal length differs from the generator count");
  DiagonalSumCheck c;
  c.lhs = 0;
  for (std::size_t j = 1; j < m; ++j) c.lhs += make_integer(diagonal[j]);
  const Rational half_power(Integer(1), ipow(2, static_cast<unsigned long>(m - 1)));
  c.rhs = Rational(make_integer(g[0])) + 2 * Rational(static_cast<unsigned long>(m - 1)) * (1 - half_power);
  c.holds = Rational(c.lhs) <= c.rhs;
  return c;
}

bool min_element_check(const Generators& g) {
  return g[0] >= static_cast<std::int64_t>(g.size());
}

}  // namespace nsg
