// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_SPARSITY_HPP
#define NSG_SPARSITY_HPP

#include <cstdint>
#include <vector>

#include "nsg/generators.hpp"
#include "nsg/integer.hpp"
#include "nsg/polynomial.hpp"

namespace nsg {

struct SparsityReport {
  Integer count;          // numerator terms counted with multiplicity
  std::size_t distinct = 0;  // distinct non-zero monomials
  Integer bound;          // diagonal-aware bound (exact value for three generators)
  Integer weak_bound;     // 2^{m-1} d1 - 2(m-1)
  bool holds = false;
};

/// Four or more generators: count against the bounds. Three: count against
/// 6 (non-symmetric) or 4 (symmetric). Throws DimensionUnsupported below 3.
SparsityReport sparsity_check(const Generators& g);
SparsityReport sparsity_check(const Generators& g, const SparsePolynomial& q,
                              const std::vector<std::int64_t>& diagonal);

struct DiagonalSumCheck {
  Integer lhs;     // sum_{j>=2} a_jj
  Rational rhs;    // d1 + 2(m-1)(1 - 2^{1-m})
  bool holds = false;
};

DiagonalSumCheck diagonal_sum_check(const Generators& g, const std::vector<std::int64_t>& diagonal);

/// d1 >= m
bool min_element_check(const Generators& g);

}  // namespace nsg

#endif  // NSG_SPARSITY_HPP
