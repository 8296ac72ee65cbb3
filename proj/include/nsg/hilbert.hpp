// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_HILBERT_HPP
#define NSG_HILBERT_HPP

#include "nsg/gap_set.hpp"
#include "nsg/generators.hpp"
#include "nsg/polynomial.hpp"

namespace nsg {

/// Gap generating polynomial: sum of z^s over gaps.
SparsePolynomial gap_polynomial(const GapSet& gaps);

/// sum_{k<d1} z^k - (1 - z^{d1}) * gap polynomial. Its terms are the Apery
/// set with respect to d1, each with coefficient 1.
SparsePolynomial apery_polynomial(const Generators& g, const GapSet& gaps);

/// Numerator Q of the Hilbert series H = Q / prod_j (1 - z^{d_j}).
SparsePolynomial hilbert_numerator(const Generators& g);
SparsePolynomial hilbert_numerator(const Generators& g, const GapSet& gaps);

/// Frobenius number read off the numerator degree.
Integer frobenius_from_numerator(const Generators& g, const SparsePolynomial& q);

/// Genus from the (m+1)-th derivative at z = 1 of
/// prod_j (1 - z^{d_j}) - (1 - z) Q. Throws NonIntegerResult.
Integer genus_from_numerator(const Generators& g, const SparsePolynomial& q);

}  // namespace nsg

#endif  // NSG_HILBERT_HPP
