// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_GENERA_HPP
#define NSG_GENERA_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "nsg/gap_set.hpp"
#include "nsg/generators.hpp"
#include "nsg/integer.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/relation.hpp"

namespace nsg {

/// g_n = sum of s^n over gaps, for n = 0 .. n_max.
std::vector<Integer> power_sums(const GapSet& gaps, unsigned n_max);

/// g1, g2, g3 for two generators. Throws NonIntegerResult, NotCoprime.
std::array<Integer, 3> genera2_closed(std::int64_t d1, std::int64_t d2);

/// g1 for a non-symmetric triple from the matrix diagonal.
/// Throws NonIntegerResult, SymmetricInput, DimensionUnsupported.
Integer genus1_closed3(const Generators& g, const RelationMatrix& a);

/// g1, g2, g3 from derivatives of the gap polynomial at z = 1.
std::array<Integer, 3> genera_from_derivatives(const SparsePolynomial& gap_poly);

}  // namespace nsg

#endif  // NSG_GENERA_HPP
