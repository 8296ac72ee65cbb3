// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_GAP_SET_HPP
#define NSG_GAP_SET_HPP

#include <cstdint>
#include <vector>

#include "nsg/generators.hpp"
#include "nsg/integer.hpp"
#include "nsg/polynomial.hpp"

namespace nsg {

/// Positive integers outside the semigroup.
struct GapSet {
  std::vector<std::int64_t> gaps;  // ascending
  Integer frobenius = -1;          // largest gap, -1 when there is none
  Integer genus = 0;
  Integer conductor = 0;

  bool contains(std::int64_t n) const;
};

/// Fills frobenius/genus/conductor from a sorted list of gaps.
GapSet make_gap_set(std::vector<std::int64_t> sorted_gaps);

/// Enumerates gaps by bitset reachability. The search bound is the smallest
/// product of a coprime pair, or else runs until d1 consecutive members.
GapSet gap_set(const Generators& g);

/// Two generator closed forms.
struct SylvesterForm {
  Integer frobenius;
  Integer genus;
  Integer milnor;  // 2 * genus
  SparsePolynomial numerator;
};

/// Throws NotCoprime, ContainsUnit.
SylvesterForm sylvester_closed(std::int64_t d1, std::int64_t d2);

}  // namespace nsg

#endif  // NSG_GAP_SET_HPP
