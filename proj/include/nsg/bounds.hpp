// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_BOUNDS_HPP
#define NSG_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nsg/generators.hpp"
#include "nsg/integer.hpp"
#include "nsg/relation.hpp"

namespace nsg {

/// One exact comparison lhs <op> rhs.
struct BoundCheck {
  std::string name;
  std::string relation;  // ">=" or "=="
  Integer lhs, rhs;
  bool holds = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_hold() const;
};

/// Lower bounds on F and G in squared integer form. Every triple gets the
/// general Frobenius bound; the remaining checks depend on `kind`.
BoundReport lower_bounds(const Generators& g, const Integer& frobenius, const Integer& genus,
                         SymmetryKind kind);

struct Admissibility {
  bool admissible = false;
  std::string reason;  // empty when admissible
};

/// Pairwise coprime, no element representable by the other two, none
/// dividing the sum of the other two, and not almost arithmetic.
Admissibility admissible(std::int64_t d1, std::int64_t d2, std::int64_t d3);

struct ConjectureCheck {
  bool holds = false;
  Integer lhs, rhs;        // (F + sum d)^q cd^q  versus  cn^q (d1 d2 d3)^p
  std::string bound_approx;  // C (d1 d2 d3)^nu - sum d, truncated to 3 places
};

/// F <= C (d1 d2 d3)^nu - sum d, decided exactly. nu > 0, C > 0.
ConjectureCheck conjecture_bound_check(std::array<std::int64_t, 3> d, const Integer& frobenius,
                                       const Rational& c, const Rational& nu);

struct FamilyMember {
  std::int64_t l = 0;
  std::array<std::int64_t, 3> triple;
  RelationMatrix matrix;
  Integer frobenius;
  Admissibility admissibility;
  bool first_prime = false;  // 2l + 1 prime, informational
};

/// (2l+1, 2l+3, 4l+3) with F = 2l^2 + 3l - 1. Throws InvalidInput for l < 1.
FamilyMember counterexample_family(std::int64_t l);

struct CriticalL {
  bool exact = false;
  Rational log2_lo, log2_hi;  // equal when exact
  Integer value;              // 2^log2 when exact and integral, else 0
};

/// lg l_cr = (4 nu - 1)/(2 - 3 nu) + lg C/(2 - 3 nu). Exact when C is a power
/// of two, otherwise a rational interval. Throws NuTooLarge for nu >= 2/3.
CriticalL critical_l(const Rational& c, const Rational& nu);

}  // namespace nsg

#endif  // NSG_BOUNDS_HPP
