// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_CLOSED3_HPP
#define NSG_CLOSED3_HPP

#include <array>
#include <cstdint>

#include "nsg/generators.hpp"
#include "nsg/integer.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/relation.hpp"

namespace nsg {

/// Closed-form invariants of a three generated semigroup.
struct ClosedForm3 {
  SymmetryKind kind = SymmetryKind::NonSymmetric;
  RelationMatrix matrix;
  Integer inner;  // sum a_ii d_i
  Integer j;      // non-symmetric: discriminant root; symmetric: a_jj d_j of the odd index
  /// Positive numerator exponents. Non-symmetric: l1 = a12 d2 + a33 d3 and
  /// l2 = a22 d2 + a13 d3, the roots (<a,d> -+ J)/2 in either order.
  /// Symmetric: the smaller of lcm and a_jj d_j, then their sum.
  Integer l1, l2;
  Integer frobenius;
  Integer genus;
  SparsePolynomial numerator;
};

/// Root of <a,d>^2 - 4 sum_{i>j} a_ii a_jj d_i d_j + 4 d1 d2 d3, cross-checked
/// against |a12 a23 a31 - a13 a32 a21|.
Integer j_invariant(const Generators& g, const RelationMatrix& a);

/// Non-symmetric triples. Throws SymmetricInput, DimensionUnsupported.
ClosedForm3 closed_form(const Generators& g);
ClosedForm3 closed_form(const Generators& g, const RelationMatrix& a);

/// Frobenius and genus straight from the matrix entries, without J.
Integer frobenius_from_matrix(const Generators& g, const RelationMatrix& a);
Integer genus_from_matrix(const Generators& g, const RelationMatrix& a);

/// Symmetric triples. Throws NonSymmetricInput, DimensionUnsupported.
ClosedForm3 symmetric_closed(const Generators& g);
ClosedForm3 symmetric_closed(const Generators& g, const RelationMatrix& a);

/// Dispatches on the classification.
ClosedForm3 solve_triple(const Generators& g);

/// Triples (k1^2 - k2^2, 2 k1 k2, k1^2 + k2^2).
struct PythagoreanForm {
  std::array<std::int64_t, 3> triple;  // in the order above
  Generators generators;               // sorted
  RelationMatrix matrix;               // rows follow `triple`
  Integer frobenius;
  Integer genus;
  Integer j;
};

/// Throws NotPrimitive unless k1 > k2 >= 1, gcd 1 and opposite parity.
PythagoreanForm pythagorean(std::int64_t k1, std::int64_t k2);

/// F(d1,d2,d3) = k F(d1/k, d2/k, d3) + (k-1) d3 with k = gcd(d1, d2),
/// recursing until a closed form applies. Raw positive input, gcd 1.
Integer johnson_reduce(std::int64_t d1, std::int64_t d2, std::int64_t d3);

}  // namespace nsg

#endif  // NSG_CLOSED3_HPP
