// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_RELATION_HPP
#define NSG_RELATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nsg/generators.hpp"
#include "nsg/integer.hpp"

namespace nsg {

/// Minimal relations a_jj d_j = sum_{i != j} a_ji d_i, one row per generator.
/// Indices are zero based.
struct RelationMatrix {
  std::vector<std::int64_t> diagonal;            // a_jj
  std::vector<std::vector<std::int64_t>> rows;   // rows[j][i] = a_ji, zero at i == j

  std::size_t dimension() const noexcept { return diagonal.size(); }
  /// a_jj on the diagonal, a_ji elsewhere.
  std::int64_t at(std::size_t j, std::size_t i) const {
    return i == j ? diagonal[j] : rows[j][i];
  }
  /// Signed matrix with a_jj on the diagonal and -a_ji off it.
  std::int64_t signed_at(std::size_t j, std::size_t i) const {
    return i == j ? diagonal[j] : -rows[j][i];
  }
  /// a_jj * d_j
  Integer diagonal_product(const Generators& g, std::size_t j) const;

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;
};

/// Smallest v >= 2 with v*d_j representable by the other generators.
std::int64_t diagonal_coefficient(const Generators& g, std::size_t j);

/// Rows use the lexicographically smallest witness vector, in index order.
RelationMatrix relation_matrix(const Generators& g);

enum class SymmetryKind { Symmetric, NonSymmetric };

struct Classification {
  SymmetryKind kind = SymmetryKind::NonSymmetric;
  /// First colliding pair i < k with a_ii d_i == a_kk d_k, and the remaining index.
  std::size_t i = 0, k = 0, j = 0;
  Integer lcm = 0;
};

/// Three generators only (DimensionUnsupported otherwise). The matrix test is
/// cross-checked against the gap-set definition; disagreement raises
/// InternalMismatch.
Classification classify(const Generators& g, const RelationMatrix& a);

/// Definition test: for every 0 <= s <= F exactly one of s, F - s is a member.
bool is_symmetric(const Generators& g);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct StandardFormReport {
  std::array<Integer, 3> cofactors;  // the three 2x2 minors, equal to d1, d2, d3
  std::vector<IdentityCheck> checks;
};

/// Structural identities of a non-symmetric three generator matrix.
/// Throws DimensionUnsupported, SymmetricInput or StandardFormViolation.
StandardFormReport verify_standard_form(const Generators& g, const RelationMatrix& a);

}  // namespace nsg

#endif  // NSG_RELATION_HPP
