// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_REPRESENTABILITY_HPP
#define NSG_REPRESENTABILITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsg/generators.hpp"
#include "nsg/integer.hpp"

namespace nsg {

/// Least representable number in every residue class modulo the smallest
/// generator (the Apery set), built by round-robin relaxation.
class ResidueTable {
 public:
  /// Positive entries, any order; a common divisor is allowed.
  explicit ResidueTable(std::span<const std::int64_t> generators);

  bool contains(std::int64_t n) const;
  bool contains(const Integer& n) const;

  /// 0 for an empty generator list (only 0 is representable).
  std::int64_t modulus() const noexcept { return modulus_; }
  /// Least representable element congruent to r, or -1.
  std::int64_t least(std::int64_t r) const { return least_[static_cast<std::size_t>(r)]; }
  bool all_classes_reached() const;

  /// Largest non-representable integer; requires all classes reached.
  Integer frobenius() const;
  /// Count of non-representable positive integers; requires all classes reached.
  Integer genus() const;

 private:
  std::int64_t modulus_ = 0;
  std::vector<std::int64_t> least_;
};

bool is_representable(const Integer& n, const Generators& g);

}  // namespace nsg

#endif  // NSG_REPRESENTABILITY_HPP
