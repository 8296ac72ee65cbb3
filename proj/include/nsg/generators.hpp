// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_GENERATORS_HPP
#define NSG_GENERATORS_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nsg/integer.hpp"

namespace nsg {

/// Largest accepted generator. Tables are sized by the smallest element.
inline constexpr std::int64_t kMaxElement = 2147483647;

/// A validated minimal generating set: sorted, distinct, all > 1, gcd 1.
class Generators {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  std::int64_t operator[](std::size_t i) const { return elements_[i]; }
  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  std::int64_t smallest() const { return elements_.front(); }

  Integer sum() const;
  Integer product() const;
  /// "{3,4,5}"
  std::string to_string() const;

  friend bool operator==(const Generators&, const Generators&) = default;

 private:
  explicit Generators(std::vector<std::int64_t> elements)
      : elements_(std::move(elements)) {}
  friend Generators validate_generators(std::span<const std::int64_t> raw);

  std::vector<std::int64_t> elements_;
};

/// Throws ContainsUnit, NotMinimal (duplicates or a representable element,
/// with the element attached), TooShort, NotCoprime or OutOfRange.
Generators validate_generators(std::span<const std::int64_t> raw);
Generators validate_generators(std::initializer_list<std::int64_t> raw);

/// Minimal generating subset of an arbitrary positive list. {1} when the
/// list generates every natural number; an empty list stays empty.
std::vector<std::int64_t> minimal_subset(std::span<const std::int64_t> raw);

}  // namespace nsg

#endif  // NSG_GENERATORS_HPP
