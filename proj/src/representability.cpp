// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/representability.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "nsg/error.hpp"

namespace nsg {

ResidueTable::ResidueTable(std::span<const std::int64_t> generators) {
  if (generators.empty()) return;
  modulus_ = *std::min_element(generators.begin(), generators.end());
  if (modulus_ <= 0) raise(ErrorCode::InvalidInput, "generators must be positive");
  least_.assign(static_cast<std::size_t>(modulus_), -1);
  least_[0] = 0;
  const auto m = modulus_;
  for (auto a : generators) {
    const std::int64_t g = std::gcd(a, m);
    const std::int64_t cycle = m / g;
    for (std::int64_t r = 0; r < g; ++r) {
      std::int64_t n = std::numeric_limits<std::int64_t>::max();
      for (std::int64_t q = r; q < m; q += g) {
        if (least_[q] >= 0) n = std::min(n, least_[q]);
      }
      if (n == std::numeric_limits<std::int64_t>::max()) continue;
      for (std::int64_t i = 0; i < cycle; ++i) {
        n += a;
        auto& slot = least_[static_cast<std::size_t>(n % m)];
        if (slot >= 0 && slot < n) n = slot;
        slot = n;
      }
    }
  }
}

bool ResidueTable::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (modulus_ == 0) return n == 0;
  auto w = least_[static_cast<std::size_t>(n % modulus_)];
  return w >= 0 && n >= w;
}

bool ResidueTable::contains(const Integer& n) const {
  if (sgn(n) < 0) return false;
  if (n.fits_slong_p()) return contains(static_cast<std::int64_t>(n.get_si()));
  if (modulus_ == 0) return false;
  Integer r = n % make_integer(modulus_);
  return least_[r.get_ui()] >= 0;
}

bool ResidueTable::all_classes_reached() const {
  return modulus_ > 0 && std::all_of(least_.begin(), least_.end(), [](auto w) { return w >= 0; });
}

Integer ResidueTable::frobenius() const {
  if (!all_classes_reached()) raise(ErrorCode::NotCoprime, "infinitely many gaps");
  return make_integer(*std::max_element(least_.begin(), least_.end()) - modulus_);
}

Integer ResidueTable::genus() const {
  if (!all_classes_reached()) raise(ErrorCode::NotCoprime, "infinitely many gaps");
  Integer total = 0;
  for (std::int64_t r = 0; r < modulus_; ++r) total += make_integer((least_[r] - r) / modulus_);
  return total;
}

bool is_representable(const Integer& n, const Generators& g) {
  return ResidueTable(g.elements()).contains(n);
}

}  // namespace nsg
