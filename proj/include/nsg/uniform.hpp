// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_UNIFORM_HPP
#define NSG_UNIFORM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "nsg/generators.hpp"
#include "nsg/integer.hpp"

namespace nsg {

struct UniformForm {
  Integer frobenius;
  Integer genus;
};

/// Closed F and G for a non-symmetric triple whose matrix diagonal is
/// constantly `a`. Throws InvalidInput when the diagonal differs.
UniformForm uniform_closed(std::int64_t a, const Generators& g);

struct UniformRecord {
  std::array<std::int64_t, 3> triple;
  Integer frobenius;
  Integer genus;
};

/// Every non-symmetric triple with d3 <= d3_max and diagonal (a, a, a),
/// sorted. Each record is cross-checked against the general closed form.
std::vector<UniformRecord> scan_uniform(std::int64_t a, std::int64_t d3_max, unsigned threads = 1);

}  // namespace nsg

#endif  // NSG_UNIFORM_HPP
