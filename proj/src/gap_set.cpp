// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/gap_set.hpp"

#include <algorithm>
#include <numeric>

#include "nsg/error.hpp"

namespace nsg {

bool GapSet::contains(std::int64_t n) const {
  return std::binary_search(gaps.begin(), gaps.end(), n);
}

GapSet make_gap_set(std::vector<std::int64_t> sorted_gaps) {
  GapSet s;
  s.gaps = std::move(sorted_gaps);
  s.frobenius = s.gaps.empty() ? Integer(-1) : make_integer(s.gaps.back());
  s.genus = Integer(static_cast<unsigned long>(s.gaps.size()));
  s.conductor = s.frobenius + 1;
  return s;
}

GapSet gap_set(const Generators& g) {
  const auto d = g.elements();
  const std::int64_t d1 = g.smallest();
  // Once d1 consecutive integers are reached every larger one is too.
  std::int64_t bound = -1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (std::gcd(d[i], d[j]) == 1 && (bound < 0 || d[i] * d[j] < bound)) bound = d[i] * d[j];
    }
  }
  std::vector<bool> reach;
  if (bound > 0) reach.reserve(static_cast<std::size_t>(bound));
  std::vector<std::int64_t> gaps;
  std::int64_t run = 0;
  for (std::int64_t n = 0; run < d1; ++n) {
    bool r = n == 0;
    for (std::size_t k = 0; !r && k < d.size() && d[k] <= n; ++k) r = reach[static_cast<std::size_t>(n - d[k])];
    reach.push_back(r);
    if (r) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(n);
    }
  }
  return make_gap_set(std::move(gaps));
}

SylvesterForm sylvester_closed(std::int64_t d1, std::int64_t d2) {
  if (d1 <= 1 || d2 <= 1) raise(ErrorCode::ContainsUnit, "both generators must exceed 1");
  if (std::gcd(d1, d2) != 1) raise(ErrorCode::NotCoprime, "generators are not coprime");
  const Integer a = make_integer(d1), b = make_integer(d2);
  SylvesterForm s;
  s.frobenius = a * b - a - b;
  s.genus = (a - 1) * (b - 1) / 2;
  s.milnor = 2 * s.genus;
  Integer prod = a * b;
  s.numerator = SparsePolynomial::one_minus_power(prod.get_ui());
  return s;
}

}  // namespace nsg
