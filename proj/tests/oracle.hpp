// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library.

#ifndef NSG_TESTS_ORACLE_HPP
#define NSG_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

/// Unbounded-knapsack membership table for 0..limit, one generator at a time.
inline std::vector<char> members_up_to(const std::vector<i64>& d, i64 limit) {
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 0);
  in[0] = 1;
  for (i64 dj : d) {
    for (i64 n = dj; n <= limit; ++n) in[static_cast<std::size_t>(n)] |= in[static_cast<std::size_t>(n - dj)];
  }
  return in;
}

/// Schur: every gap is below (d1 - 1)(dm - 1).
inline i64 gap_limit(const std::vector<i64>& d) {
  auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  return (*lo - 1) * (*hi - 1);
}

inline std::vector<i64> gaps(const std::vector<i64>& d) {
  const i64 limit = gap_limit(d);
  auto in = members_up_to(d, limit);
  std::vector<i64> out;
  for (i64 n = 1; n <= limit; ++n) {
    if (!in[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

inline bool representable(const std::vector<i64>& d, i64 n) {
  if (n < 0) return false;
  return members_up_to(d, n)[static_cast<std::size_t>(n)] != 0;
}

inline i64 frobenius(const std::vector<i64>& d) {
  auto g = gaps(d);
  return g.empty() ? -1 : g.back();
}

/// Dense coefficients of (sum_{s in S, s <= D} z^s) * prod (1 - z^{d_j}) truncated at D.
/// With D = F + sum d this is the Hilbert numerator.
inline std::map<i64, i64> numerator(const std::vector<i64>& d) {
  const i64 f = frobenius(d);
  const i64 top = f + std::accumulate(d.begin(), d.end(), i64{0});
  auto in = members_up_to(d, top);
  std::vector<i64> c(static_cast<std::size_t>(top + 1));
  for (i64 n = 0; n <= top; ++n) c[static_cast<std::size_t>(n)] = in[static_cast<std::size_t>(n)];
  for (i64 dj : d) {
    for (i64 n = top; n >= dj; --n) c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - dj)];
  }
  std::map<i64, i64> out;
  for (i64 n = 0; n <= top; ++n) {
    if (c[static_cast<std::size_t>(n)] != 0) out[n] = c[static_cast<std::size_t>(n)];
  }
  return out;
}

struct Row {
  i64 diagonal;
  std::vector<i64> witness;  // zero at the diagonal slot
};

/// Smallest v >= 2 with v d_j a combination of the others, then the
/// lexicographically smallest witness by full enumeration.
inline Row relation_row(const std::vector<i64>& d, std::size_t j) {
  std::vector<i64> rest;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != j) rest.push_back(d[i]);
  }
  i64 v = 2;
  while (!representable(rest, v * d[j])) ++v;
  const i64 target = v * d[j];
  std::optional<std::vector<i64>> best;
  std::vector<i64> cur(d.size(), 0);
  std::function<void(std::size_t, i64)> walk = [&](std::size_t i, i64 left) {
    if (i == d.size()) {
      if (left == 0 && (!best || cur < *best)) best = cur;
      return;
    }
    if (i == j) {
      walk(i + 1, left);
      return;
    }
    for (i64 c = 0; c * d[i] <= left; ++c) {
      cur[i] = c;
      walk(i + 1, left - c * d[i]);
    }
    cur[i] = 0;
  };
  walk(0, target);
  return {v, *best};
}

inline bool is_symmetric(const std::vector<i64>& d) {
  const i64 f = frobenius(d);
  auto g = gaps(d);
  return static_cast<i64>(g.size()) * 2 == f + 1;
}

/// Minimal generating triples with d3 <= limit, ascending.
inline std::vector<std::vector<i64>> triples(i64 limit) {
  std::vector<std::vector<i64>> out;
  for (i64 d3 = 4; d3 <= limit; ++d3) {
    for (i64 d2 = 3; d2 < d3; ++d2) {
      for (i64 d1 = 2; d1 < d2; ++d1) {
        if (std::gcd(std::gcd(d1, d2), d3) != 1) continue;
        if (representable({d1}, d2) || representable({d1, d2}, d3)) continue;
        out.push_back({d1, d2, d3});
      }
    }
  }
  return out;
}

/// Seeded random minimal tuples of size m with entries in [2, max].
inline std::vector<std::vector<i64>> random_tuples(std::size_t m, i64 max, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> pick(2, max);
  std::vector<std::vector<i64>> out;
  while (out.size() < count) {
    std::vector<i64> d;
    while (d.size() < m) {
      i64 v = pick(rng);
      if (std::find(d.begin(), d.end(), v) == d.end()) d.push_back(v);
    }
    std::sort(d.begin(), d.end());
    i64 g = 0;
    for (auto v : d) g = std::gcd(g, v);
    if (g != 1) continue;
    bool minimal = true;
    for (std::size_t i = 1; i < m && minimal; ++i) {
      minimal = !representable(std::vector<i64>(d.begin(), d.begin() + static_cast<long>(i)), d[i]);
    }
    if (minimal) out.push_back(d);
  }
  return out;
}

}  // namespace oracle

#endif  // NSG_TESTS_ORACLE_HPP
