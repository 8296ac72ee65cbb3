// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/uniform.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "nsg/closed3.hpp"
#include "nsg/error.hpp"
#include "nsg/relation.hpp"

namespace nsg {

namespace {

UniformForm uniform_from_sums(std::int64_t a, const Generators& g) {
  const Integer d1 = make_integer(g[0]), d2 = make_integer(g[1]), d3 = make_integer(g[2]);
  const Integer s1 = d1 + d2 + d3;
  const Integer s2 = d1 * d2 + d1 * d3 + d2 * d3;
  const Integer s3 = d1 * d2 * d3;
  const Integer ai = make_integer(a);
  auto root = exact_sqrt((s1 * s1 - 4 * s2) * ai * ai + 4 * s3);
  if (!root) raise(ErrorCode::InternalMismatch, "uniform discriminant is not a square for " + g.to_string());
  return {exact_div((ai - 2) * s1 + *root, 2, "uniform frobenius"),
          exact_div(1 + (ai - 1) * s1 - ai * ai * ai, 2, "uniform genus")};
}

}  // namespace

UniformForm uniform_closed(std::int64_t a, const Generators& g) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "needs three generators");
  const RelationMatrix m = relation_matrix(g);
  if (std::any_of(m.diagonal.begin(), m.diagonal.end(), [a](auto v) { return v != a; })) {
    raise(ErrorCode::InvalidInput, "matrix diagonal of " + g.to_string() + " is not constantly " + std::to_string(a));
  }
  if (classify(g, m).kind == SymmetryKind::Symmetric) raise(ErrorCode::SymmetricInput, g.to_string() + " is symmetric");
  return uniform_from_sums(a, g);
}

std::vector<UniformRecord> scan_uniform(std::int64_t a, std::int64_t d3_max, unsigned threads) {
  if (a < 3) raise(ErrorCode::InvalidInput, "uniform diagonal must be at least 3");
  if (d3_max > 100000) raise(ErrorCode::OutOfRange, "d3 bound too large");
  std::vector<UniformRecord> found;
  std::mutex lock;
  std::atomic<std::int64_t> next{4};
  auto work = [&] {
    for (std::int64_t d3 = next++; d3 <= d3_max; d3 = next++) {
      for (std::int64_t d2 = 3; d2 < d3; ++d2) {
        for (std::int64_t d1 = 2; d1 < d2; ++d1) {
          if (std::gcd(std::gcd(d1, d2), d3) != 1) continue;
          const std::int64_t raw[3] = {d1, d2, d3};
          if (minimal_subset(raw).size() != 3) continue;
          const Generators g = validate_generators(raw);
          bool uniform = true;
          for (std::size_t j = 0; j < 3 && uniform; ++j) uniform = diagonal_coefficient(g, j) == a;
          if (!uniform) continue;
          const RelationMatrix m = relation_matrix(g);
          if (classify(g, m).kind == SymmetryKind::Symmetric) continue;
          const UniformForm u = uniform_from_sums(a, g);
          const ClosedForm3 c = closed_form(g, m);
          if (u.frobenius != c.frobenius || u.genus != c.genus) {
            raise(ErrorCode::InternalMismatch, "uniform closed form disagrees for " + g.to_string());
          }
          std::lock_guard guard(lock);
          found.push_back({{d1, d2, d3}, u.frobenius, u.genus});
        }
      }
    }
  };
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (unsigned t = 0; t < std::max(1u, threads); ++t) {
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        std::lock_guard guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.triple < y.triple; });
  return found;
}

}  // namespace nsg
