// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/generators.hpp"

#include <algorithm>
#include <numeric>

#include "nsg/error.hpp"
#include "nsg/representability.hpp"

namespace nsg {

Integer Generators::sum() const {
  Integer s = 0;
  for (auto d : elements_) s += make_integer(d);
  return s;
}

Integer Generators::product() const {
  Integer p = 1;
  for (auto d : elements_) p *= make_integer(d);
  return p;
}

std::string Generators::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

namespace {

void check_range(std::int64_t v) {
  if (v <= 0) raise(ErrorCode::InvalidInput, "generator " + std::to_string(v) + " is not positive", v);
  if (v > kMaxElement) raise(ErrorCode::OutOfRange, "generator " + std::to_string(v) + " exceeds 2^31-1", v);
}

}  // namespace

Generators validate_generators(std::span<const std::int64_t> raw) {
  for (auto v : raw) check_range(v);
  for (auto v : raw) {
    if (v == 1) raise(ErrorCode::ContainsUnit, "1 generates every natural number", 1);
  }
  std::vector<std::int64_t> e(raw.begin(), raw.end());
  std::sort(e.begin(), e.end());
  if (auto dup = std::adjacent_find(e.begin(), e.end()); dup != e.end()) {
    raise(ErrorCode::NotMinimal, std::to_string(*dup) + " is listed twice", *dup);
  }
  if (e.size() < 2) raise(ErrorCode::TooShort, "at least two generators are required");
  std::int64_t g = 0;
  for (auto v : e) g = std::gcd(g, v);
  if (g != 1) raise(ErrorCode::NotCoprime, "generators share the factor " + std::to_string(g), g);
  for (std::size_t i = 1; i < e.size(); ++i) {
    ResidueTable smaller(std::span<const std::int64_t>(e.data(), i));
    if (smaller.contains(e[i])) {
      raise(ErrorCode::NotMinimal, std::to_string(e[i]) + " is generated by smaller elements", e[i]);
    }
  }
  return Generators(std::move(e));
}

Generators validate_generators(std::initializer_list<std::int64_t> raw) {
  return validate_generators(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

std::vector<std::int64_t> minimal_subset(std::span<const std::int64_t> raw) {
  for (auto v : raw) check_range(v);
  std::vector<std::int64_t> e(raw.begin(), raw.end());
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  if (!e.empty() && e.front() == 1) return {1};
  std::vector<std::int64_t> kept;
  for (auto v : e) {
    if (kept.empty() || !ResidueTable(kept).contains(v)) kept.push_back(v);
  }
  return kept;
}

}  // namespace nsg
