// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_INTEGER_HPP
#define NSG_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nsg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer make_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::string to_decimal(const Integer& v);
std::string to_decimal(const Rational& v);

/// Parses an optionally signed decimal integer; nullopt on any malformed input.
std::optional<Integer> parse_integer(std::string_view text);

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Square root when `v` is a non-negative perfect square.
std::optional<Integer> exact_sqrt(const Integer& v);

Integer ipow(const Integer& base, unsigned long exponent);

/// Throws OutOfRange when `v` does not fit.
std::int64_t to_int64(const Integer& v);

/// Divides exactly, throwing NonIntegerResult when `den` does not divide `num`.
Integer exact_div(const Integer& num, const Integer& den, const char* what);

/// Truncated decimal expansion of a non-negative rational with `digits` places.
std::string to_fixed(const Rational& v, unsigned digits);

}  // namespace nsg

#endif  // NSG_INTEGER_HPP
