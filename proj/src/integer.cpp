// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/integer.hpp"

#include <limits>

#include "nsg/error.hpp"

namespace nsg {

std::string to_decimal(const Integer& v) { return v.get_str(10); }

std::string to_decimal(const Rational& v) { return v.get_str(10); }

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = parse_integer(text.substr(0, slash));
  std::optional<Integer> den = Integer(1);
  if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) raise(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

std::optional<Integer> exact_sqrt(const Integer& v) {
  if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::int64_t to_int64(const Integer& v) {
  if (v > Integer(std::numeric_limits<long>::max()) || v < Integer(std::numeric_limits<long>::min())) {
    raise(ErrorCode::OutOfRange, to_decimal(v) + " does not fit in 64 bits");
  }
  return v.get_si();
}

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (den == 0 || mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
    raise(ErrorCode::NonIntegerResult,
          std::string(what) + ": " + to_decimal(num) + " / " + to_decimal(den) + " is not an integer");
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::string to_fixed(const Rational& v, unsigned digits) {
  Integer scale = ipow(10, digits);
  Integer scaled = v.get_num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), v.get_den_mpz_t());
  std::string sign;
  if (scaled < 0) {
    sign = "-";
    scaled = -scaled;
  }
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string f = frac.get_str(10);
  if (digits == 0) return sign + whole.get_str(10);
  return sign + whole.get_str(10) + "." + std::string(digits - f.size(), '0') + f;
}

}  // namespace nsg
