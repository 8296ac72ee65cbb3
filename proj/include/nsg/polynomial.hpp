// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_POLYNOMIAL_HPP
#define NSG_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nsg/integer.hpp"

namespace nsg {

/// Polynomial in one variable with integer coefficients, stored by degree.
/// Zero coefficients are never kept.
class SparsePolynomial {
 public:
  using Terms = std::map<std::uint64_t, Integer>;

  SparsePolynomial() = default;

  static SparsePolynomial monomial(std::uint64_t degree, const Integer& coeff = 1);
  static SparsePolynomial constant(const Integer& c) { return monomial(0, c); }
  /// 1 - z^d
  static SparsePolynomial one_minus_power(std::uint64_t d);

  void add_term(std::uint64_t degree, const Integer& coeff);
  Integer coefficient(std::uint64_t degree) const;
  const Terms& terms() const noexcept { return terms_; }

  std::size_t nonzero_count() const noexcept { return terms_.size(); }
  /// Sum of |coefficients|: terms counted with multiplicity, so 2*z^90 counts twice.
  Integer multiplicity_count() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<std::uint64_t> degree() const;

  Rational evaluate(const Rational& z) const;
  /// k-th derivative evaluated at z = 1, i.e. sum c_e e(e-1)...(e-k+1).
  Integer derivative_at_one(unsigned k) const;
  SparsePolynomial derivative() const;

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const SparsePolynomial& o);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator-(const SparsePolynomial& a);
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

  /// Ascending degree, e.g. "1 - z^161 - z^203 + 2*z^90".
  std::string to_string(std::string_view var = "z") const;

 private:
  Terms terms_;
};

}  // namespace nsg

#endif  // NSG_POLYNOMIAL_HPP
