// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/polynomial.hpp"

namespace nsg {

SparsePolynomial SparsePolynomial::monomial(std::uint64_t degree, const Integer& coeff) {
  SparsePolynomial p;
  p.add_term(degree, coeff);
  return p;
}

SparsePolynomial SparsePolynomial::one_minus_power(std::uint64_t d) {
  SparsePolynomial p;
  p.add_term(0, 1);
  p.add_term(d, -1);
  return p;
}

void SparsePolynomial::add_term(std::uint64_t degree, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer SparsePolynomial::coefficient(std::uint64_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer SparsePolynomial::multiplicity_count() const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) total += abs(c);
  return total;
}

std::optional<std::uint64_t> SparsePolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Rational SparsePolynomial::evaluate(const Rational& z) const {
  Rational acc = 0;
  std::uint64_t prev = terms_.empty() ? 0 : terms_.rbegin()->first;
  // Horner over the sparse exponents, highest first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational step;
    mpz_pow_ui(step.get_num_mpz_t(), z.get_num_mpz_t(), prev - it->first);
    mpz_pow_ui(step.get_den_mpz_t(), z.get_den_mpz_t(), prev - it->first);
    step.canonicalize();
    acc = acc * step + Rational(it->second);
    prev = it->first;
  }
  Rational tail;
  mpz_pow_ui(tail.get_num_mpz_t(), z.get_num_mpz_t(), prev);
  mpz_pow_ui(tail.get_den_mpz_t(), z.get_den_mpz_t(), prev);
  tail.canonicalize();
  return acc * tail;
}

Integer SparsePolynomial::derivative_at_one(unsigned k) const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    if (e < k) continue;
    Integer falling = 1;
    for (unsigned i = 0; i < k; ++i) falling *= Integer(static_cast<unsigned long>(e - i));
    total += c * falling;
  }
  return total;
}

SparsePolynomial SparsePolynomial::derivative() const {
  SparsePolynomial d;
  for (const auto& [e, c] : terms_) {
    if (e > 0) d.add_term(e - 1, c * Integer(static_cast<unsigned long>(e)));
  }
  return d;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& o) {
  *this = *this * o;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

SparsePolynomial operator-(const SparsePolynomial& a) {
  SparsePolynomial r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string SparsePolynomial::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str(10);
      continue;
    }
    if (mag != 1) out += mag.get_str(10) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace nsg
