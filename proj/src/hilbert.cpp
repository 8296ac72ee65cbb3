// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/hilbert.hpp"

#include "nsg/error.hpp"

namespace nsg {

SparsePolynomial gap_polynomial(const GapSet& gaps) {
  SparsePolynomial p;
  for (auto s : gaps.gaps) p.add_term(static_cast<std::uint64_t>(s), 1);
  return p;
}

SparsePolynomial apery_polynomial(const Generators& g, const GapSet& gaps) {
  const auto d1 = static_cast<std::uint64_t>(g.smallest());
  SparsePolynomial p;
  for (std::uint64_t k = 0; k < d1; ++k) p.add_term(k, 1);
  return p - SparsePolynomial::one_minus_power(d1) * gap_polynomial(gaps);
}

SparsePolynomial hilbert_numerator(const Generators& g) { return hilbert_numerator(g, gap_set(g)); }

SparsePolynomial hilbert_numerator(const Generators& g, const GapSet& gaps) {
  SparsePolynomial q = apery_polynomial(g, gaps);
  for (std::size_t j = 1; j < g.size(); ++j) {
    q = SparsePolynomial::one_minus_power(static_cast<std::uint64_t>(g[j])) * q;
  }
  return q;
}

Integer frobenius_from_numerator(const Generators& g, const SparsePolynomial& q) {
  auto deg = q.degree();
  if (!deg) raise(ErrorCode::InternalMismatch, "zero numerator");
  return Integer(static_cast<unsigned long>(*deg)) - g.sum();
}

Integer genus_from_numerator(const Generators& g, const SparsePolynomial& q) {
  const auto m = static_cast<unsigned>(g.size());
  SparsePolynomial n = SparsePolynomial::constant(1);
  for (auto d : g.elements()) n = n * SparsePolynomial::one_minus_power(static_cast<std::uint64_t>(d));
  n -= SparsePolynomial::one_minus_power(1) * q;
  Integer den = g.product();
  for (unsigned i = 2; i <= m + 1; ++i) den *= i;
  if ((m + 1) % 2 == 1) den = -den;
  return exact_div(n.derivative_at_one(m + 1), den, "genus from numerator");
}

}  // namespace nsg
