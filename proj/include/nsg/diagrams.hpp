// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef NSG_DIAGRAMS_HPP
#define NSG_DIAGRAMS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nsg/gap_set.hpp"
#include "nsg/generators.hpp"
#include "nsg/polynomial.hpp"
#include "nsg/relation.hpp"

namespace nsg {

/// sigma(p, q) = d1 d2 - p d1 - q d2
std::int64_t sigma(std::int64_t d1, std::int64_t d2, std::int64_t p, std::int64_t q);

/// Grid coordinates (p, q) of a gap of <d1, d2>. Throws NotAGap, NotCoprime.
std::pair<std::int64_t, std::int64_t> pq_of(std::int64_t t, std::int64_t d1, std::int64_t d2);

/// Gaps of <d1, d2> laid out as sigma(p, q), 1 <= q < d1, 1 <= p <= p_b(q).
class DiagramGrid {
 public:
  DiagramGrid() = default;
  DiagramGrid(std::int64_t d1, std::int64_t d2);

  std::int64_t d1() const noexcept { return d1_; }
  std::int64_t d2() const noexcept { return d2_; }
  /// Number of columns, d1 - 1.
  std::int64_t width() const noexcept { return static_cast<std::int64_t>(heights_.size()); }
  /// p_b(q), the tallest row index in column q.
  std::int64_t height(std::int64_t q) const { return heights_[static_cast<std::size_t>(q - 1)]; }
  std::int64_t max_height() const;
  std::int64_t value(std::int64_t p, std::int64_t q) const { return sigma(d1_, d2_, p, q); }
  std::size_t cell_count() const;

  struct Cell {
    std::int64_t p, q, value;
  };
  /// Cells (p_b(q), q); their values are 1 .. d1-1.
  std::vector<Cell> bottom_layer() const;
  /// Cells (1, q); sigma(1, 1) is the Frobenius number.
  std::vector<Cell> top_layer() const;
  std::vector<std::int64_t> values() const;  // ascending

 private:
  std::int64_t d1_ = 0, d2_ = 0;
  std::vector<std::int64_t> heights_;
};

DiagramGrid delta2_grid(std::int64_t d1, std::int64_t d2);

/// Coprime base pair (b1 < b2) plus the third generator for a triple.
struct DiagramFrame {
  std::int64_t base1 = 0, base2 = 0, third = 0;
  std::size_t third_index = 0;
  std::int64_t third_diagonal = 0;  // a_tt of the third generator
};

/// Prefers (d1, d2), then (d1, d3), then (d2, d3). Throws NoCoprimeBasePair.
DiagramFrame diagram_frame(const Generators& g, const RelationMatrix& a);

/// Omega^k = {u1 b1 + u2 b2 + k t : u1 < p(kt), u2 < q(kt)}, ascending.
/// Throws IndexOutOfRange unless 1 <= k < a_tt.
std::vector<std::int64_t> associated_set(const Generators& g, std::int64_t k);

/// Gaps of a triple as the base diagram minus every associated set.
GapSet delta3_via_diagram(const Generators& g);

/// Set {v2 d2 + v3 d3} over the two rectangles cut out of the relation matrix.
struct LambdaSet {
  struct Entry {
    std::int64_t v2, v3, value;
  };
  std::vector<Entry> entries;  // row-major by v3 then v2

  std::vector<std::int64_t> values() const;  // ascending
  SparsePolynomial polynomial() const;
};

/// Non-symmetric triples only. Throws SymmetricInput, IdentityViolation
/// (size differs from d1 or values repeat).
LambdaSet lambda_set(const Generators& g, const RelationMatrix& a);

/// The same set read from the base diagram: 0 together with
/// sigma(p_t(q) - 1, q) where p_t(q) is the top excluded row of column q.
/// Needs gcd(d1, d2) = 1, else NoCoprimeBasePair.
std::vector<std::int64_t> lambda_from_diagram(const Generators& g);

/// sum_{k<a33} z^{k d3} - sum over the two shifted d3-columns, which equals
/// (1 - z^{d2}) * (sum_{k<d1} z^k - (1 - z^{d1}) gap polynomial).
SparsePolynomial shifted_columns_polynomial(const Generators& g, const RelationMatrix& a);

/// Numerator from the telescoping terms T1 - T2 - T3 built out of the diagram.
SparsePolynomial numerator_via_diagram(const Generators& g, const RelationMatrix& a);

enum class RenderFormat { Ascii, Svg };

/// Base diagram: top layer dark, bottom layer light.
std::string render_delta2(const DiagramGrid& grid, RenderFormat format);
/// Base diagram of a triple with associated-set cells blacked out.
std::string render_delta3(const Generators& g, RenderFormat format);
/// Lambda set on the (v2, v3) lattice.
std::string render_lambda(const LambdaSet& lambda, RenderFormat format);

}  // namespace nsg

#endif  // NSG_DIAGRAMS_HPP
