// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsg/error.hpp"

namespace nsg {

std::int64_t sigma(std::int64_t d1, std::int64_t d2, std::int64_t p, std::int64_t q) {
  return d1 * d2 - p * d1 - q * d2;
}

namespace {

void require_coprime_pair(std::int64_t d1, std::int64_t d2) {
  if (d1 < 2 || d2 < 2) raise(ErrorCode::ContainsUnit, "diagram generators must exceed 1");
  if (std::gcd(d1, d2) != 1) raise(ErrorCode::NotCoprime, "diagram generators must be coprime");
}

/// x^{-1} mod m for coprime x, m.
std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
  Integer r;
  const Integer xi = make_integer(x), mi = make_integer(m);
  mpz_invert(r.get_mpz_t(), xi.get_mpz_t(), mi.get_mpz_t());
  return r.get_si();
}

/// Per column q, the largest row p removed by some associated set (0 if none).
std::vector<std::int64_t> removed_rows(const DiagramFrame& f) {
  std::vector<std::int64_t> cut(static_cast<std::size_t>(f.base1), 0);
  for (std::int64_t k = 1; k < f.third_diagonal; ++k) {
    auto [p, q] = pq_of(k * f.third, f.base1, f.base2);
    cut[static_cast<std::size_t>(q)] = std::max(cut[static_cast<std::size_t>(q)], p);
  }
  // Rectangles are anchored at (1, 1), so a cut in column q covers every column left of it.
  for (std::int64_t q = f.base1 - 2; q >= 1; --q) {
    cut[static_cast<std::size_t>(q)] = std::max(cut[static_cast<std::size_t>(q)], cut[static_cast<std::size_t>(q + 1)]);
  }
  return cut;
}

void require_nonsymmetric_triple(const Generators& g, const RelationMatrix& a) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "needs three generators");
  if (classify(g, a).kind == SymmetryKind::Symmetric) raise(ErrorCode::SymmetricInput, g.to_string() + " is symmetric");
}

}  // namespace

std::pair<std::int64_t, std::int64_t> pq_of(std::int64_t t, std::int64_t d1, std::int64_t d2) {
  require_coprime_pair(d1, d2);
  if (t <= 0) raise(ErrorCode::NotAGap, std::to_string(t) + " is not a positive gap");
  const std::int64_t r = ((-t) % d1 + d1) % d1;
  const std::int64_t q = static_cast<std::int64_t>(
      (static_cast<__int128>(r) * inverse_mod(d2 % d1, d1)) % d1);
  const std::int64_t rest = d1 * d2 - q * d2 - t;
  if (q == 0 || rest < d1) raise(ErrorCode::NotAGap, std::to_string(t) + " is representable");
  return {rest / d1, q};
}

DiagramGrid::DiagramGrid(std::int64_t d1, std::int64_t d2) : d1_(d1), d2_(d2) {
  require_coprime_pair(d1, d2);
  if (d1 > d2) raise(ErrorCode::InvalidInput, "diagram needs d1 < d2");
  heights_.reserve(static_cast<std::size_t>(d1 - 1));
  for (std::int64_t q = 1; q < d1; ++q) heights_.push_back(d2 - 1 - (q * d2) / d1);
}

std::int64_t DiagramGrid::max_height() const {
  return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
}

std::size_t DiagramGrid::cell_count() const {
  return static_cast<std::size_t>(std::accumulate(heights_.begin(), heights_.end(), std::int64_t{0}));
}

std::vector<DiagramGrid::Cell> DiagramGrid::bottom_layer() const {
  std::vector<Cell> cells;
  for (std::int64_t q = 1; q <= width(); ++q) cells.push_back({height(q), q, value(height(q), q)});
  return cells;
}

std::vector<DiagramGrid::Cell> DiagramGrid::top_layer() const {
  std::vector<Cell> cells;
  for (std::int64_t q = 1; q <= width(); ++q) cells.push_back({1, q, value(1, q)});
  return cells;
}

std::vector<std::int64_t> DiagramGrid::values() const {
  std::vector<std::int64_t> v;
  v.reserve(cell_count());
  for (std::int64_t q = 1; q <= width(); ++q) {
    for (std::int64_t p = 1; p <= height(q); ++p) v.push_back(value(p, q));
  }
  std::sort(v.begin(), v.end());
  return v;
}

DiagramGrid delta2_grid(std::int64_t d1, std::int64_t d2) { return DiagramGrid(d1, d2); }

DiagramFrame diagram_frame(const Generators& g, const RelationMatrix& a) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "diagram frames need three generators");
  constexpr std::size_t pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& p : pairs) {
    if (std::gcd(g[p[0]], g[p[1]]) == 1) {
      return DiagramFrame{g[p[0]], g[p[1]], g[p[2]], p[2], a.diagonal[p[2]]};
    }
  }
  raise(ErrorCode::NoCoprimeBasePair, g.to_string() + " has no coprime pair");
}

std::vector<std::int64_t> associated_set(const Generators& g, std::int64_t k) {
  const DiagramFrame f = diagram_frame(g, relation_matrix(g));
  if (k < 1 || k >= f.third_diagonal) {
    raise(ErrorCode::IndexOutOfRange, "k must lie in [1, " + std::to_string(f.third_diagonal - 1) + "]", k);
  }
  const std::int64_t t = k * f.third;
  auto [p, q] = pq_of(t, f.base1, f.base2);
  std::vector<std::int64_t> omega;
  for (std::int64_t u1 = 0; u1 < p; ++u1) {
    for (std::int64_t u2 = 0; u2 < q; ++u2) omega.push_back(t + u1 * f.base1 + u2 * f.base2);
  }
  std::sort(omega.begin(), omega.end());
  return omega;
}

GapSet delta3_via_diagram(const Generators& g) {
  const DiagramFrame f = diagram_frame(g, relation_matrix(g));
  const DiagramGrid grid(f.base1, f.base2);
  const auto cut = removed_rows(f);
  std::vector<std::int64_t> gaps;
  for (std::int64_t q = 1; q <= grid.width(); ++q) {
    for (std::int64_t p = cut[static_cast<std::size_t>(q)] + 1; p <= grid.height(q); ++p) {
      gaps.push_back(grid.value(p, q));
    }
  }
  std::sort(gaps.begin(), gaps.end());
  return make_gap_set(std::move(gaps));
}

std::vector<std::int64_t> LambdaSet::values() const {
  std::vector<std::int64_t> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.value);
  std::sort(v.begin(), v.end());
  return v;
}

SparsePolynomial LambdaSet::polynomial() const {
  SparsePolynomial p;
  for (const auto& e : entries) p.add_term(static_cast<std::uint64_t>(e.value), 1);
  return p;
}

LambdaSet lambda_set(const Generators& g, const RelationMatrix& a) {
  require_nonsymmetric_triple(g, a);
  const std::int64_t d2 = g[1], d3 = g[2];
  const std::int64_t a22 = a.diagonal[1], a33 = a.diagonal[2], a12 = a.rows[0][1], a13 = a.rows[0][2];
  LambdaSet l;
  for (std::int64_t v3 = 0; v3 < a33; ++v3) {
    const std::int64_t width = v3 < a13 ? a22 : a12;
    for (std::int64_t v2 = 0; v2 < width; ++v2) l.entries.push_back({v2, v3, v2 * d2 + v3 * d3});
  }
  auto v = l.values();
  if (static_cast<std::int64_t>(v.size()) != g[0] || std::adjacent_find(v.begin(), v.end()) != v.end()) {
    raise(ErrorCode::IdentityViolation, "lambda set of " + g.to_string() + " is not a residue system");
  }
  return l;
}

std::vector<std::int64_t> lambda_from_diagram(const Generators& g) {
  if (g.size() != 3) raise(ErrorCode::DimensionUnsupported, "needs three generators");
  if (std::gcd(g[0], g[1]) != 1) raise(ErrorCode::NoCoprimeBasePair, "d1 and d2 share a factor");
  const RelationMatrix a = relation_matrix(g);
  const DiagramFrame f{g[0], g[1], g[2], 2, a.diagonal[2]};
  const auto cut = removed_rows(f);
  std::vector<std::int64_t> lambda{0};
  for (std::int64_t q = 1; q < g[0]; ++q) lambda.push_back(sigma(g[0], g[1], cut[static_cast<std::size_t>(q)], q));
  std::sort(lambda.begin(), lambda.end());
  return lambda;
}

SparsePolynomial shifted_columns_polynomial(const Generators& g, const RelationMatrix& a) {
  require_nonsymmetric_triple(g, a);
  const std::int64_t d2 = g[1], d3 = g[2];
  const std::int64_t a22 = a.diagonal[1], a33 = a.diagonal[2], a12 = a.rows[0][1], a13 = a.rows[0][2];
  SparsePolynomial p;
  for (std::int64_t k = 0; k < a33; ++k) {
    p.add_term(static_cast<std::uint64_t>(k * d3), 1);
    const std::int64_t shift = k < a13 ? a22 * d2 : a12 * d2;
    p.add_term(static_cast<std::uint64_t>(shift + k * d3), -1);
  }
  return p;
}

SparsePolynomial numerator_via_diagram(const Generators& g, const RelationMatrix& a) {
  require_nonsymmetric_triple(g, a);
  const std::int64_t d2 = g[1], d3 = g[2];
  const std::int64_t a22 = a.diagonal[1], a33 = a.diagonal[2], a12 = a.rows[0][1], a13 = a.rows[0][2];
  SparsePolynomial bottom, first, second;
  for (std::int64_t k = 0; k < a33; ++k) {
    bottom.add_term(static_cast<std::uint64_t>(k * d3), 1);
    if (k < a13) {
      first.add_term(static_cast<std::uint64_t>(a22 * d2 + k * d3), 1);
    } else {
      second.add_term(static_cast<std::uint64_t>(a12 * d2 + k * d3), 1);
    }
  }
  const auto step = SparsePolynomial::one_minus_power(static_cast<std::uint64_t>(d3));
  return step * bottom - step * first - step * second;
}

// Rendering --------------------------------------------------------------

namespace {

enum class Shade { Plain, Light, Dark, Excluded };

struct ViewCell {
  std::int64_t row, col;
  std::string text;
  Shade shade;
};

struct View {
  std::string title;
  std::string row_label, col_label;
  std::int64_t row_base = 1, col_base = 1;  // label of the first row / column
  std::int64_t rows = 0, cols = 0;
  std::vector<ViewCell> cells;
};

std::string render_ascii(const View& v) {
  std::ostringstream os;
  os << v.title << '\n';
  if (v.cells.empty()) {
    os << "(empty diagram)\n";
    return os.str();
  }
  std::size_t w = std::to_string(v.col_base + v.cols - 1).size();
  for (const auto& c : v.cells) w = std::max(w, c.text.size());
  std::vector<std::vector<const ViewCell*>> grid(static_cast<std::size_t>(v.rows),
                                                 std::vector<const ViewCell*>(static_cast<std::size_t>(v.cols)));
  for (const auto& c : v.cells) grid[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = &c;
  const std::size_t lw = std::max(v.row_label.size(), std::to_string(v.row_base + v.rows - 1).size());
  auto pad = [](const std::string& s, std::size_t n) { return std::string(n > s.size() ? n - s.size() : 0, ' ') + s; };
  os << pad(v.row_label + "\\" + v.col_label, lw + 1);
  for (std::int64_t c = 0; c < v.cols; ++c) os << ' ' << pad(std::to_string(v.col_base + c), w);
  os << '\n';
  for (std::int64_t r = 0; r < v.rows; ++r) {
    std::string line = pad(std::to_string(v.row_base + r), lw + 1);
    for (std::int64_t c = 0; c < v.cols; ++c) {
      const ViewCell* cell = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      std::string t = !cell ? "" : cell->shade == Shade::Excluded ? std::string(w, '#') : cell->text;
      line += ' ' + pad(t, w);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string xml_escaped(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string render_svg(const View& v) {
  constexpr int kCell = 24;
  constexpr int kMargin = 24;
  std::ostringstream os;
  const auto width = kMargin + std::max<std::int64_t>(v.cols, 4) * kCell + kCell;
  const auto height = 2 * kMargin + std::max<std::int64_t>(v.rows, 1) * kCell;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<title>" << xml_escaped(v.title) << "</title>\n"
     << "<text x=\"4\" y=\"16\" font-family=\"monospace\" font-size=\"12\">" << xml_escaped(v.title) << "</text>\n";
  if (v.cells.empty()) {
    os << "<text x=\"4\" y=\"" << kMargin + 16 << "\" font-family=\"monospace\" font-size=\"12\">empty diagram</text>\n"
       << "</svg>\n";
    return os.str();
  }
  for (const auto& c : v.cells) {
    const char* fill = "#ffffff";
    const char* ink = "#000000";
    switch (c.shade) {
      case Shade::Light: fill = "#d3d3d3"; break;
      case Shade::Dark: fill = "#696969"; ink = "#ffffff"; break;
      case Shade::Excluded: fill = "#000000"; ink = "#ffffff"; break;
      case Shade::Plain: break;
    }
    const auto x = kMargin + c.col * kCell, y = kMargin + c.row * kCell;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
       << fill << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 4
       << "\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"middle\" fill=\"" << ink << "\">" << c.text
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const View& v, RenderFormat format) {
  return format == RenderFormat::Svg ? render_svg(v) : render_ascii(v);
}

View grid_view(const DiagramGrid& grid, const std::vector<std::int64_t>& cut, std::string title) {
  View v;
  v.title = std::move(title);
  v.row_label = "p";
  v.col_label = "q";
  v.rows = grid.max_height();
  v.cols = grid.width();
  for (std::int64_t q = 1; q <= grid.width(); ++q) {
    const std::int64_t c = cut.empty() ? 0 : cut[static_cast<std::size_t>(q)];
    for (std::int64_t p = 1; p <= grid.height(q); ++p) {
      Shade s = Shade::Plain;
      if (p <= c) {
        s = Shade::Excluded;
      } else if (p == c + 1) {
        s = Shade::Dark;
      } else if (p == grid.height(q)) {
        s = Shade::Light;
      }
      v.cells.push_back({p - 1, q - 1, std::to_string(grid.value(p, q)), s});
    }
  }
  return v;
}

}  // namespace

std::string render_delta2(const DiagramGrid& grid, RenderFormat format) {
  return render(grid_view(grid, {}, "gaps of <" + std::to_string(grid.d1()) + "," + std::to_string(grid.d2()) + ">"),
                format);
}

std::string render_delta3(const Generators& g, RenderFormat format) {
  const DiagramFrame f = diagram_frame(g, relation_matrix(g));
  const DiagramGrid grid(f.base1, f.base2);
  return render(grid_view(grid, removed_rows(f), "gaps of " + g.to_string() + " over <" + std::to_string(f.base1) +
                                                      "," + std::to_string(f.base2) + ">"),
                format);
}

std::string render_lambda(const LambdaSet& lambda, RenderFormat format) {
  View v;
  v.title = "residue set on the (v2, v3) lattice";
  v.row_label = "v3";
  v.col_label = "v2";
  v.row_base = 0;
  v.col_base = 0;
  for (const auto& e : lambda.entries) {
    v.rows = std::max(v.rows, e.v3 + 1);
    v.cols = std::max(v.cols, e.v2 + 1);
    v.cells.push_back({e.v3, e.v2, std::to_string(e.value), e.value == 0 ? Shade::Dark : Shade::Light});
  }
  return render(v, format);
}

}  // namespace nsg
