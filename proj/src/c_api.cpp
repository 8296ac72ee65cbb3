// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "nsg/nsg.h"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <iomanip>
#include <mutex>
#include <new>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nsg/bounds.hpp"
#include "nsg/closed3.hpp"
#include "nsg/diagrams.hpp"
#include "nsg/error.hpp"
#include "nsg/gap_set.hpp"
#include "nsg/genera.hpp"
#include "nsg/generators.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/representability.hpp"
#include "nsg/sparsity.hpp"
#include "nsg/uniform.hpp"

using json = nlohmann::ordered_json;

struct nsg_generators {
  nsg::Generators g;
};

struct nsg_polynomial {
  nsg::SparsePolynomial p;
  std::vector<std::pair<std::uint64_t, nsg::Integer>> terms;
};

struct nsg_report {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_message;
thread_local std::optional<std::int64_t> last_value;

nsg_status status_of(nsg::ErrorCode code) {
  using nsg::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidInput: return NSG_ERR_INVALID_INPUT;
    case ErrorCode::TooShort: return NSG_ERR_TOO_SHORT;
    case ErrorCode::ContainsUnit: return NSG_ERR_CONTAINS_UNIT;
    case ErrorCode::NotCoprime: return NSG_ERR_NOT_COPRIME;
    case ErrorCode::NotMinimal: return NSG_ERR_NOT_MINIMAL;
    case ErrorCode::OutOfRange: return NSG_ERR_OUT_OF_RANGE;
    case ErrorCode::DimensionUnsupported: return NSG_ERR_DIMENSION_UNSUPPORTED;
    case ErrorCode::SymmetricInput: return NSG_ERR_SYMMETRIC_INPUT;
    case ErrorCode::NonSymmetricInput: return NSG_ERR_NON_SYMMETRIC_INPUT;
    case ErrorCode::NotAGap: return NSG_ERR_NOT_A_GAP;
    case ErrorCode::IndexOutOfRange: return NSG_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::NoCoprimeBasePair: return NSG_ERR_NO_COPRIME_BASE_PAIR;
    case ErrorCode::NotPrimitive: return NSG_ERR_NOT_PRIMITIVE;
    case ErrorCode::NuTooLarge: return NSG_ERR_NU_TOO_LARGE;
    case ErrorCode::InternalMismatch: return NSG_ERR_INTERNAL_MISMATCH;
    case ErrorCode::IdentityViolation: return NSG_ERR_IDENTITY_VIOLATION;
    case ErrorCode::NonIntegerResult: return NSG_ERR_NON_INTEGER_RESULT;
    case ErrorCode::StandardFormViolation: return NSG_ERR_STANDARD_FORM_VIOLATION;
  }
  return NSG_ERR_INTERNAL;
}

nsg_status fail(nsg_status s, std::string message, std::optional<std::int64_t> value = std::nullopt) {
  last_message = std::move(message);
  last_value = value;
  return s;
}

template <class F>
nsg_status guarded(F&& body) {
  try {
    body();
    last_message.clear();
    last_value.reset();
    return NSG_OK;
  } catch (const nsg::Error& e) {
    std::string message = e.what();
    const std::string prefix = std::string(nsg::error_name(e.code())) + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    return fail(status_of(e.code()), std::move(message), e.value());
  } catch (const std::bad_alloc&) {
    return fail(NSG_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(NSG_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::int64_t> raw_tuple(const std::int64_t* d, std::size_t count) {
  if (!d && count) nsg::raise(nsg::ErrorCode::InvalidInput, "null generator array");
  return std::vector<std::int64_t>(d, d + count);
}

nsg::Generators validated(const std::int64_t* d, std::size_t count) {
  return nsg::validate_generators(raw_tuple(d, count));
}

unsigned pool_size(unsigned threads) {
  if (threads) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// -- JSON pieces, integers always as decimal strings

std::string dec(const nsg::Integer& v) { return nsg::to_decimal(v); }
std::string dec(std::int64_t v) { return std::to_string(v); }

template <class Range>
json int_array(const Range& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(dec(v));
  return a;
}

json poly_json(const nsg::SparsePolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({std::to_string(e), dec(c)}));
  return json{{"string", p.to_string()}, {"terms", terms}};
}

json matrix_json(const nsg::RelationMatrix& a) {
  json rows = json::array();
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    json row = json::array();
    for (std::size_t i = 0; i < a.dimension(); ++i) row.push_back(dec(a.signed_at(j, i)));
    rows.push_back(row);
  }
  return rows;
}

const char* kind_name(nsg::SymmetryKind k) {
  return k == nsg::SymmetryKind::Symmetric ? "symmetric" : "non-symmetric";
}

json report_json(const nsg::SparsityReport& r) {
  return json{{"count", dec(r.count)},
              {"distinct", std::to_string(r.distinct)},
              {"bound", dec(r.bound)},
              {"weak_bound", dec(r.weak_bound)},
              {"holds", r.holds}};
}

// -- plain text pieces

std::string joined(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class Range>
std::string joined_ints(const Range& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(dec(v));
  return joined(parts);
}

class Text {
 public:
  Text& row(const std::string& key, const std::string& value) {
    os_ << std::left << std::setw(14) << key << value << '\n';
    return *this;
  }
  Text& line(const std::string& s) {
    os_ << s << '\n';
    return *this;
  }
  Text& matrix(const nsg::RelationMatrix& a) {
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      std::ostringstream r;
      for (std::size_t i = 0; i < a.dimension(); ++i) r << std::right << std::setw(8) << a.signed_at(j, i);
      line(r.str());
    }
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

nsg_status emit(nsg_report** out, const char* command, json input, json result, std::string text) {
  if (!out) return fail(NSG_ERR_NULL_ARGUMENT, "null report pointer");
  return guarded([&] {
    json env{{"schema_version", "1"}, {"command", command}, {"input", std::move(input)},
             {"result", std::move(result)}};
    *out = new nsg_report{env.dump(), std::move(text)};
  });
}

// Runs a command body that fills input, result and text.
template <class F>
nsg_status run(nsg_report** out, const char* command, F&& body) {
  if (!out) return fail(NSG_ERR_NULL_ARGUMENT, "null report pointer");
  json input, result;
  std::string text;
  const nsg_status s = guarded([&] { body(input, result, text); });
  if (s != NSG_OK) return s;
  return emit(out, command, std::move(input), std::move(result), std::move(text));
}

std::vector<std::int64_t> random_minimal_tuple(std::mt19937_64& rng, unsigned m, std::int64_t d_max) {
  std::uniform_int_distribution<std::int64_t> pick(2, d_max);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    std::set<std::int64_t> chosen;
    while (chosen.size() < m) chosen.insert(pick(rng));
    std::vector<std::int64_t> t(chosen.begin(), chosen.end());
    try {
      nsg::validate_generators(t);
      return t;
    } catch (const nsg::Error& e) {
      if (nsg::is_internal(e.code())) throw;
    }
  }
  nsg::raise(nsg::ErrorCode::OutOfRange, "no minimal tuple found; raise d_max", d_max);
}

}  // namespace

extern "C" {

NSG_API const char* nsg_status_name(nsg_status status) {
  switch (status) {
    case NSG_OK: return "Ok";
    case NSG_ERR_INVALID_INPUT: return "InvalidInput";
    case NSG_ERR_TOO_SHORT: return "TooShort";
    case NSG_ERR_CONTAINS_UNIT: return "ContainsUnit";
    case NSG_ERR_NOT_COPRIME: return "NotCoprime";
    case NSG_ERR_NOT_MINIMAL: return "NotMinimal";
    case NSG_ERR_OUT_OF_RANGE: return "OutOfRange";
    case NSG_ERR_DIMENSION_UNSUPPORTED: return "DimensionUnsupported";
    case NSG_ERR_SYMMETRIC_INPUT: return "SymmetricInput";
    case NSG_ERR_NON_SYMMETRIC_INPUT: return "NonSymmetricInput";
    case NSG_ERR_NOT_A_GAP: return "NotAGap";
    case NSG_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case NSG_ERR_NO_COPRIME_BASE_PAIR: return "NoCoprimeBasePair";
    case NSG_ERR_NOT_PRIMITIVE: return "NotPrimitive";
    case NSG_ERR_NU_TOO_LARGE: return "NuTooLarge";
    case NSG_ERR_INTERNAL_MISMATCH: return "InternalMismatch";
    case NSG_ERR_IDENTITY_VIOLATION: return "IdentityViolation";
    case NSG_ERR_NON_INTEGER_RESULT: return "NonIntegerResult";
    case NSG_ERR_STANDARD_FORM_VIOLATION: return "StandardFormViolation";
    case NSG_ERR_INTERNAL: return "Internal";
    case NSG_ERR_NULL_ARGUMENT: return "NullArgument";
    case NSG_ERR_NO_MEMORY: return "NoMemory";
  }
  return "Unknown";
}

NSG_API int nsg_status_is_internal(nsg_status status) {
  return status >= NSG_ERR_INTERNAL_MISMATCH && status <= NSG_ERR_INTERNAL;
}

NSG_API const char* nsg_last_error_message(void) { return last_message.c_str(); }

NSG_API int nsg_last_error_value(int64_t* out) {
  if (!last_value) return 0;
  if (out) *out = *last_value;
  return 1;
}

NSG_API const char* nsg_version(void) { return "0.1.0"; }

NSG_API void nsg_string_free(char* s) { std::free(s); }
NSG_API void nsg_int64_array_free(int64_t* values) { std::free(values); }

NSG_API nsg_status nsg_generators_create(const int64_t* values, size_t count, nsg_generators** out) {
  if (!out) return fail(NSG_ERR_NULL_ARGUMENT, "null output");
  return guarded([&] { *out = new nsg_generators{validated(values, count)}; });
}

NSG_API void nsg_generators_destroy(nsg_generators* g) { delete g; }

NSG_API size_t nsg_generators_size(const nsg_generators* g) { return g ? g->g.size() : 0; }

NSG_API int64_t nsg_generators_at(const nsg_generators* g, size_t index) {
  return g && index < g->g.size() ? g->g[index] : 0;
}

NSG_API nsg_status nsg_is_representable(const nsg_generators* g, const char* n, int* out) {
  if (!g || !n || !out) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto v = nsg::parse_integer(n);
    if (!v || sgn(*v) < 0) nsg::raise(nsg::ErrorCode::InvalidInput, std::string("not a non-negative integer: ") + n);
    *out = nsg::is_representable(*v, g->g) ? 1 : 0;
  });
}

NSG_API nsg_status nsg_gaps(const nsg_generators* g, int64_t** out, size_t* count) {
  if (!g || !out || !count) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const nsg::GapSet gs = nsg::gap_set(g->g);
    auto* buf = static_cast<int64_t*>(std::malloc(std::max<std::size_t>(1, gs.gaps.size()) * sizeof(int64_t)));
    if (!buf) throw std::bad_alloc();
    std::copy(gs.gaps.begin(), gs.gaps.end(), buf);
    *out = buf;
    *count = gs.gaps.size();
  });
}

NSG_API nsg_status nsg_frobenius(const nsg_generators* g, char** out) {
  if (!g || !out) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(dec(nsg::ResidueTable(g->g.elements()).frobenius())); });
}

NSG_API nsg_status nsg_genus(const nsg_generators* g, char** out) {
  if (!g || !out) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(dec(nsg::ResidueTable(g->g.elements()).genus())); });
}

NSG_API nsg_status nsg_is_symmetric(const nsg_generators* g, int* out) {
  if (!g || !out) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = nsg::is_symmetric(g->g) ? 1 : 0; });
}

NSG_API nsg_status nsg_relation_matrix(const nsg_generators* g, int64_t* out, size_t capacity) {
  if (!g || !out) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  const std::size_t m = g->g.size();
  if (capacity < m * m) return fail(NSG_ERR_INVALID_INPUT, "matrix buffer too small", static_cast<std::int64_t>(m * m));
  return guarded([&] {
    const nsg::RelationMatrix a = nsg::relation_matrix(g->g);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i) out[j * m + i] = a.signed_at(j, i);
  });
}

NSG_API nsg_status nsg_hilbert_numerator(const nsg_generators* g, nsg_polynomial** out) {
  if (!g || !out) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto p = std::make_unique<nsg_polynomial>();
    p->p = nsg::hilbert_numerator(g->g);
    for (const auto& [e, c] : p->p.terms()) p->terms.emplace_back(e, c);
    *out = p.release();
  });
}

NSG_API void nsg_polynomial_destroy(nsg_polynomial* p) { delete p; }

NSG_API size_t nsg_polynomial_term_count(const nsg_polynomial* p) { return p ? p->terms.size() : 0; }

NSG_API nsg_status nsg_polynomial_term(const nsg_polynomial* p, size_t index, uint64_t* degree, char** coefficient) {
  if (!p || !degree || !coefficient) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  if (index >= p->terms.size()) {
    return fail(NSG_ERR_INDEX_OUT_OF_RANGE, "term index out of range", static_cast<std::int64_t>(index));
  }
  return guarded([&] {
    *coefficient = dup_string(dec(p->terms[index].second));
    *degree = p->terms[index].first;
  });
}

NSG_API nsg_status nsg_polynomial_to_string(const nsg_polynomial* p, char** out) {
  if (!p || !out) return fail(NSG_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(p->p.to_string()); });
}

NSG_API const char* nsg_report_json(const nsg_report* r) { return r ? r->json.c_str() : ""; }
NSG_API const char* nsg_report_text(const nsg_report* r) { return r ? r->text.c_str() : ""; }
NSG_API void nsg_report_destroy(nsg_report* r) { delete r; }

NSG_API nsg_status nsg_run_gaps(const int64_t* d, size_t count, nsg_report** out) {
  return run(out, "gaps", [&](json& in, json& res, std::string& text) {
    in = {{"generators", int_array(raw_tuple(d, count))}};
    const nsg::Generators g = validated(d, count);
    const nsg::GapSet gs = nsg::gap_set(g);
    const bool symmetric = nsg::is_symmetric(g);
    res = {{"gaps", int_array(gs.gaps)},
           {"frobenius", dec(gs.frobenius)},
           {"genus", dec(gs.genus)},
           {"conductor", dec(gs.conductor)},
           {"symmetric", symmetric}};
    text = Text()
               .line(joined_ints(gs.gaps))
               .row("F", dec(gs.frobenius))
               .row("G", dec(gs.genus))
               .row("symmetric", yes_no(symmetric))
               .str();
  });
}

NSG_API nsg_status nsg_run_frob(const int64_t* d, size_t count, int verify, nsg_report** out) {
  return run(out, "frob", [&](json& in, json& res, std::string& text) {
    in = {{"generators", int_array(raw_tuple(d, count))}, {"verify", verify != 0}};
    const nsg::Generators g = validated(d, count);
    Text t;
    t.row("generators", g.to_string());
    nsg::Integer f, genus;
    if (g.size() == 2) {
      const nsg::SylvesterForm s = nsg::sylvester_closed(g[0], g[1]);
      f = s.frobenius;
      genus = s.genus;
      res = {{"method", "two-generator"}, {"F", dec(f)}, {"G", dec(genus)}, {"Q", poly_json(s.numerator)}};
      t.row("method", "two-generator").row("F", dec(f)).row("G", dec(genus)).row("Q", s.numerator.to_string());
    } else if (g.size() == 3) {
      const nsg::ClosedForm3 c = nsg::solve_triple(g);
      f = c.frobenius;
      genus = c.genus;
      res = {{"method", "three-generator"},
             {"kind", kind_name(c.kind)},
             {"F", dec(f)},
             {"G", dec(genus)},
             {"J", dec(c.j)},
             {"L1", dec(c.l1)},
             {"L2", dec(c.l2)},
             {"inner", dec(c.inner)},
             {"matrix", matrix_json(c.matrix)},
             {"Q", poly_json(c.numerator)}};
      t.row("method", "three-generator")
          .row("kind", kind_name(c.kind))
          .row("F", dec(f))
          .row("G", dec(genus))
          .row("J", dec(c.j))
          .row("L1", dec(c.l1))
          .row("L2", dec(c.l2))
          .row("<a,d>", dec(c.inner))
          .row("Q", c.numerator.to_string());
    } else {
      const nsg::ResidueTable table(g.elements());
      f = table.frobenius();
      genus = table.genus();
      res = {{"method", "residue-table"}, {"F", dec(f)}, {"G", dec(genus)}};
      t.row("method", "residue-table").row("F", dec(f)).row("G", dec(genus));
    }
    if (verify) {
      const nsg::GapSet gs = nsg::gap_set(g);
      if (gs.frobenius != f || gs.genus != genus) {
        nsg::raise(nsg::ErrorCode::InternalMismatch, "closed form disagrees with the gap set of " + g.to_string());
      }
      res["verified"] = {{"oracle_F", dec(gs.frobenius)}, {"oracle_G", dec(gs.genus)}, {"agree", true}};
      t.row("verified", "yes (gap set F = " + dec(gs.frobenius) + ", G = " + dec(gs.genus) + ")");
    }
    text = t.str();
  });
}

NSG_API nsg_status nsg_run_relation(const int64_t* d, size_t count, nsg_report** out) {
  return run(out, "relation", [&](json& in, json& res, std::string& text) {
    in = {{"generators", int_array(raw_tuple(d, count))}};
    const nsg::Generators g = validated(d, count);
    const nsg::RelationMatrix a = nsg::relation_matrix(g);
    Text t;
    t.row("generators", g.to_string()).line("matrix").matrix(a);
    res = {{"generators", int_array(g.elements())}, {"matrix", matrix_json(a)}, {"diagonal", int_array(a.diagonal)}};
    if (g.size() == 3) {
      const nsg::Classification c = nsg::classify(g, a);
      json cls{{"kind", kind_name(c.kind)}};
      t.row("kind", kind_name(c.kind));
      if (c.kind == nsg::SymmetryKind::Symmetric) {
        cls["pair"] = json::array({std::to_string(c.i + 1), std::to_string(c.k + 1)});
        cls["odd"] = std::to_string(c.j + 1);
        cls["lcm"] = dec(c.lcm);
        t.row("pair", "a_" + std::to_string(c.i + 1) + std::to_string(c.i + 1) + " d_" + std::to_string(c.i + 1) +
                          " = a_" + std::to_string(c.k + 1) + std::to_string(c.k + 1) + " d_" +
                          std::to_string(c.k + 1) + " = " + dec(c.lcm));
        res["classification"] = cls;
        res["standard_form"] = nullptr;
      } else {
        res["classification"] = cls;
        const nsg::StandardFormReport sf = nsg::verify_standard_form(g, a);
        json checks = json::array();
        std::vector<std::string> failed;
        for (const auto& ch : sf.checks) {
          checks.push_back({{"name", ch.name}, {"holds", ch.holds}});
          if (!ch.holds) failed.push_back(ch.name);
        }
        res["standard_form"] = {{"cofactors", int_array(sf.cofactors)}, {"checks", checks}};
        t.row("cofactors", joined_ints(sf.cofactors))
            .row("identities", std::to_string(sf.checks.size() - failed.size()) + "/" +
                                   std::to_string(sf.checks.size()) + " hold");
      }
    }
    text = t.str();
  });
}

NSG_API nsg_status nsg_run_hilbert(const int64_t* d, size_t count, nsg_report** out) {
  return run(out, "hilbert", [&](json& in, json& res, std::string& text) {
    in = {{"generators", int_array(raw_tuple(d, count))}};
    const nsg::Generators g = validated(d, count);
    const nsg::SparsePolynomial q = nsg::hilbert_numerator(g);
    const nsg::Integer f = nsg::frobenius_from_numerator(g, q);
    const nsg::Integer genus = nsg::genus_from_numerator(g, q);
    Text t;
    t.row("generators", g.to_string())
        .row("Q", q.to_string())
        .row("terms", dec(q.multiplicity_count()) + " (" + std::to_string(q.nonzero_count()) + " distinct)")
        .row("F", dec(f))
        .row("G", dec(genus));
    res = {{"Q", poly_json(q)}, {"F", dec(f)}, {"G", dec(genus)}};
    if (g.size() >= 3) {
      std::vector<std::int64_t> diag;
      for (std::size_t j = 0; j < g.size(); ++j) diag.push_back(nsg::diagonal_coefficient(g, j));
      const nsg::SparsityReport sp = nsg::sparsity_check(g, q, diag);
      res["sparsity"] = report_json(sp);
      t.row("bound", dec(sp.bound) + (sp.holds ? " (holds)" : " (VIOLATED)"));
    } else {
      res["sparsity"] = nullptr;
    }
    text = t.str();
  });
}

NSG_API nsg_status nsg_run_genera(const int64_t* d, size_t count, unsigned n_max, nsg_report** out) {
  return run(out, "genera", [&](json& in, json& res, std::string& text) {
    in = {{"generators", int_array(raw_tuple(d, count))}, {"n", std::to_string(n_max)}};
    if (n_max > 64) nsg::raise(nsg::ErrorCode::OutOfRange, "n must not exceed 64", n_max);
    const nsg::Generators g = validated(d, count);
    const nsg::GapSet gs = nsg::gap_set(g);
    const std::vector<nsg::Integer> sums = nsg::power_sums(gs, std::max(3u, n_max));
    const auto deriv = nsg::genera_from_derivatives(nsg::gap_polynomial(gs));
    for (std::size_t k = 0; k < 3; ++k) {
      if (deriv[k] != sums[k + 1]) nsg::raise(nsg::ErrorCode::InternalMismatch, "derivative genera disagree");
    }
    Text t;
    t.row("generators", g.to_string());
    for (unsigned n = 0; n <= n_max; ++n) t.row("g" + std::to_string(n), dec(sums[n]));
    res = {{"power_sums", int_array(std::vector<nsg::Integer>(sums.begin(), sums.begin() + n_max + 1))},
           {"derivatives", int_array(deriv)}};
    if (g.size() == 2) {
      const auto c = nsg::genera2_closed(g[0], g[1]);
      for (std::size_t k = 0; k < 3; ++k) {
        if (c[k] != sums[k + 1]) nsg::raise(nsg::ErrorCode::InternalMismatch, "two-generator genera disagree");
      }
      res["closed"] = {{"g1", dec(c[0])}, {"g2", dec(c[1])}, {"g3", dec(c[2])}};
      t.row("closed", "g1 g2 g3 agree");
    } else if (g.size() == 3 && !nsg::is_symmetric(g)) {
      const nsg::Integer g1 = nsg::genus1_closed3(g, nsg::relation_matrix(g));
      if (g1 != sums[1]) nsg::raise(nsg::ErrorCode::InternalMismatch, "closed g1 disagrees for " + g.to_string());
      res["closed"] = {{"g1", dec(g1)}};
      t.row("closed", "g1 agrees");
    } else {
      res["closed"] = nullptr;
    }
    text = t.str();
  });
}

NSG_API nsg_status nsg_run_bounds(const int64_t* d, size_t count, nsg_report** out) {
  return run(out, "bounds", [&](json& in, json& res, std::string& text) {
    in = {{"generators", int_array(raw_tuple(d, count))}};
    const nsg::Generators g = validated(d, count);
    if (g.size() != 3) nsg::raise(nsg::ErrorCode::DimensionUnsupported, "bounds need three generators");
    const nsg::ClosedForm3 c = nsg::solve_triple(g);
    const nsg::BoundReport b = nsg::lower_bounds(g, c.frobenius, c.genus, c.kind);
    const nsg::Admissibility adm = nsg::admissible(g[0], g[1], g[2]);
    Text t;
    t.row("generators", g.to_string()).row("kind", kind_name(c.kind)).row("F", dec(c.frobenius)).row("G", dec(c.genus));
    json checks = json::array();
    for (const auto& ch : b.checks) {
      checks.push_back({{"name", ch.name}, {"relation", ch.relation}, {"lhs", dec(ch.lhs)}, {"rhs", dec(ch.rhs)},
                        {"holds", ch.holds}});
      t.row(ch.holds ? "holds" : "VIOLATED", ch.name + ": " + dec(ch.lhs) + " " + ch.relation + " " + dec(ch.rhs));
    }
    t.row("admissible", adm.admissible ? std::string("yes") : "no (" + adm.reason + ")");
    res = {{"kind", kind_name(c.kind)}, {"F", dec(c.frobenius)}, {"G", dec(c.genus)},
           {"checks", checks},          {"all_hold", b.all_hold()},
           {"admissible", {{"admissible", adm.admissible}, {"reason", adm.reason}}}};
    text = t.str();
  });
}

NSG_API nsg_status nsg_run_diagram(const int64_t* d, size_t count, nsg_diagram_kind kind, nsg_render_format format,
                                   nsg_report** out) {
  return run(out, "diagram", [&](json& in, json& res, std::string& text) {
    static const char* const kinds[] = {"delta2", "delta3", "lambda"};
    if (kind < NSG_DIAGRAM_DELTA2 || kind > NSG_DIAGRAM_LAMBDA) nsg::raise(nsg::ErrorCode::InvalidInput, "unknown diagram kind");
    if (format != NSG_FORMAT_ASCII && format != NSG_FORMAT_SVG) nsg::raise(nsg::ErrorCode::InvalidInput, "unknown format");
    const auto fmt = format == NSG_FORMAT_SVG ? nsg::RenderFormat::Svg : nsg::RenderFormat::Ascii;
    in = {{"generators", int_array(raw_tuple(d, count))},
          {"kind", kinds[kind]},
          {"format", format == NSG_FORMAT_SVG ? "svg" : "ascii"}};
    const nsg::Generators g = validated(d, count);
    std::vector<std::int64_t> values;
    json extra = json::object();
    if (kind == NSG_DIAGRAM_DELTA2) {
      if (g.size() != 2) nsg::raise(nsg::ErrorCode::DimensionUnsupported, "delta2 diagrams need two generators");
      const nsg::DiagramGrid grid = nsg::delta2_grid(g[0], g[1]);
      values = grid.values();
      text = nsg::render_delta2(grid, fmt);
      json cells = json::array();
      for (std::int64_t q = 1; q <= grid.width(); ++q) {
        for (std::int64_t p = 1; p <= grid.height(q); ++p) cells.push_back(int_array(std::vector{p, q, grid.value(p, q)}));
      }
      json bottom = json::array();
      for (const auto& c : grid.bottom_layer()) bottom.push_back(dec(c.value));
      extra = {{"cells", cells}, {"bottom_layer", bottom}};
    } else if (kind == NSG_DIAGRAM_DELTA3) {
      if (g.size() != 3) nsg::raise(nsg::ErrorCode::DimensionUnsupported, "delta3 diagrams need three generators");
      values = nsg::delta3_via_diagram(g).gaps;
      text = nsg::render_delta3(g, fmt);
      const nsg::DiagramFrame f = nsg::diagram_frame(g, nsg::relation_matrix(g));
      json sets = json::array();
      for (std::int64_t k = 1; k < f.third_diagonal; ++k) {
        sets.push_back({{"k", dec(k)}, {"values", int_array(nsg::associated_set(g, k))}});
      }
      extra = {{"base", int_array(std::vector{f.base1, f.base2})}, {"third", dec(f.third)}, {"associated_sets", sets}};
    } else {
      if (g.size() != 3) nsg::raise(nsg::ErrorCode::DimensionUnsupported, "lambda diagrams need three generators");
      const nsg::LambdaSet ls = nsg::lambda_set(g, nsg::relation_matrix(g));
      values = ls.values();
      text = nsg::render_lambda(ls, fmt);
    }
    res = {{"values", int_array(values)}};
    res.update(extra);
    res["rendering"] = text;
  });
}

NSG_API nsg_status nsg_run_scan_uniform(int64_t a, int64_t d3_max, unsigned threads, nsg_report** out) {
  return run(out, "scan-appendix-a", [&](json& in, json& res, std::string& text) {
    in = {{"a", dec(a)}, {"d3_max", dec(d3_max)}};
    const auto records = nsg::scan_uniform(a, d3_max, pool_size(threads));
    json list = json::array();
    std::ostringstream os;
    os << std::right << std::setw(8) << "d1" << std::setw(8) << "d2" << std::setw(8) << "d3" << std::setw(12) << "F"
       << std::setw(12) << "G" << '\n';
    for (const auto& r : records) {
      list.push_back({{"triple", int_array(r.triple)}, {"F", dec(r.frobenius)}, {"G", dec(r.genus)}});
      os << std::setw(8) << r.triple[0] << std::setw(8) << r.triple[1] << std::setw(8) << r.triple[2] << std::setw(12)
         << dec(r.frobenius) << std::setw(12) << dec(r.genus) << '\n';
    }
    os << records.size() << " triple(s) with uniform diagonal " << a << " and d3 <= " << d3_max << '\n';
    res = {{"count", std::to_string(records.size())}, {"records", list}};
    text = os.str();
  });
}

NSG_API nsg_status nsg_run_falsify(const char* c, const char* nu, const int64_t* d, size_t count, int64_t l,
                                   nsg_report** out) {
  if (!c || !nu) return fail(NSG_ERR_NULL_ARGUMENT, "null rational");
  return run(out, "falsify", [&](json& in, json& res, std::string& text) {
    const nsg::Rational cc = nsg::parse_rational(c);
    const nsg::Rational nn = nsg::parse_rational(nu);
    in = {{"C", nsg::to_decimal(cc)},
          {"nu", nsg::to_decimal(nn)},
          {"triple", d ? int_array(raw_tuple(d, count)) : json(nullptr)},
          {"l", l ? json(dec(l)) : json(nullptr)}};
    if (d && l) nsg::raise(nsg::ErrorCode::InvalidInput, "give either a triple or l, not both");
    if (sgn(nn) <= 0 || nn >= 1) nsg::raise(nsg::ErrorCode::InvalidInput, "nu must lie in (0, 1)");
    if (sgn(cc) <= 0) nsg::raise(nsg::ErrorCode::InvalidInput, "C must be positive");
    Text t;
    std::optional<std::array<std::int64_t, 3>> triple;
    nsg::Integer f;
    if (d) {
      const nsg::Generators g = validated(d, count);
      if (g.size() != 3) nsg::raise(nsg::ErrorCode::DimensionUnsupported, "falsify needs three generators");
      triple = {g[0], g[1], g[2]};
      f = nsg::solve_triple(g).frobenius;
    } else if (l) {
      const nsg::FamilyMember m = nsg::counterexample_family(l);
      triple = m.triple;
      f = m.frobenius;
      res["family"] = {{"l", dec(l)},
                       {"matrix", matrix_json(m.matrix)},
                       {"admissible", m.admissibility.admissible},
                       {"reason", m.admissibility.reason},
                       {"first_prime", m.first_prime}};
    }
    if (triple) {
      const nsg::ConjectureCheck chk = nsg::conjecture_bound_check(*triple, f, cc, nn);
      const char* verdict = chk.holds ? "HOLDS" : "VIOLATED";
      t.line(verdict)
          .row("triple", joined_ints(*triple))
          .row("F", dec(f))
          .row("bound", chk.bound_approx + " (truncated)");
      if (l) t.row("admissible", yes_no(res["family"]["admissible"].get<bool>()));
      res["triple"] = int_array(*triple);
      res["F"] = dec(f);
      res["verdict"] = verdict;
      res["holds"] = chk.holds;
      res["lhs"] = dec(chk.lhs);
      res["rhs"] = dec(chk.rhs);
      res["bound_approx"] = chk.bound_approx;
    }
    if (nn < nsg::Rational(2, 3)) {
      const nsg::CriticalL cr = nsg::critical_l(cc, nn);
      res["critical_l"] = {{"exact", cr.exact},
                           {"log2_lo", nsg::to_decimal(cr.log2_lo)},
                           {"log2_hi", nsg::to_decimal(cr.log2_hi)},
                           {"value", cr.exact ? json(dec(cr.value)) : json(nullptr)}};
      if (cr.exact) {
        t.row("log2 l_cr", nsg::to_decimal(cr.log2_lo));
        if (sgn(cr.value) > 0) t.row("l_cr", dec(cr.value));
      } else {
        t.row("log2 l_cr", "in [" + nsg::to_fixed(cr.log2_lo, 6) + ", " + nsg::to_fixed(cr.log2_hi, 6) + "]");
      }
    } else {
      res["critical_l"] = nullptr;
      t.row("log2 l_cr", "undefined for nu >= 2/3");
    }
    text = t.str();
  });
}

NSG_API nsg_status nsg_run_sparsity(const int64_t* d, size_t count, nsg_report** out) {
  return run(out, "sparsity", [&](json& in, json& res, std::string& text) {
    in = {{"generators", int_array(raw_tuple(d, count))}};
    const nsg::Generators g = validated(d, count);
    if (g.size() < 3) nsg::raise(nsg::ErrorCode::DimensionUnsupported, "sparsity needs at least three generators");
    std::vector<std::int64_t> diag;
    for (std::size_t j = 0; j < g.size(); ++j) diag.push_back(nsg::diagonal_coefficient(g, j));
    const nsg::SparsityReport sp = nsg::sparsity_check(g, nsg::hilbert_numerator(g), diag);
    const bool min_ok = nsg::min_element_check(g);
    Text t;
    t.row("generators", g.to_string())
        .row("diagonal", joined_ints(diag))
        .row("terms", dec(sp.count) + " (" + std::to_string(sp.distinct) + " distinct)")
        .row("bound", dec(sp.bound))
        .row("weak bound", dec(sp.weak_bound))
        .row("sparsity", sp.holds ? "holds" : "VIOLATED");
    res = {{"m", std::to_string(g.size())}, {"d1", dec(g[0])}, {"diagonal", int_array(diag)}};
    res.update(report_json(sp));
    if (g.size() >= 4) {
      const nsg::DiagonalSumCheck ds = nsg::diagonal_sum_check(g, diag);
      res["diagonal_sum"] = {{"lhs", dec(ds.lhs)}, {"rhs", nsg::to_decimal(ds.rhs)}, {"holds", ds.holds}};
      t.row("diagonal sum", dec(ds.lhs) + " <= " + nsg::to_decimal(ds.rhs) + (ds.holds ? " holds" : " VIOLATED"));
    } else {
      res["diagonal_sum"] = nullptr;
    }
    res["min_element"] = min_ok;
    t.row("d1 >= m", min_ok ? "holds" : "VIOLATED");
    text = t.str();
  });
}

NSG_API nsg_status nsg_run_sparsity_scan(unsigned m, int64_t d_max, unsigned samples, uint64_t seed, unsigned threads,
                                         nsg_report** out) {
  return run(out, "sparsity", [&](json& in, json& res, std::string& text) {
    in = {{"m", std::to_string(m)},
          {"d_max", dec(d_max)},
          {"samples", std::to_string(samples)},
          {"seed", std::to_string(seed)}};
    if (m < 3 || m > 8) nsg::raise(nsg::ErrorCode::DimensionUnsupported, "random scans take 3 <= m <= 8", m);
    if (d_max < 2 * static_cast<std::int64_t>(m) - 1 || d_max > 5000) {
      nsg::raise(nsg::ErrorCode::OutOfRange, "d_max must lie in [2m - 1, 5000]", d_max);
    }
    if (samples > 100000) nsg::raise(nsg::ErrorCode::OutOfRange, "too many samples", samples);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::int64_t>> tuples;
    for (unsigned s = 0; s < samples; ++s) tuples.push_back(random_minimal_tuple(rng, m, d_max));

    struct Row {
      nsg::SparsityReport sp;
      std::vector<std::int64_t> diag;
      std::optional<nsg::DiagonalSumCheck> ds;
      bool min_ok = false;
    };
    std::vector<Row> rows(tuples.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(pool_size(threads), std::max<std::size_t>(1, tuples.size())); ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < tuples.size(); i = next++) {
            const nsg::Generators g = nsg::validate_generators(tuples[i]);
            Row& r = rows[i];
            for (std::size_t j = 0; j < g.size(); ++j) r.diag.push_back(nsg::diagonal_coefficient(g, j));
            r.sp = nsg::sparsity_check(g, nsg::hilbert_numerator(g), r.diag);
            if (g.size() >= 4) r.ds = nsg::diagonal_sum_check(g, r.diag);
            r.min_ok = nsg::min_element_check(g);
          }
        } catch (...) {
          std::lock_guard guard(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    json list = json::array();
    std::size_t violations = 0;
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      const bool ok = r.sp.holds && (!r.ds || r.ds->holds) && r.min_ok;
      violations += ok ? 0 : 1;
      json rec{{"generators", int_array(tuples[i])}, {"diagonal", int_array(r.diag)}};
      rec.update(report_json(r.sp));
      rec["diagonal_sum_holds"] = r.ds ? json(r.ds->holds) : json(nullptr);
      rec["min_element"] = r.min_ok;
      list.push_back(rec);
      os << (ok ? "ok        " : "VIOLATED  ") << joined_ints(tuples[i]) << "  terms " << dec(r.sp.count)
         << " bound " << dec(r.sp.bound) << '\n';
    }
    os << rows.size() << " tuple(s), " << violations << " violation(s)\n";
    res = {{"tested", std::to_string(rows.size())}, {"violations", std::to_string(violations)}, {"records", list}};
    text = os.str();
  });
}

NSG_API nsg_status nsg_run_pythagorean(int64_t k1, int64_t k2, nsg_report** out) {
  return run(out, "pythagorean", [&](json& in, json& res, std::string& text) {
    in = {{"k1", dec(k1)}, {"k2", dec(k2)}};
    const nsg::PythagoreanForm p = nsg::pythagorean(k1, k2);
    res = {{"triple", int_array(p.triple)},     {"generators", int_array(p.generators.elements())},
           {"matrix", matrix_json(p.matrix)},   {"F", dec(p.frobenius)},
           {"G", dec(p.genus)},                 {"J", dec(p.j)}};
    text = Text()
               .row("triple", joined_ints(p.triple))
               .line("matrix")
               .matrix(p.matrix)
               .row("F", dec(p.frobenius))
               .row("G", dec(p.genus))
               .row("J", dec(p.j))
               .str();
  });
}

NSG_API nsg_status nsg_run_johnson(int64_t d1, int64_t d2, int64_t d3, nsg_report** out) {
  return run(out, "johnson", [&](json& in, json& res, std::string& text) {
    in = {{"d1", dec(d1)}, {"d2", dec(d2)}, {"d3", dec(d3)}};
    const nsg::Integer f = nsg::johnson_reduce(d1, d2, d3);
    res = {{"F", dec(f)}};
    text = Text().row("F", dec(f)).str();
  });
}

}  // extern "C"
