// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

// nsg: command-line front end over the C interface.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsg/nsg.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct Options {
  bool json = false;
  unsigned threads = 0;
  std::vector<std::int64_t> d;
  bool verify = false;
  unsigned n = 3;
  std::string kind = "delta2";
  std::string format = "ascii";
  std::int64_t a = 3;
  std::int64_t d3_max = 30;
  std::string c = "1";
  std::string nu = "5/8";
  std::int64_t l = 0;
  std::vector<std::int64_t> triple;
  unsigned m = 4;
  std::int64_t d_max = 200;
  unsigned samples = 200;
  std::uint64_t seed = 2024;
  std::int64_t k1 = 0, k2 = 0;
};

int finish(nsg_status s, nsg_report* r, bool json) {
  if (s != NSG_OK) {
    std::fprintf(stderr, "error: %s: %s\n", nsg_status_name(s), nsg_last_error_message());
    return nsg_status_is_internal(s) ? kExitInternal : kExitInvalid;
  }
  if (json) {
    std::printf("%s\n", nsg_report_json(r));
  } else {
    std::fputs(nsg_report_text(r), stdout);
  }
  nsg_report_destroy(r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups: gaps, relation matrices, closed forms and bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit the versioned JSON envelope");
  app.add_option("--threads", o.threads, "Worker threads for scans (0: machine parallelism)");

  auto tuple_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("generators", o.d, "Generators d1 d2 ...")->required();
    return sub;
  };

  CLI::App* gaps = tuple_cmd("gaps", "Gap set, Frobenius number and genus");
  CLI::App* frob = tuple_cmd("frob", "Closed-form Frobenius number, genus and numerator");
  frob->add_flag("--verify", o.verify, "Cross-check against the brute-force gap set");
  CLI::App* relation = tuple_cmd("relation", "First minimal relation matrix and classification");
  CLI::App* hilbert = tuple_cmd("hilbert", "Hilbert series numerator and sparsity");
  CLI::App* genera = tuple_cmd("genera", "Higher genera g_0 .. g_n");
  genera->add_option("--n", o.n, "Largest power")->capture_default_str();
  CLI::App* bounds = tuple_cmd("bounds", "Lower bounds for F and G, admissibility");
  CLI::App* diagram = tuple_cmd("diagram", "Gap diagrams as ASCII or SVG");
  diagram->add_option("--kind", o.kind, "delta2 | delta3 | lambda")
      ->check(CLI::IsMember({"delta2", "delta3", "lambda"}))
      ->capture_default_str();
  diagram->add_option("--format", o.format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();

  CLI::App* scan = app.add_subcommand("scan-appendix-a", "Triples whose relation matrix has constant diagonal a");
  scan->add_option("--a", o.a, "Diagonal value")->required();
  scan->add_option("--d3-max", o.d3_max, "Largest d3 scanned")->capture_default_str();

  CLI::App* falsify = app.add_subcommand("falsify", "Test F <= C (d1 d2 d3)^nu - (d1 + d2 + d3)");
  falsify->add_option("--C", o.c, "Constant C, rational")->capture_default_str();
  falsify->add_option("--nu", o.nu, "Exponent nu, rational p/q")->capture_default_str();
  CLI::Option* l_opt = falsify->add_option("--l", o.l, "Member (2l+1, 2l+3, 4l+3) of the counterexample family");
  CLI::Option* t_opt = falsify->add_option("--triple", o.triple, "Explicit triple")->expected(3);
  l_opt->excludes(t_opt);

  CLI::App* sparsity = app.add_subcommand("sparsity", "Numerator sparsity bounds; random scan without generators");
  sparsity->add_option("generators", o.d, "Generators d1 d2 ...");
  sparsity->add_option("--m", o.m, "Tuple length for the random scan")->capture_default_str();
  sparsity->add_option("--d-max", o.d_max, "Largest element for the random scan")->capture_default_str();
  sparsity->add_option("--samples", o.samples, "Number of random tuples")->capture_default_str();
  sparsity->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  CLI::App* pyth = app.add_subcommand("pythagorean", "Semigroup of the triple (k1^2-k2^2, 2k1k2, k1^2+k2^2)");
  pyth->add_option("k1", o.k1)->required();
  pyth->add_option("k2", o.k2)->required();

  CLI::App* johnson = app.add_subcommand("johnson", "Frobenius number via reduction by gcd(d1, d2)");
  johnson->add_option("entries", o.d, "d1 d2 d3")->required()->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: InvalidInput: %s\n", e.what());
    return kExitInvalid;
  }

  nsg_report* r = nullptr;
  nsg_status s = NSG_OK;
  const std::int64_t* d = o.d.data();
  const std::size_t n = o.d.size();
  if (*gaps) {
    s = nsg_run_gaps(d, n, &r);
  } else if (*frob) {
    s = nsg_run_frob(d, n, o.verify ? 1 : 0, &r);
  } else if (*relation) {
    s = nsg_run_relation(d, n, &r);
  } else if (*hilbert) {
    s = nsg_run_hilbert(d, n, &r);
  } else if (*genera) {
    s = nsg_run_genera(d, n, o.n, &r);
  } else if (*bounds) {
    s = nsg_run_bounds(d, n, &r);
  } else if (*diagram) {
    const nsg_diagram_kind k = o.kind == "delta2"   ? NSG_DIAGRAM_DELTA2
                               : o.kind == "delta3" ? NSG_DIAGRAM_DELTA3
                                                    : NSG_DIAGRAM_LAMBDA;
    s = nsg_run_diagram(d, n, k, o.format == "svg" ? NSG_FORMAT_SVG : NSG_FORMAT_ASCII, &r);
  } else if (*scan) {
    s = nsg_run_scan_uniform(o.a, o.d3_max, o.threads, &r);
  } else if (*falsify) {
    if (*l_opt && o.l == 0) {
      std::fprintf(stderr, "error: InvalidInput: l must be at least 1\n");
      return kExitInvalid;
    }
    s = nsg_run_falsify(o.c.c_str(), o.nu.c_str(), o.triple.empty() ? nullptr : o.triple.data(), o.triple.size(), o.l,
                        &r);
  } else if (*sparsity) {
    s = o.d.empty() ? nsg_run_sparsity_scan(o.m, o.d_max, o.samples, o.seed, o.threads, &r)
                    : nsg_run_sparsity(d, n, &r);
  } else if (*pyth) {
    s = nsg_run_pythagorean(o.k1, o.k2, &r);
  } else if (*johnson) {
    s = nsg_run_johnson(o.d[0], o.d[1], o.d[2], &r);
  }
  return finish(s, r, o.json);
}
