// SPDX-FileCopyrightText: (c) 2026 The nsg Authors
//
// SPDX-License-Identifier: Apache-2.0

// Golden invocations of the nsg executable.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using json = nlohmann::json;

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(NSG_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Runs with --json, checks the envelope and returns it.
json cli_json(const std::string& args) {
  const CliRun r = cli("--json " + args);
  EXPECT_EQ(r.exit_code, 0) << args;
  json j = json::parse(r.out, nullptr, false);
  EXPECT_FALSE(j.is_discarded()) << args;
  if (j.is_discarded()) return json::object();
  EXPECT_EQ(j["schema_version"], "1");
  return j;
}

json strs(std::initializer_list<const char*> v) {
  json a = json::array();
  for (const char* s : v) a.push_back(s);
  return a;
}

json result(const std::string& args) { return cli_json(args)["result"]; }

std::set<std::string> as_set(const json& a) {
  std::set<std::string> s;
  for (const auto& v : a) s.insert(v.get<std::string>());
  return s;
}

json check_named(const json& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c["name"] == name) return c;
  }
  return json();
}

// Rebuilds the argument list from an echoed input object.
std::string args_from_input(const std::string& command, const json& input) {
  std::string out = command;
  const bool positional_scalars = command == "pythagorean" || command == "johnson";
  for (const auto& [key, value] : input.items()) {
    if (value.is_null() || value == false) continue;
    std::string flag = "--" + key;
    for (auto& ch : flag) ch = ch == '_' ? '-' : ch;
    if (key == "generators" || positional_scalars) {
      flag.clear();
    }
    if (value == true) {
      out += " " + flag;
    } else if (value.is_array()) {
      if (!flag.empty()) out += " " + flag;
      for (const auto& v : value) out += " " + v.get<std::string>();
    } else {
      if (!flag.empty()) out += " " + flag;
      out += " " + value.get<std::string>();
    }
  }
  return out;
}

}  // namespace

TEST(Cli, SpecExamples) {
  const json frob = result("frob 23 29 44");
  EXPECT_EQ(frob["F"], "239");
  EXPECT_EQ(frob["G"], "122");
  EXPECT_EQ(frob["J"], "86");

  const CliRun gaps = cli("gaps 4 5 6");
  EXPECT_EQ(gaps.exit_code, 0);
  EXPECT_NE(gaps.out.find("1 2 3 7"), std::string::npos);

  const CliRun fal = cli("falsify --C 1 --nu 5/8 --triple 10001 10003 20003");
  EXPECT_EQ(fal.exit_code, 0);
  EXPECT_NE(fal.out.find("VIOLATED"), std::string::npos);
}

TEST(Cli, Validation) {
  EXPECT_EQ(result("gaps 3 4 5")["gaps"], strs({"1", "2"}));
  const CliRun nc = cli("gaps 9 21 24", true);
  EXPECT_EQ(nc.exit_code, 2);
  EXPECT_NE(nc.out.find("NotCoprime"), std::string::npos);
  const CliRun nm = cli("gaps 3 4 5 6", true);
  EXPECT_EQ(nm.exit_code, 2);
  EXPECT_NE(nm.out.find("NotMinimal"), std::string::npos);
  EXPECT_EQ(cli("gaps 4 6 9").exit_code, 0);
  EXPECT_EQ(cli("gaps 1 4", true).out.find("ContainsUnit") != std::string::npos, true);
  EXPECT_EQ(cli("gaps 5").exit_code, 2);
  EXPECT_EQ(cli("gaps 3 x").exit_code, 2);
  EXPECT_EQ(cli("nonsense").exit_code, 2);
  EXPECT_EQ(cli("frob").exit_code, 2);
  EXPECT_EQ(cli("--help").exit_code, 0);
}

TEST(Cli, GapSets) {
  json r = result("gaps 3 4 5");
  EXPECT_EQ(r["frobenius"], "2");
  EXPECT_EQ(r["genus"], "2");
  r = result("gaps 4 5 6");
  EXPECT_EQ(r["gaps"], strs({"1", "2", "3", "7"}));
  EXPECT_EQ(r["frobenius"], "7");
  EXPECT_EQ(r["genus"], "4");
  r = result("gaps 4 21 26 43");
  EXPECT_EQ(r["genus"], "21");
  EXPECT_EQ(r["gaps"].size(), 21u);
  r = result("gaps 3 5");
  EXPECT_EQ(r["gaps"], strs({"1", "2", "4", "7"}));
  EXPECT_EQ(r["frobenius"], "7");
}

TEST(Cli, TwoGeneratorClosedForms) {
  json r = result("frob 3 5");
  EXPECT_EQ(r["F"], "7");
  EXPECT_EQ(r["G"], "4");
  EXPECT_EQ(r["Q"]["string"], "1 - z^15");
  r = result("frob 3 4");
  EXPECT_EQ(r["F"], "5");
  EXPECT_EQ(r["G"], "3");
  EXPECT_EQ(r["Q"]["string"], "1 - z^12");
  r = result("frob 2 3 --verify");
  EXPECT_EQ(r["F"], "1");
  EXPECT_EQ(r["G"], "1");
  EXPECT_EQ(r["verified"]["agree"], true);
}

TEST(Cli, Numerators) {
  json r = result("hilbert 3 4 5");
  EXPECT_EQ(r["Q"]["string"], "1 - z^8 - z^9 - z^10 + z^13 + z^14");
  EXPECT_EQ(r["sparsity"]["count"], "6");
  r = result("hilbert 4 5 6");
  EXPECT_EQ(r["Q"]["string"], "1 - z^10 - z^12 + z^22");
  EXPECT_EQ(r["sparsity"]["count"], "4");
  r = result("hilbert 4 21 26 43");
  EXPECT_EQ(r["sparsity"]["count"], "18");
  r = result("hilbert 4 31 37 50");
  EXPECT_EQ(r["Q"]["string"],
            "1 - z^62 - z^68 - z^74 - z^81 - z^87 + z^99 - z^100 + z^105 + z^112 + 2*z^118 + z^124 + z^131 + z^137 "
            "- z^149 - z^155 - z^168");
  EXPECT_EQ(r["sparsity"]["count"], "18");
  EXPECT_EQ(r["F"], "46");
  EXPECT_EQ(r["G"], "28");
}

TEST(Cli, RelationMatrices) {
  json r = result("relation 3 4 5");
  EXPECT_EQ(r["matrix"], json::parse(R"([["3","-1","-1"],["-1","2","-1"],["-2","-1","2"]])"));
  EXPECT_EQ(r["classification"]["kind"], "non-symmetric");
  EXPECT_EQ(r["standard_form"]["cofactors"], strs({"3", "4", "5"}));
  for (const auto& c : r["standard_form"]["checks"]) EXPECT_EQ(c["holds"], true) << c.dump();
  r = result("relation 23 29 44");
  EXPECT_EQ(r["matrix"], json::parse(R"([["7","-1","-3"],["-5","7","-2"],["-2","-6","5"]])"));
  EXPECT_EQ(result("relation 10001 10003 20003")["matrix"][2], strs({"-3", "-1", "2"}));
  EXPECT_EQ(result("relation 5 7 8")["diagonal"], strs({"3", "3", "3"}));
  EXPECT_EQ(result("relation 4 31 37 50")["matrix"][3], strs({"-8", "-1", "-1", "2"}));
  r = result("relation 4 5 6");
  EXPECT_EQ(r["classification"]["kind"], "symmetric");
  EXPECT_EQ(r["classification"]["pair"], strs({"1", "3"}));
  EXPECT_EQ(r["classification"]["lcm"], "12");
  EXPECT_TRUE(r["standard_form"].is_null());
  EXPECT_EQ(result("relation 16 17 23")["classification"]["kind"], "non-symmetric");
}

TEST(Cli, ThreeGeneratorClosedForms) {
  EXPECT_EQ(result("frob 3 4 5")["J"], "1");
  EXPECT_EQ(result("frob 1563 2275 2503")["J"], "10646");
  json r = result("frob 137 251 256 --verify");
  EXPECT_EQ(r["F"], "4948");
  EXPECT_EQ(r["G"], "2562");
  r = result("frob 3 4 5");
  EXPECT_EQ(r["F"], "2");
  EXPECT_EQ(r["G"], "2");
  EXPECT_EQ(as_set(json::array({r["L1"], r["L2"]})), (std::set<std::string>{"13", "14"}));
  r = result("frob 4 5 6");
  EXPECT_EQ(r["kind"], "symmetric");
  EXPECT_EQ(r["F"], "7");
  EXPECT_EQ(r["G"], "4");
  EXPECT_EQ(r["Q"]["string"], "1 - z^10 - z^12 + z^22");
  r = result("frob 23 29 44");
  EXPECT_EQ(r["Q"]["string"], "1 - z^161 - z^203 - z^220 + z^249 + z^335");
}

TEST(Cli, PythagoreanAndJohnson) {
  json r = result("pythagorean 2 1");
  EXPECT_EQ(r["generators"], strs({"3", "4", "5"}));
  EXPECT_EQ(r["F"], "2");
  EXPECT_EQ(r["G"], "2");
  r = result("pythagorean 3 2");
  EXPECT_EQ(r["generators"], strs({"5", "12", "13"}));
  EXPECT_EQ(r["F"], "21");
  EXPECT_EQ(r["G"], "13");
  const CliRun bad = cli("pythagorean 3 1", true);
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.out.find("NotPrimitive"), std::string::npos);
  EXPECT_EQ(result("johnson 4 6 7")["F"], "9");
  EXPECT_EQ(result("johnson 6 9 20")["F"], "43");
  EXPECT_EQ(result("johnson 3 4 5")["F"], "2");
}

TEST(Cli, Diagrams) {
  json r = result("diagram --kind delta2 3 5");
  EXPECT_EQ(r["cells"], json::parse(R"([["1","1","7"],["2","1","4"],["3","1","1"],["1","2","2"]])"));
  EXPECT_EQ(as_set(r["bottom_layer"]), (std::set<std::string>{"1", "2"}));
  for (const auto& c : r["cells"]) EXPECT_NE(c[2], "6");
  r = result("diagram 3 4");
  EXPECT_EQ(r["values"], strs({"1", "2", "5"}));
  EXPECT_EQ(as_set(r["bottom_layer"]), (std::set<std::string>{"1", "2"}));

  r = result("diagram --kind delta3 3 4 5");
  EXPECT_EQ(r["values"], strs({"1", "2"}));
  EXPECT_EQ(r["associated_sets"][0]["values"], strs({"5"}));
  r = result("diagram --kind delta3 5 7 8");
  EXPECT_EQ(r["values"].size(), 7u);
  EXPECT_EQ(r["values"].back(), "11");
  EXPECT_EQ(r["associated_sets"][0]["values"], strs({"8", "13", "18", "23"}));
  EXPECT_EQ(result("diagram --kind delta3 4 5 6")["values"], strs({"1", "2", "3", "7"}));

  EXPECT_EQ(as_set(result("diagram --kind lambda 3 4 5")["values"]), (std::set<std::string>{"0", "4", "5"}));
  EXPECT_EQ(as_set(result("diagram --kind lambda 5 7 8")["values"]),
            (std::set<std::string>{"0", "7", "8", "14", "16"}));

  const CliRun svg = cli("diagram --kind lambda --format svg 5 7 8");
  EXPECT_EQ(svg.exit_code, 0);
  EXPECT_EQ(svg.out.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.out.find("</svg>"), std::string::npos);
  const CliRun ascii = cli("diagram 3 5");
  EXPECT_NE(ascii.out.find("7"), std::string::npos);
}

TEST(Cli, HigherGenera) {
  json r = result("genera --n 3 3 4 5");
  EXPECT_EQ(r["power_sums"], strs({"2", "3", "5", "9"}));
  EXPECT_EQ(result("genera 23 29 44")["power_sums"][1], "9526");
  // Brute-force power sum; the published figure for this triple differs.
  EXPECT_EQ(result("genera 137 251 256")["power_sums"][1], "3890976");
  EXPECT_EQ(result("genera 1563 2275 2503")["closed"]["g1"], "12178811815");
  r = result("genera 3 5");
  EXPECT_EQ(r["closed"], json::parse(R"({"g1":"14","g2":"70","g3":"416"})"));
}

TEST(Cli, Bounds) {
  json r = result("bounds 23 29 44");
  json c = check_named(r["checks"], "frobenius_general");
  EXPECT_EQ(c["lhs"], "112225");
  EXPECT_EQ(c["rhs"], "88044");
  EXPECT_EQ(c["holds"], true);
  r = result("bounds 4 5 6");
  c = check_named(r["checks"], "frobenius_symmetric");
  EXPECT_EQ(c["lhs"], "484");
  EXPECT_EQ(c["rhs"], "480");
  r = result("bounds 3 4 5");
  c = check_named(r["checks"], "genus_exceeds_frobenius");
  EXPECT_EQ(c["lhs"], "4");
  EXPECT_EQ(c["rhs"], "4");
  EXPECT_EQ(c["holds"], true);
  EXPECT_EQ(r["admissible"]["admissible"], false);
  EXPECT_EQ(r["admissible"]["reason"], "3 divides 4+5");
  EXPECT_EQ(result("bounds 10001 10003 20003")["admissible"]["admissible"], true);
}

TEST(Cli, Falsify) {
  json r = result("falsify --C 1 --nu 5/8 --triple 100001 100003 200003");
  EXPECT_EQ(r["verdict"], "VIOLATED");
  EXPECT_EQ(r["F"], "5000149999");
  EXPECT_EQ(result("falsify --triple 23 29 44")["verdict"], "HOLDS");
  r = result("falsify --l 1");
  EXPECT_EQ(r["triple"], strs({"3", "5", "7"}));
  EXPECT_EQ(r["F"], "4");
  r = result("falsify --l 5000");
  EXPECT_EQ(r["triple"], strs({"10001", "10003", "20003"}));
  EXPECT_EQ(r["F"], "50014999");
  r = result("falsify --l 8192");
  EXPECT_EQ(r["F"], "134242303");
  EXPECT_EQ(r["verdict"], "VIOLATED");
  EXPECT_EQ(result("falsify --l 10")["family"]["admissible"], true);
  EXPECT_EQ(result("falsify --C 1 --nu 5/8")["critical_l"]["value"], "4096");
  EXPECT_EQ(result("falsify --C 2 --nu 5/8")["critical_l"]["log2_lo"], "20");
  EXPECT_EQ(result("falsify --C 1 --nu 1/2")["critical_l"]["log2_lo"], "2");
  EXPECT_TRUE(result("falsify --nu 2/3")["critical_l"].is_null());
  EXPECT_EQ(cli("falsify --l 3 --triple 3 4 5").exit_code, 2);
}

TEST(Cli, UniformDiagonalScan) {
  json r = result("scan-appendix-a --a 3 --d3-max 30");
  ASSERT_EQ(r["records"].size(), 1u);
  EXPECT_EQ(r["records"][0], json::parse(R"({"triple":["5","7","8"],"F":"11","G":"7"})"));
  r = result("scan-appendix-a --a 4 --d3-max 30");
  ASSERT_EQ(r["records"].size(), 2u);
  EXPECT_EQ(r["records"][0]["triple"], strs({"7", "13", "15"}));
  EXPECT_EQ(r["records"][1], json::parse(R"({"triple":["10","13","14"],"F":"45","G":"24"})"));
  r = result("--threads 2 scan-appendix-a --a 5");
  ASSERT_EQ(r["records"].size(), 9u);
  std::set<std::string> rows;
  for (const auto& x : r["records"]) {
    rows.insert(x["triple"][0].get<std::string>() + "," + x["triple"][1].get<std::string>() + "," +
                x["triple"][2].get<std::string>() + ":" + x["F"].get<std::string>() + "," + x["G"].get<std::string>());
  }
  EXPECT_TRUE(rows.count("17,21,22:113,58"));
  EXPECT_TRUE(rows.count("9,22,23:83,46"));
  EXPECT_TRUE(rows.count("13,17,24:83,46"));
  EXPECT_TRUE(rows.count("16,17,23:93,50"));
  EXPECT_TRUE(rows.count("13,21,22:93,50"));
}

TEST(Cli, Sparsity) {
  json r = result("sparsity 4 21 26 43");
  EXPECT_EQ(r["count"], "18");
  EXPECT_EQ(r["bound"], "26");
  EXPECT_EQ(r["holds"], true);
  EXPECT_EQ(r["diagonal_sum"]["lhs"], "6");
  EXPECT_EQ(r["diagonal_sum"]["rhs"], "37/4");
  EXPECT_EQ(r["min_element"], true);
  r = result("sparsity 4 31 37 50");
  EXPECT_EQ(r["count"], "18");
  EXPECT_EQ(r["bound"], "26");
  EXPECT_EQ(r["diagonal_sum"]["holds"], true);
  EXPECT_EQ(result("sparsity 4 13 15 18")["holds"], true);
  EXPECT_EQ(result("sparsity 3 4 5")["min_element"], true);
  r = result("sparsity --seed 2024 --m 4 --d-max 200 --samples 200");
  EXPECT_EQ(r["tested"], "200");
  EXPECT_EQ(r["violations"], "0");
  r = result("sparsity --m 5 --d-max 60 --samples 50");
  for (const auto& rec : r["records"]) EXPECT_GE(std::stoll(rec["generators"][0].get<std::string>()), 5);
}

TEST(Cli, JsonRoundTrip) {
  const std::vector<std::string> runs = {
      "gaps 5 3",
      "frob 23 29 44 --verify",
      "frob 4 5 6 7",
      "relation 4 31 37 50",
      "hilbert 4 21 26 43",
      "genera --n 5 23 29 44",
      "bounds 137 251 256",
      "diagram --kind lambda --format svg 23 29 44",
      "scan-appendix-a --a 4 --d3-max 30",
      "falsify --C 3/2 --nu 5/8 --l 77",
      "falsify --triple 10001 10003 20003",
      "sparsity 4 31 37 50",
      "sparsity --m 4 --d-max 90 --samples 12 --seed 5",
      "pythagorean 5 2",
      "johnson 6 9 20",
  };
  for (const auto& args : runs) {
    const json first = cli_json(args);
    const std::string again = args_from_input(first["command"], first["input"]);
    const json second = cli_json(again);
    EXPECT_EQ(first, second) << args << " -> " << again;
  }
}

TEST(Cli, HumanOutputIsDeterministic) {
  const std::string a = cli("--threads 3 scan-appendix-a --a 5").out;
  const std::string b = cli("--threads 1 scan-appendix-a --a 5").out;
  EXPECT_EQ(a, b);
  EXPECT_EQ(cli("sparsity --samples 30").out, cli("--threads 2 sparsity --samples 30").out);
}
