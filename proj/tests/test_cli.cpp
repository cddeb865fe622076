// Copyright 2026 The gausskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace gausskit::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gausskit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gausskit_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double report_value(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key, 0) == 0) return std::stod(line.substr(key.size()));
  }
  ADD_FAILURE() << "no '" << key << "' in report:\n" << report;
  return std::nan("");
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

Circuit parse(const std::string& text) {
  std::istringstream in(text);
  return read_circuit(in);
}

TEST(CliGenerate, GaussianIsValid) {
  for (const char* layered : {"", "--layered"}) {
    std::vector<std::string> args{"generate", "--family", "gaussian", "--n", "7", "--alpha", "0.9"};
    if (*layered) args.push_back(layered);
    const Outcome o = invoke(args);
    ASSERT_EQ(o.code, 0) << o.err;
    const Circuit c = parse(o.out);
    EXPECT_TRUE(validate(c).empty());
    EXPECT_EQ(c.data_qubits, 7u);
  }
}

TEST(CliGenerate, PhaseGateCounts) {
  const Outcome o = invoke({"generate", "--family", "phase", "--n", "5", "--d", "2", "--alpha", "0.3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Circuit c = parse(o.out);
  EXPECT_EQ(c.count_if([](const Gate& g) { return g.kind.type == GateType::Hadamard; }), 5u);
  EXPECT_EQ(c.count_if([](const Gate& g) { return g.kind.type == GateType::Z && g.controls.empty(); }), 5u);
  EXPECT_EQ(c.count_if([](const Gate& g) { return g.kind.type == GateType::Z && g.controls.size() == 1; }), 10u);
}

TEST(CliGenerate, TwoDimensionalCrossTerms) {
  const Outcome o = invoke({"generate", "--family", "gaussian2d", "--n", "2,3", "--q", "2,1,1", "--alpha", "0.9"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Circuit c = parse(o.out);
  EXPECT_EQ(c.data_qubits, 5u);
  EXPECT_TRUE(validate(c).empty());
  // One cross rotation per (x bit, y bit).
  const auto crosses = c.count_if([&](const Gate& g) {
    if (g.kind.type != GateType::B || g.controls.size() != 2) return false;
    const bool a = g.controls[0].qubit >= 3, b = g.controls[1].qubit >= 3;
    return a != b;
  });
  EXPECT_EQ(crosses, 6u);
}

TEST(CliErrors, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"generate", "--bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"generate", "--family", "gaussian", "--n", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"generate", "--family", "gaussian", "--n", "4", "--alpha", "1.5"}).code, kUsage);
  EXPECT_EQ(invoke({"generate", "--help"}).code, kOk);
  EXPECT_EQ(invoke({"sweep", "--family", "gaussian", "--n", "4", "--alpha", "0.9", "--axis", "gamma:0:1:2"}).code,
            kUsage);
}

TEST(CliErrors, ParseErrorReportsLine) {
  const auto path = temp_file("bad.txt");
  std::ofstream(path) << "QUBITS data=2 ancilla=0 alpha=0.5\nH q0\nFROB q1\n";
  const Outcome o = invoke({"simulate", "--circuit", path.string()});
  EXPECT_EQ(o.code, kParse);
  EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
  std::filesystem::remove(path);
}

TEST(CliErrors, InvalidCircuitFile) {
  const auto path = temp_file("invalid.txt");
  std::ofstream(path) << "QUBITS data=2 ancilla=1 alpha=0.5\nB 1 q2 c0\n";
  const Outcome o = invoke({"simulate", "--circuit", path.string()});
  EXPECT_EQ(o.code, kParse);
  std::filesystem::remove(path);
}

TEST(CliErrors, CapacityExit) {
  const Outcome o = invoke({"simulate", "--family", "gaussian", "--n", "30", "--alpha", "0.9"});
  EXPECT_EQ(o.code, kCapacity);
  EXPECT_EQ(invoke({"simulate", "--family", "phase", "--n", "40", "--alpha", "0.3"}).code, kCapacity);
}

TEST(CliSimulate, NoiselessGaussian) {
  const Outcome o = invoke({"simulate", "--family", "gaussian", "--n", "6", "--alpha", "0.9"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_LE(report_value(o.out, "epsilon"), 1e-10);
  EXPECT_TRUE(std::isnan(report_value(o.out, "expected T-depth")));
}

TEST(CliSimulate, SubnormalizationMatchesProbabilities) {
  const Outcome o = invoke({"simulate", "--family", "half-gaussian", "--n", "5", "--alpha", "0.8"});
  ASSERT_EQ(o.code, 0) << o.err;
  const double gamma = report_value(o.out, "gamma");
  std::istringstream probs(lines(o.out).at(6).substr(std::string("layer probs").size()));
  double prod = 1.0;
  for (double p; probs >> p;) prod *= p;
  EXPECT_NEAR(gamma * gamma, prod, 1e-8);
  EXPECT_LT(gamma, 1.0);
  EXPECT_LE(report_value(o.out, "epsilon"), 1e-10);
}

TEST(CliSimulate, DegreeThreeRefusesCost) {
  const Outcome o = invoke({"simulate", "--family", "phase", "--n", "4", "--d", "3", "--alpha", "0.3",
                            "--delta", "1e-3"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("resource estimate refused"), std::string::npos);
  EXPECT_TRUE(std::isnan(report_value(o.out, "expected T-depth")));
  EXPECT_GT(report_value(o.out, "epsilon"), 0.0);
}

TEST(CliSimulate, CircuitFileRoundTrip) {
  const auto path = temp_file("roundtrip.txt");
  const Outcome g = invoke({"generate", "--family", "exponential", "--n", "4", "--alpha", "0.7",
                            "--out", path.string()});
  ASSERT_EQ(g.code, 0) << g.err;
  const Outcome o = invoke({"simulate", "--circuit", path.string(), "--delta", "1e-3", "--seed", "5"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_GT(report_value(o.out, "epsilon"), 0.0);
  EXPECT_LT(report_value(o.out, "epsilon"), 1e-1);
  EXPECT_GT(report_value(o.out, "expected T-depth"), 0.0);
  std::filesystem::remove(path);
}

TEST(CliSweep, SinglePointMatchesSimulate) {
  const auto path = temp_file("single.csv");
  const std::vector<std::string> common{"--family", "gaussian", "--n", "7", "--alpha", "0.95", "--seed", "11"};
  std::vector<std::string> sim{"simulate", "--delta", "1e-4", "--out", path.string()};
  sim.insert(sim.end(), common.begin(), common.end());
  ASSERT_EQ(invoke(sim).code, 0);
  std::vector<std::string> sweep{"sweep", "--axis", "delta:1e-4:1e-4:1"};
  sweep.insert(sweep.end(), common.begin(), common.end());
  const Outcome o = invoke(sweep);
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, slurp(path));
  EXPECT_EQ(lines(o.out).at(0), kCsvHeader);
  std::filesystem::remove(path);
}

TEST(CliSweep, DeterministicAcrossThreads) {
  const std::vector<std::string> base{"sweep", "--family", "gaussian", "--n", "6", "--alpha", "0.95",
                                      "--axis", "delta:1e-6:1e-3:4:log", "--axis", "alpha:0.9:0.99:2",
                                      "--trials", "2", "--seed", "3"};
  const Outcome a = invoke(base);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(lines(a.out).size(), 1u + 4 * 2 * 2);
  EXPECT_EQ(invoke(base).out, a.out);
  std::vector<std::string> threaded = base;
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(invoke(threaded).out, a.out);
}

TEST(CliSweep, RegisterFollowsThreshold) {
  const Outcome o = invoke({"sweep", "--family", "gaussian", "--axis", "one_minus_alpha:1e-10:1e-2:2:log",
                            "--axis", "delta:1e-10:1e-2:2:log"});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::vector<std::string> rows = lines(o.out);
  ASSERT_EQ(rows.size(), 5u);
  const double gaps[] = {1e-10, 1e-10, 1e-2, 1e-2};
  const double deltas[] = {1e-10, 1e-2, 1e-10, 1e-2};
  for (std::size_t i = 0; i < 4; ++i) {
    const int n = std::stoi(rows[i + 1].substr(0, rows[i + 1].find(',')));
    EXPECT_EQ(n, qubit_threshold(ExpBase::from_log(std::log1p(-gaps[i])), deltas[i])) << i;
  }
  EXPECT_EQ(std::stoi(rows[1]), 19);
}

TEST(CliSweep, MemoryGuard) {
  const Outcome o = invoke({"sweep", "--family", "gaussian", "--n", "25", "--alpha", "0.99",
                            "--axis", "delta:1e-3:1e-3:1", "--threads", "8"});
  EXPECT_EQ(o.code, kCapacity);
  EXPECT_NE(o.err.find("thread"), std::string::npos) << o.err;
}

}  // namespace
}  // namespace gausskit::cli
