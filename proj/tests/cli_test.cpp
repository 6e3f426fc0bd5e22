// Copyright 2026 The dqc1sim Authors
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

#include "dqc1sim/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dqc1sim/dqc1.hpp"
#include "test_support.hpp"

namespace dqc1sim::cli {
namespace {

using namespace dqc1sim::testing;

constexpr double kPi = std::numbers::pi;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Csv {
  io::Json config;
  std::vector<std::string> header;
  std::vector<std::map<std::string, double>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("# ", 0) == 0) {
      csv.config = io::Json::parse(line.substr(2));
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      const auto cells = split(line);
      std::map<std::string, double> row;
      for (std::size_t k = 0; k < cells.size(); ++k) row[csv.header.at(k)] = std::stod(cells[k]);
      csv.rows.push_back(std::move(row));
    }
  }
  return csv;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "dqc1sim_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::filesystem::path write_json(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

TEST(Sweep, TraceCurvesAtAlphaOne) {
  const Result r = run_cli({"sweep", "--alpha", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 41u);
  EXPECT_EQ(csv.header.front(), "theta");
  EXPECT_EQ(csv.rows.front().at("theta"), -kPi);
  EXPECT_EQ(csv.rows.back().at("theta"), kPi);
  for (const auto& row : csv.rows) {
    const double theta = row.at("theta");
    EXPECT_NEAR(row.at("re_exact"), (1.0 + std::cos(theta)) / 2.0, 1e-12);
    EXPECT_NEAR(row.at("im_exact"), std::sin(theta) / 2.0, 1e-12);
    EXPECT_TRUE(std::isnan(row.at("re_est")));
  }
}

TEST(Sweep, AmplitudesScaleWithAlpha) {
  const Csv one = parse_csv(run_cli({"sweep", "--alpha", "1"}).out);
  const Csv part = parse_csv(run_cli({"sweep", "--alpha", "0.58"}).out);
  ASSERT_EQ(part.rows.size(), one.rows.size());
  for (std::size_t k = 0; k < one.rows.size(); ++k) {
    EXPECT_NEAR(part.rows[k].at("re_exact"), 0.58 * one.rows[k].at("re_exact"), 1e-12);
    EXPECT_NEAR(part.rows[k].at("im_exact"), 0.58 * one.rows[k].at("im_exact"), 1e-12);
  }
}

TEST(Sweep, DiscordWithoutEntanglement) {
  const Result r = run_cli({"sweep", "--alpha", "0.997", "--outputs", "discord,tangle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 41u);
  for (const auto& row : csv.rows) EXPECT_LT(std::abs(row.at("tangle")), 1e-9);
  for (std::size_t k : {0u, 20u, 40u}) EXPECT_LT(std::abs(csv.rows[k].at("discord_rc")), 1e-6);
  for (std::size_t k = 0; k < 41; ++k) {
    EXPECT_NEAR(csv.rows[k].at("discord_rc"), csv.rows[40 - k].at("discord_rc"), 1e-6);
  }
  const Matrix rho = dqc1::output_state(dqc1::z_theta(kPi / 2), 0.997).entries();
  const double grid = grid_discord_reference(rho, 0, 90, 180);
  const double d = csv.rows[30].at("discord_rc");
  EXPECT_NEAR(csv.rows[30].at("theta"), kPi / 2, 1e-12);
  EXPECT_LE(d, grid + 1e-9);
  EXPECT_GE(d, grid - 1e-3);
  EXPECT_GT(d, 0.1);
}

TEST(Sweep, EmbedsConfigAndIsReproducible) {
  const std::vector<std::string> args = {"--seed", "17", "sweep", "--steps", "9", "--shots", "2000",
                                         "--outputs", "trace,tomo", "--mean-counts", "500"};
  const Result a = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  const Csv csv = parse_csv(a.out);
  EXPECT_EQ(csv.config["seed"], 17);
  EXPECT_EQ(csv.config["steps"], 9);
  EXPECT_EQ(csv.config["shots"], 2000);
  EXPECT_EQ(csv.header.back(), "tomo_tangle");
  EXPECT_EQ(run_cli(args).out, a.out);

  std::vector<std::string> threaded = {"--jobs", "4"};
  threaded.insert(threaded.end(), args.begin(), args.end());
  EXPECT_EQ(run_cli(threaded).out, a.out);

  std::vector<std::string> other = args;
  other[1] = "18";
  EXPECT_NE(run_cli(other).out, a.out);
}

TEST(Sweep, ShotEstimatesAreRescaledByAlpha) {
  const Csv csv = parse_csv(run_cli({"sweep", "--steps", "5", "--alpha", "0.5", "--shots", "1000"}).out);
  for (const auto& row : csv.rows) {
    EXPECT_EQ(row.at("shots"), 1000.0);
    EXPECT_DOUBLE_EQ(row.at("trace_re_est"), row.at("re_est") / 0.5);
    EXPECT_DOUBLE_EQ(row.at("trace_im_est"), row.at("im_est") / 0.5);
  }
}

TEST(Sweep, JsonAndFileOutput) {
  const Result j = run_cli({"--format", "json", "sweep", "--steps", "3"});
  ASSERT_EQ(j.code, 0);
  const io::Json doc = io::Json::parse(j.out);
  EXPECT_EQ(doc["config"]["command"], "sweep");
  EXPECT_EQ(doc["rows"].size(), 3u);

  const auto path = scratch("sweep.csv");
  std::filesystem::remove(path);
  const Result f = run_cli({"--out", path.string(), "sweep", "--steps", "3"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(parse_csv(text).rows.size(), 3u);
}

TEST(Errors, UnwritableOutputNamesPath) {
  const auto path = scratch("missing_dir") / "x.csv";
  const Result r = run_cli({"--out", path.string(), "sweep", "--steps", "3"});
  EXPECT_EQ(r.code, 1);
  const io::Json e = io::Json::parse(r.err);
  EXPECT_EQ(e["error"]["type"], "IoError");
  EXPECT_NE(e["error"]["message"].get<std::string>().find(path.string()), std::string::npos);
}

TEST(Errors, ExitCodesAndMachineReadableErrors) {
  const Result bad_steps = run_cli({"sweep", "--steps", "1"});
  EXPECT_EQ(bad_steps.code, 1);
  EXPECT_EQ(io::Json::parse(bad_steps.err)["error"]["type"], "ValidationError");
  const Result reversed = run_cli({"sweep", "--theta-min", "1", "--theta-max", "0"});
  EXPECT_EQ(reversed.code, 1);

  const Result usage = run_cli({"sweep", "--no-such-flag"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(io::Json::parse(usage.err)["error"]["type"], "UsageError");
  EXPECT_EQ(run_cli({}).code, 2);

  const Result help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("sweep"), std::string::npos);
}

TEST(Trace, IdentityFileUsesHoeffdingBudget) {
  const auto path = write_json("identity.json", R"({"dim": 2, "re": [[1, 0], [0, 1]]})");
  int within = 0;
  for (int s = 0; s < 100; ++s) {
    const Result r = run_cli({"--seed", std::to_string(s), "trace", "--unitary", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const io::Json j = io::Json::parse(r.out);
    EXPECT_EQ(j["shots_used"], 185);
    EXPECT_EQ(j["exact_re"], 1.0);
    EXPECT_EQ(j["exact_im"], 0.0);
    EXPECT_EQ(j["estimate_re"], 1.0);
    // Outcome-probability scale, where the budget's guarantee applies.
    if (j["abs_error"].get<double>() / 2.0 <= 0.1) ++within;
  }
  EXPECT_GE(within, 95);
}

TEST(Trace, ControlledZPiHasZeroTrace) {
  const Result r = run_cli({"trace", "--theta", io::format_double(kPi)});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::Json j = io::Json::parse(r.out);
  EXPECT_NEAR(j["exact_re"].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(j["exact_im"].get<double>(), 0.0, 1e-12);
}

TEST(Trace, Errors) {
  const Result zero = run_cli({"trace", "--theta", "1", "--alpha", "0"});
  EXPECT_EQ(zero.code, 1);
  const io::Json e = io::Json::parse(zero.err);
  EXPECT_EQ(e["error"]["type"], "EstimationError");
  EXPECT_NE(e["error"]["message"].get<std::string>().find("no pure fraction"), std::string::npos);

  const auto path = write_json("not_unitary.json", R"({"dim": 2, "re": [[1, 0], [0, 1.2]]})");
  const Result bad = run_cli({"trace", "--unitary", path.string()});
  EXPECT_EQ(bad.code, 1);
  const io::Json b = io::Json::parse(bad.err);
  EXPECT_EQ(b["error"]["type"], "ValidationError");
  EXPECT_NE(b["error"]["message"].get<std::string>().find("[1][1]"), std::string::npos);

  const Result missing = run_cli({"trace", "--unitary", scratch("nope.json").string()});
  EXPECT_EQ(io::Json::parse(missing.err)["error"]["type"], "IoError");
}

TEST(Correlations, DiscordAndTangleCommands) {
  const Result d = run_cli({"discord", "--theta", io::format_double(kPi / 2)});
  ASSERT_EQ(d.code, 0) << d.err;
  const io::Json report = io::Json::parse(d.out)["report"];
  const Matrix rho = dqc1::output_state(dqc1::z_theta(kPi / 2), 1.0).entries();
  EXPECT_NEAR(report["discord_rc"].get<double>(), grid_discord_reference(rho, 0, 90, 180), 1e-3);
  EXPECT_NEAR(report["discord_cr"].get<double>(), 0.0, 1e-9);

  const Result t = run_cli({"tangle", "--theta", "1"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NEAR(io::Json::parse(t.out)["tangle"].get<double>(), 0.0, 1e-12);

  EXPECT_EQ(run_cli({"discord", "--theta", "1", "--state", "x.json"}).code, 1);
}

TEST(Tomo, ReconstructsKnownState) {
  const Result r = run_cli({"--seed", "3", "tomo", "--theta", "1", "--mean-counts", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::Json j = io::Json::parse(r.out);
  EXPECT_EQ(j["run"]["settings"].size(), 36u);
  EXPECT_GE(j["fidelity"].get<double>(), 0.99);
  EXPECT_LE(j["correlations"]["tangle"].get<double>(), 0.02);

  const auto counts = scratch("counts.json");
  std::ofstream(counts) << j["run"].dump();
  const Result again = run_cli({"tomo", "--counts", counts.string()});
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(io::Json::parse(again.out)["reconstructed"], j["reconstructed"]);
}

TEST(VerifyClifford, ControlledZCircuit) {
  const auto path = write_json("cz.json", R"({"n": 2, "gates": [{"g": "H", "q": 0}, {"g": "CZ", "q": [0, 1]}]})");
  const Result r = run_cli({"verify-clifford", "--circuit", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::Json j = io::Json::parse(r.out)["report"];
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["propagated"], "+XZ");
}

TEST(VerifyClifford, EmptyAndRandomCircuits) {
  const auto path = write_json("empty.json", R"({"n": 3, "gates": []})");
  const Result empty = run_cli({"verify-clifford", "--circuit", path.string()});
  ASSERT_EQ(empty.code, 0) << empty.err;
  EXPECT_TRUE(io::Json::parse(empty.out)["report"]["verified"].get<bool>());

  for (int s = 0; s < 5; ++s) {
    const Result r = run_cli({"--seed", std::to_string(s), "verify-clifford", "--random-qubits", "4",
                              "--gates", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    const io::Json j = io::Json::parse(r.out)["report"];
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_LT(std::abs(j["dense_check"]["discord_rc"].get<double>()), 1e-6);
    EXPECT_LT(std::abs(j["dense_check"]["discord_cr"].get<double>()), 1e-6);
  }
}

TEST(VerifyClifford, MalformedCircuitNamesGate) {
  const auto path = write_json("bad_circuit.json",
                               R"({"n": 2, "gates": [{"g": "H", "q": 0}, {"g": "CZ", "q": [0, 7]}]})");
  const Result r = run_cli({"verify-clifford", "--circuit", path.string()});
  EXPECT_EQ(r.code, 1);
  const io::Json e = io::Json::parse(r.err);
  EXPECT_EQ(e["error"]["type"], "ParseError");
  EXPECT_NE(e["error"]["message"].get<std::string>().find("gate 1"), std::string::npos);
}

}  // namespace
}  // namespace dqc1sim::cli
