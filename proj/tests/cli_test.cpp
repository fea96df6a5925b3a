// Copyright 2026 The minent Authors
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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minent/cli.hpp"
#include "minent/dephasing.hpp"
#include "minent/pst.hpp"
#include "minent/serialize.hpp"
#include "oracles.hpp"

namespace minent {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result call(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunConfig with_spectrum(Command c, std::vector<double> p, int d = 2) {
  RunConfig cfg;
  cfg.command = c;
  cfg.spectrum = std::move(p);
  cfg.d = d;
  return cfg;
}

class Workdir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("minent_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write_state(const std::string& name, const DensityMatrix& rho) const {
    return write(name, to_json(rho).dump());
  }
  static std::string read(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

// Runs the installed binary through the shell; stderr is discarded.
Result shell(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" MINENT_CLI_PATH "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(CliRun, EntropyGolden) {
  auto cfg = with_spectrum(Command::entropy, {0.7730, 0.1135, 0.1135});
  cfg.alpha = 1.0;
  const auto r = call(cfg);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NEAR(r.json().at("bits").get<double>(), 1.0, 1e-3);
  cfg.alpha = kAlphaInf;
  EXPECT_NEAR(call(cfg).json().at("bits").get<double>(), 0.3716, 1e-3);
}

TEST(CliRun, FeasibilityExitCodes) {
  const auto bad = call(with_spectrum(Command::feasibility, {0.4, 0.3, 0.3}, 3));
  EXPECT_EQ(bad.code, kExitInfeasible);
  EXPECT_FALSE(bad.json().at("feasible").get<bool>());
  EXPECT_NE(bad.err.find("lambda_max = 0.400 > 1/3"), std::string::npos) << bad.err;
  EXPECT_EQ(call(with_spectrum(Command::feasibility, {0.25, 0.25, 0.25, 0.125, 0.125}, 3)).code, kExitOk);

  auto mask = with_spectrum(Command::feasibility, {0.25, 0.25, 0.25, 0.25}, 4);
  mask.task = "mask";
  EXPECT_EQ(call(mask).code, kExitOk);
  mask.task = "teleport";
  EXPECT_EQ(call(mask).code, kExitInvalidInput);
}

TEST(CliRun, UnsupportedOrderSuggestsEmbedding) {
  RunConfig cfg;
  cfg.command = Command::mask;
  cfg.d = 2;
  const auto r = call(cfg);
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_EQ(r.json().at("status"), "unsupported_order");
  EXPECT_EQ(r.json().at("suggested_order").get<int>(), 3);
  cfg.d = 3;
  EXPECT_EQ(call(cfg).code, kExitOk);
}

TEST(CliRun, MissingInputIsInvalid) {
  RunConfig cfg;
  cfg.command = Command::synth_pst;
  EXPECT_EQ(call(cfg).code, kExitInvalidInput);
  cfg.input = "/nonexistent/pad.json";
  EXPECT_EQ(call(cfg).code, kExitInvalidInput);
}

TEST_F(Workdir, MalformedJsonIsInvalid) {
  RunConfig cfg;
  cfg.command = Command::entropy;
  cfg.input = write("broken.json", "[0.5, 0.5");
  const auto r = call(cfg);
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_EQ(r.json().at("status"), "invalid_input");
}

TEST_F(Workdir, SynthThenVerifyMatchesLibrary) {
  const std::vector<double> pad{0.25, 0.25, 0.25, 0.125, 0.125};
  auto synth = with_spectrum(Command::synth_pst, pad, 3);
  synth.output = (dir_ / "proto.json").string();
  ASSERT_EQ(call(synth).code, kExitOk);
  EXPECT_FALSE(fs::exists(dir_ / "proto.json.tmp"));

  RunConfig verify;
  verify.command = Command::verify_pst;
  verify.input = synth.output;
  verify.secrets = 6;
  verify.seed = 4;
  const auto r = call(verify);
  ASSERT_EQ(r.code, kExitOk);
  const auto proto = pst_from_json(Json::parse(read(synth.output)));
  const auto lib = verify_pst(proto, 6, 4);
  EXPECT_EQ(r.json().at("min_fidelity").get<double>(), lib.min_fidelity);
  EXPECT_EQ(r.json().at("max_eaves_distance").get<double>(), lib.max_eaves_distance);
  EXPECT_TRUE(r.json().at("pass").get<bool>());
}

TEST(CliRun, VerifyPstInfeasiblePad) {
  const auto r = call(with_spectrum(Command::verify_pst, {0.4, 0.3, 0.3}, 3));
  EXPECT_EQ(r.code, kExitInfeasible);
}

TEST_F(Workdir, DephaseMatchesLibrary) {
  const std::vector<double> sigma{0.5, 0.25, 0.125, 0.125};
  const auto rho = random_state(RandomKind::ginibre_mixed, {4}, 3);
  auto cfg = with_spectrum(Command::dephase, sigma, 2);
  cfg.state = write_state("rho.json", rho);
  const auto r = call(cfg);
  ASSERT_EQ(r.code, kExitOk) << r.out;
  const auto plan = plan_catalytic_dephasing(DensityMatrix::diagonal(sigma), 2);
  const auto lib = run_dephasing(plan, rho);
  const auto cli = state_from_json(r.json().at("system_out"));
  EXPECT_EQ(max_abs_diff(cli.matrix(), lib.system_out.matrix()), 0.0);
  EXPECT_EQ(r.json().at("register_dim").get<int>(), 3);
  EXPECT_EQ(call(with_spectrum(Command::dephase, {0.6, 0.4}, 2)).code, kExitInfeasible);
}

TEST_F(Workdir, TransitExitCodes) {
  RunConfig cfg;
  cfg.command = Command::transit;
  cfg.input = write("src.json", "[0.5, 0.3, 0.1, 0.1]");
  cfg.target = write("dst.json", "[0.4, 0.3, 0.2, 0.1]");
  cfg.catalyst = write("cat.json", "[0.5, 0.5]");
  const auto ok = call(cfg);
  ASSERT_EQ(ok.code, kExitOk) << ok.out;
  const auto out = state_from_json(ok.json().at("output"));
  EXPECT_LE(oracle::trace_norm_half(out.matrix() - DensityMatrix::diagonal(std::vector<double>{0.4, 0.3, 0.2, 0.1}).matrix()), 1e-10);

  cfg.catalyst = write("weak.json", "[0.6, 0.4]");
  const auto weak = call(cfg);
  EXPECT_EQ(weak.code, kExitInfeasible);
  EXPECT_DOUBLE_EQ(weak.json().at("required_bits").get<double>(), 1.0);

  cfg.catalyst = write("cat.json", "[0.5, 0.5]");
  cfg.target = write("up.json", "[0.5, 0.2, 0.2, 0.1]");
  cfg.input = write("src2.json", "[0.4, 0.3, 0.2, 0.1]");
  EXPECT_EQ(call(cfg).code, kExitInfeasible);
}

TEST_F(Workdir, SweepExamplesAndCsv) {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.d = 3;
  cfg.input = write("spec.json", R"({"d": 3, "spectra": [[0.7730, 0.1135, 0.1135], [0.25, 0.25, 0.25, 0.125, 0.125]]})");
  const auto r = call(cfg);
  ASSERT_EQ(r.code, kExitOk);
  const Json rows = r.json().at("rows");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[0].at("s1").get<double>(), 1.0, 1e-3);
  EXPECT_FALSE(rows[0].at("pst_feasible").get<bool>());
  EXPECT_TRUE(rows[1].at("pst_feasible").get<bool>());
  EXPECT_EQ(rows[1].at("masking_power").get<int>(), 4);

  cfg.format = OutputFormat::csv;
  const auto csv = call(cfg).out;
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "case,label,rank,s0,s1,s2,s_inf,lambda_max,masking_power,pst_power_bits,d,pst_feasible,mask_feasible,dephase_feasible");
  EXPECT_NE(csv.find("0.77300000000000002"), std::string::npos);
}

TEST_F(Workdir, EmptySweepHasHeaderOnly) {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.format = OutputFormat::csv;
  cfg.input = write("empty.json", "{}");
  const auto r = call(cfg);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST_F(Workdir, GinibreSweepRecount) {
  RunConfig cfg;
  cfg.command = Command::sweep;
  cfg.seed = 10;
  cfg.input = write("g.json", R"({"d": 2, "ginibre": {"dim": 4, "count": 100}})");
  const Json rows = call(cfg).json().at("rows");
  ASSERT_EQ(rows.size(), 100u);
  int cli_count = 0;
  int oracle_count = 0;
  for (int k = 0; k < 100; ++k) {
    cli_count += rows[k].at("pst_feasible").get<bool>() ? 1 : 0;
    const auto rho = random_state(RandomKind::ginibre_mixed, {4}, 10 + k);
    oracle_count += oracle::lambda_max(rho.matrix()) <= 0.5 + 1e-9 ? 1 : 0;
  }
  EXPECT_EQ(cli_count, oracle_count);
}

TEST_F(Workdir, OutputIsDeterministic) {
  auto cfg = with_spectrum(Command::verify_pst, {0.25, 0.25, 0.25, 0.125, 0.125}, 3);
  cfg.secrets = 4;
  cfg.seed = 9;
  cfg.output = (dir_ / "a.json").string();
  ASSERT_EQ(call(cfg).code, kExitOk);
  cfg.output = (dir_ / "b.json").string();
  ASSERT_EQ(call(cfg).code, kExitOk);
  EXPECT_EQ(read(dir_ / "a.json"), read(dir_ / "b.json"));
  for (const auto& entry : fs::directory_iterator(dir_)) EXPECT_NE(entry.path().extension(), ".tmp");
}

TEST(CliNames, RoundTrip) {
  for (auto c : {Command::entropy, Command::feasibility, Command::synth_pst, Command::verify_pst, Command::mask,
                 Command::dephase, Command::transit, Command::sweep}) {
    EXPECT_EQ(parse_command(command_name(c)), c);
  }
  EXPECT_FALSE(parse_command("teleport"));
}

TEST(CliBinary, Version) {
  const auto r = shell("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("minent 0.1.0 (format 1)"), std::string::npos) << r.out;
}

TEST(CliBinary, ParseErrorsExitTwo) {
  EXPECT_EQ(shell("entropy --bogus").code, kExitInvalidInput);
  EXPECT_EQ(shell("").code, kExitInvalidInput);
  EXPECT_EQ(shell("entropy --spectrum 0.5,0.5 --tol major=abc").code, kExitInvalidInput);
}

TEST(CliBinary, MatchesLibraryCall) {
  const auto r = shell("entropy --spectrum 0.5,0.25,0.125,0.125 --alpha 2");
  ASSERT_EQ(r.code, 0);
  auto cfg = with_spectrum(Command::entropy, {0.5, 0.25, 0.125, 0.125});
  cfg.alpha = 2.0;
  EXPECT_EQ(r.out, call(cfg).out);
}

TEST(CliBinary, ToleranceEnvironmentAndFlag) {
  // lambda_max = 1/3 + 5e-7
  const std::string args = "feasibility --d 3 --spectrum 0.33333383333333333,0.33333308333333333,0.33333308333333334";
  EXPECT_EQ(shell(args).code, kExitInfeasible);
  EXPECT_EQ(shell(args, "MINENT_TOL=major=1e-6").code, kExitOk);
  EXPECT_EQ(shell(args, "MINENT_TOL=1e-6").code, kExitOk);
  EXPECT_EQ(shell(args + " --tol major=1e-12", "MINENT_TOL=major=1e-6").code, kExitInfeasible);
}

}  // namespace
}  // namespace minent
