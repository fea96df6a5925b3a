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


#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minent/cli.hpp"
#include "minent/errors.hpp"

namespace {

double parse_alpha(const std::string& text) {
  if (text == "inf" || text == "infinity") return minent::kAlphaInf;
  std::size_t used = 0;
  const double a = std::stod(text, &used);
  if (used != text.size()) throw minent::InvalidInput("bad --alpha '" + text + "'");
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-entropy resource toolkit: private state transfer, masking and catalytic dephasing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "minent " + std::string(minent::kVersion) + " (format " +
                                        std::to_string(minent::kFormatVersion) + ")");

  minent::RunConfig cfg;
  std::string alpha = "inf";
  std::string tol_flag;
  std::string format = "json";
  std::vector<double> spectrum;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "input JSON file");
    sub->add_option("--spectrum", spectrum, "inline spectrum")->delimiter(',');
    sub->add_option("-o,--output", cfg.output, "report path (default stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", tol_flag, "tolerance overrides: number or key=value,...");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--d", cfg.d, "dimension parameter");
  };

  auto* entropy = app.add_subcommand("entropy", "Renyi entropy of a state or spectrum");
  common(entropy);
  entropy->add_option("--alpha", alpha, "order (number or inf)");

  auto* feasibility = app.add_subcommand("feasibility", "min-entropy feasibility check");
  common(feasibility);
  feasibility->add_option("--task", cfg.task, "pst, mask or dephase")->check(CLI::IsMember({"pst", "mask", "dephase"}));

  auto* synth = app.add_subcommand("synth-pst", "build a private state transfer protocol");
  common(synth);

  auto* verify = app.add_subcommand("verify-pst", "verify a protocol on random secrets");
  common(verify);
  verify->add_option("--secrets", cfg.secrets, "number of secrets");

  auto* mask = app.add_subcommand("mask", "MOLS masker and diagnostics");
  common(mask);
  mask->add_option("--state", cfg.state, "secret state to mask");

  auto* dephase = app.add_subcommand("dephase", "catalytic dephasing from a precatalyst");
  common(dephase);
  dephase->add_option("--state", cfg.state, "system input (d^2 levels)");

  auto* transit = app.add_subcommand("transit", "catalyst-driven state transition");
  common(transit);
  transit->add_option("--target", cfg.target, "target state")->required();
  transit->add_option("--catalyst", cfg.catalyst, "catalyst state")->required();

  auto* sweep = app.add_subcommand("sweep", "tabulate entropies and feasibility");
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : minent::kExitInvalidInput;
  }

  try {
    const char* env = std::getenv("MINENT_TOL");
    cfg.tol = minent::Tolerances::parse(env ? env : "");
    cfg.tol = minent::Tolerances::parse(tol_flag, cfg.tol);
    cfg.alpha = parse_alpha(alpha);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return minent::kExitInvalidInput;
  }
  cfg.format = format == "csv" ? minent::OutputFormat::csv : minent::OutputFormat::json;
  if (!spectrum.empty()) cfg.spectrum = spectrum;
  cfg.command = *minent::parse_command(app.get_subcommands().front()->get_name());
  return minent::run(cfg, std::cout, std::cerr);
}
