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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minent/entropy.hpp"
#include "minent/serialize.hpp"

namespace minent {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

enum class Command { entropy, feasibility, synth_pst, verify_pst, mask, dephase, transit, sweep };
enum class OutputFormat { json, csv };

enum ExitCode : int { kExitOk = 0, kExitInfeasible = 1, kExitInvalidInput = 2, kExitVerificationFailure = 3 };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::entropy;
  std::string input;  // state, spectrum, pad, catalyst or sweep spec (JSON file)
  std::optional<std::vector<double>> spectrum;  // inline alternative to `input`
  std::string state;     // mask: secret; dephase: system input
  std::string target;    // transit
  std::string catalyst;  // transit
  std::string task = "pst";  // feasibility: pst, mask or dephase
  int d = 2;
  double alpha = kAlphaInf;
  int secrets = 20;
  std::uint64_t seed = 0;
  Tolerances tol;
  OutputFormat format = OutputFormat::json;
  std::string output;  // empty: write to `out`
};

/// Executes one command. The report goes to config.output (atomically) or to
/// `out`; diagnostics go to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Accepts a JSON spectrum array, a density matrix, or a state vector.
DensityMatrix state_from_json(const Json& j, const Tolerances& tol = {});
/// Accepts a Schmidt coefficient array, a two-factor state vector, or a
/// density matrix (purified).
BipartitePureState pad_from_input(const Json& j, const Tolerances& tol = {});

/// One row per case of a sweep spec {"d":..., "spectra":[...],
/// "ginibre":{"dim":..., "count":...}}.
Json sweep_rows(const Json& spec, std::uint64_t seed, const Tolerances& tol = {});
std::string rows_to_csv(const Json& rows);

}  // namespace minent
