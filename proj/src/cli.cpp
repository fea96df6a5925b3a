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


#include "minent/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "minent/dephasing.hpp"
#include "minent/errors.hpp"
#include "minent/masking.hpp"
#include "minent/pst.hpp"
#include "minent/transition.hpp"

namespace minent {

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::entropy, "entropy"},     {Command::feasibility, "feasibility"}, {Command::synth_pst, "synth-pst"},
    {Command::verify_pst, "verify-pst"}, {Command::mask, "mask"},           {Command::dephase, "dephase"},
    {Command::transit, "transit"},     {Command::sweep, "sweep"}};

std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_cell(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

Json alpha_json(double alpha) {
  if (std::isinf(alpha)) return "inf";
  return alpha;
}

std::string lambda_message(double lambda_max, int d) {
  std::ostringstream msg;
  msg << std::fixed << std::setprecision(3) << "lambda_max = " << lambda_max << (lambda_max > 1.0 / d ? " > " : " <= ")
      << "1/" << d;
  return msg.str();
}

DensityMatrix load_state(const std::string& path, const Tolerances& tol) {
  if (path.empty()) throw InvalidInput("missing state input file");
  return state_from_json(read_json_file(path), tol);
}

DensityMatrix primary_state(const RunConfig& cfg) {
  if (cfg.spectrum) return state_from_json(Json(*cfg.spectrum), cfg.tol);
  return load_state(cfg.input, cfg.tol);
}

Json primary_json(const RunConfig& cfg) {
  if (cfg.spectrum) return Json(*cfg.spectrum);
  if (cfg.input.empty()) throw InvalidInput("missing --input");
  return read_json_file(cfg.input);
}

struct Outcome {
  Outcome() = default;
  Outcome(Json r, int c = kExitOk, std::string table = {}) : report(std::move(r)), code(c), csv(std::move(table)) {}
  Json report;
  int code = kExitOk;
  std::string csv;  // set when the command has a native table
};

Outcome cmd_entropy(const RunConfig& cfg) {
  const DensityMatrix rho = primary_state(cfg);
  return {Json{{"alpha", alpha_json(cfg.alpha)}, {"bits", renyi_entropy(rho, cfg.alpha, cfg.tol)}}};
}

Outcome cmd_feasibility(const RunConfig& cfg) {
  if (cfg.d <= 0) throw InvalidInput("--d must be positive");
  const Spectrum s = primary_state(cfg).spectrum(cfg.tol);
  const double lmax = s.max();
  const int power = masking_power(s, cfg.tol);
  bool feasible = false;
  if (cfg.task == "pst" || cfg.task == "dephase") {
    feasible = lmax <= 1.0 / cfg.d + cfg.tol.major;
  } else if (cfg.task == "mask") {
    feasible = power >= cfg.d;
  } else {
    throw InvalidInput("unknown feasibility task '" + cfg.task + "' (expected pst, mask or dephase)");
  }
  Json report{{"task", cfg.task},
              {"d", cfg.d},
              {"feasible", feasible},
              {"lambda_max", lmax},
              {"min_entropy_bits", min_entropy(s)},
              {"required_bits", std::log2(static_cast<double>(cfg.d))},
              {"masking_power", power},
              {"message", lambda_message(lmax, cfg.d)}};
  if (cfg.task == "dephase") report["system_dim"] = cfg.d * cfg.d;
  return {std::move(report), feasible ? kExitOk : kExitInfeasible};
}

Outcome cmd_synth_pst(const RunConfig& cfg) {
  const BipartitePureState pad = pad_from_input(primary_json(cfg), cfg.tol);
  const PstProtocol proto = plan_pst(pad, cfg.d, cfg.tol);
  const VerificationReport inst = verify_instrument(proto.instrument, pad, cfg.tol);
  Json report = proto.to_json();
  report["verification"] = inst.to_json();
  return {std::move(report), inst.pass() ? kExitOk : kExitVerificationFailure};
}

Outcome cmd_verify_pst(const RunConfig& cfg) {
  const Json in = primary_json(cfg);
  const PstProtocol proto = in.is_object() && in.contains("pad") ? pst_from_json(in, cfg.tol)
                                                                  : plan_pst(pad_from_input(in, cfg.tol), cfg.d, cfg.tol);
  const PstReport r = verify_pst(proto, cfg.secrets, cfg.seed, cfg.tol);
  Json report = r.to_json();
  report["d"] = proto.d;
  report["register_dim"] = proto.register_dim();
  report["secrets"] = cfg.secrets;
  report["seed"] = cfg.seed;
  return {std::move(report), r.pass() ? kExitOk : kExitVerificationFailure};
}

Outcome cmd_mask(const RunConfig& cfg) {
  const MaskingScheme scheme = build_masking_scheme(cfg.d);
  const MaskingDiagnostics diag = masking_diagnostics(scheme);
  Json report{{"d", cfg.d}, {"mols", scheme.mols.to_json()}, {"diagnostics", diag.to_json()}};
  bool pass = diag.report.pass();
  if (!cfg.state.empty()) {
    const DensityMatrix psi = load_state(cfg.state, cfg.tol);
    const DensityMatrix masked = mask_state(scheme, psi);
    const Matrix uniform = Matrix::Identity(cfg.d, cfg.d) / static_cast<double>(cfg.d);
    const double dev = std::max(max_abs_diff(partial_trace(masked, {0}).matrix(), uniform),
                                max_abs_diff(partial_trace(masked, {1}).matrix(), uniform));
    const double fid = fidelity(partial_trace(decode_canonical(scheme, psi), {0}), psi);
    report["masked"] = to_json(masked);
    report["marginal_deviation"] = dev;
    report["decoder_fidelity"] = fid;
    pass = pass && dev <= cfg.tol.eq && fid >= 1.0 - 1e-10;
  }
  return {std::move(report), pass ? kExitOk : kExitVerificationFailure};
}

Outcome cmd_dephase(const RunConfig& cfg) {
  const DensityMatrix sigma = primary_state(cfg);
  const DephasingPlan plan = plan_catalytic_dephasing(sigma, cfg.d, cfg.tol);
  const DensityMatrix rho = cfg.state.empty()
                                ? random_state(RandomKind::ginibre_mixed, {plan.system_dim()}, cfg.seed)
                                : load_state(cfg.state, cfg.tol);
  const VerificationReport plan_report = verify_plan(plan, cfg.tol);
  const DephasingRun run = run_dephasing(plan, rho);
  const VerificationReport run_report = verify_run(plan, rho, run, cfg.tol);
  const MinEntropyCheck mec = check_min_entropy_nondecrease(plan, cfg.tol);
  const CatalystRecovery rec = recover_catalyst(plan);
  const double rec_dev = trace_distance(rec.catalyst, sigma);
  const CollapseResult collapse = collapse_to_standard(plan, run.joint, std::nullopt, cfg.tol);

  Json leftover = Json::array();
  for (int i = 0; i < plan.register_dim(); ++i) leftover.push_back(plan.leftover.matrix()(i, i).real());
  Json report{{"d", cfg.d},
              {"system_dim", plan.system_dim()},
              {"register_dim", plan.register_dim()},
              {"leftover_weights", std::move(leftover)},
              {"plan", plan_report.to_json()},
              {"run", run_report.to_json()},
              {"min_entropy", mec.to_json()},
              {"catalyst_recovery_distance", rec_dev},
              {"collapse", collapse.to_json()},
              {"system_out", to_json(run.system_out)},
              {"dephase_unitary", matrix_to_json(plan.dephase_unitary, {plan.system_dim(), cfg.d})}};
  const bool pass = plan_report.pass() && run_report.pass() && mec.report.pass() && rec_dev <= cfg.tol.eq &&
                    collapse.report.pass();
  return {std::move(report), pass ? kExitOk : kExitVerificationFailure};
}

Outcome cmd_transit(const RunConfig& cfg) {
  const DensityMatrix source = primary_state(cfg);
  const DensityMatrix target = load_state(cfg.target, cfg.tol);
  const DensityMatrix sigma = load_state(cfg.catalyst, cfg.tol);
  const TransitionPlan plan = plan_transition(source, target, sigma, cfg.tol);
  const VerificationReport checks = verify_transition(plan, cfg.tol);
  const TransitionRun run = execute(plan);
  const MinEntropyCheck mec = check_min_entropy_nondecrease(plan.dephasing, cfg.tol);
  Json report{{"dim", plan.dim()},
              {"requirement", plan.requirement.to_json()},
              {"verification", checks.to_json()},
              {"min_entropy", mec.to_json()},
              {"output", to_json(run.output)},
              {"u1", matrix_to_json(plan.u1)},
              {"u2", matrix_to_json(plan.u2)}};
  return {std::move(report), checks.pass() && mec.report.pass() ? kExitOk : kExitVerificationFailure};
}

Outcome cmd_sweep(const RunConfig& cfg) {
  const Json spec = cfg.input.empty() ? Json::object() : read_json_file(cfg.input);
  Json rows = sweep_rows(spec, cfg.seed, cfg.tol);
  std::string csv = rows_to_csv(rows);
  return {Json{{"rows", std::move(rows)}}, kExitOk, std::move(csv)};
}

Outcome dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::entropy: return cmd_entropy(cfg);
    case Command::feasibility: return cmd_feasibility(cfg);
    case Command::synth_pst: return cmd_synth_pst(cfg);
    case Command::verify_pst: return cmd_verify_pst(cfg);
    case Command::mask: return cmd_mask(cfg);
    case Command::dephase: return cmd_dephase(cfg);
    case Command::transit: return cmd_transit(cfg);
    case Command::sweep: return cmd_sweep(cfg);
  }
  throw InvalidInput("unknown command");
}

std::string flat_csv(const Json& report) {
  std::string out = "key,value\n";
  for (const auto& [key, value] : report.items()) {
    if (value.is_structured()) continue;
    out += key + "," + csv_cell(value) + "\n";
  }
  return out;
}

void emit(const RunConfig& cfg, const Outcome& o, std::ostream& out) {
  std::string content;
  if (cfg.format == OutputFormat::csv) {
    content = o.csv.empty() && cfg.command != Command::sweep ? flat_csv(o.report) : o.csv;
  } else {
    content = o.report.dump(2) + "\n";
  }
  if (cfg.output.empty()) {
    out << content;
  } else {
    write_file_atomic(cfg.output, content);
  }
}

Outcome failure(std::string_view status, const std::exception& e, int code) {
  return {Json{{"status", status}, {"error", e.what()}}, code};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [cmd, n] : kCommands) {
    if (cmd == c) return n;
  }
  return "unknown";
}

DensityMatrix state_from_json(const Json& j, const Tolerances& tol) {
  if (j.is_array()) {
    const std::vector<double> p = j.get<std::vector<double>>();
    if (p.empty()) throw InvalidInput("empty spectrum");
    Matrix m = Matrix::Zero(static_cast<long>(p.size()), static_cast<long>(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k) m(static_cast<long>(k), static_cast<long>(k)) = p[k];
    return DensityMatrix(std::move(m), {static_cast<int>(p.size())}, tol);
  }
  if (j.is_object() && j.contains("re")) return density_from_json(j, tol);
  if (j.is_object() && j.contains("amp_re")) {
    std::vector<int> dims;
    const Vector v = vector_from_json(j, &dims);
    if (std::abs(v.norm() - 1.0) > tol.tr) throw InvalidInput("state vector is not normalized");
    return DensityMatrix::pure(v, dims);
  }
  throw InvalidInput("expected a spectrum array, a density matrix or a state vector");
}

BipartitePureState pad_from_input(const Json& j, const Tolerances& tol) {
  if (j.is_array()) {
    const Spectrum s(j.get<std::vector<double>>(), tol);
    const int n = static_cast<int>(s.size());
    return BipartitePureState::from_schmidt(s.values(), n, n, tol);
  }
  if (j.is_object() && j.contains("amp_re")) return pad_from_json(j, tol);
  if (j.is_object() && j.contains("re")) return purify(density_from_json(j, tol), tol);
  throw InvalidInput("expected Schmidt coefficients, a two-factor state vector or a density matrix");
}

Json sweep_rows(const Json& spec, std::uint64_t seed, const Tolerances& tol) {
  if (!spec.is_object()) throw InvalidInput("sweep spec must be a JSON object");
  const int d = spec.value("d", 2);
  if (d <= 0) throw InvalidInput("sweep spec: d must be positive");
  Json rows = Json::array();
  int index = 0;
  const auto add_row = [&](const std::string& label, const Spectrum& s) {
    const int power = masking_power(s, tol);
    const bool below = s.max() <= 1.0 / d + tol.major;
    rows.push_back(Json{{"case", index++},
                        {"label", label},
                        {"rank", s.rank()},
                        {"s0", renyi_entropy(s, 0.0)},
                        {"s1", renyi_entropy(s, 1.0)},
                        {"s2", renyi_entropy(s, 2.0)},
                        {"s_inf", renyi_entropy(s, kAlphaInf)},
                        {"lambda_max", s.max()},
                        {"masking_power", power},
                        {"pst_power_bits", std::log2(static_cast<double>(power))},
                        {"d", d},
                        {"pst_feasible", below},
                        {"mask_feasible", power >= d},
                        {"dephase_feasible", below}});
  };
  if (spec.contains("spectra")) {
    const Json& list = spec.at("spectra");
    if (!list.is_array()) throw InvalidInput("sweep spec: \"spectra\" must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      add_row("spectrum[" + std::to_string(k) + "]", Spectrum(list[k].get<std::vector<double>>(), tol));
    }
  }
  if (spec.contains("ginibre")) {
    const Json& g = spec.at("ginibre");
    const int dim = g.at("dim").get<int>();
    const int count = g.at("count").get<int>();
    if (dim <= 0 || count < 0) throw InvalidInput("sweep spec: ginibre needs dim > 0 and count >= 0");
    for (int k = 0; k < count; ++k) {
      const DensityMatrix rho = random_state(RandomKind::ginibre_mixed, {dim}, seed + static_cast<std::uint64_t>(k));
      add_row("ginibre[" + std::to_string(k) + "]", rho.spectrum(tol));
    }
  }
  return rows;
}

std::string rows_to_csv(const Json& rows) {
  static constexpr std::string_view kColumns[] = {
      "case", "label", "rank", "s0", "s1", "s2", "s_inf", "lambda_max", "masking_power",
      "pst_power_bits", "d", "pst_feasible", "mask_feasible", "dephase_feasible"};
  std::string out;
  for (std::size_t c = 0; c < std::size(kColumns); ++c) {
    out += (c ? "," : "") + std::string(kColumns[c]);
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < std::size(kColumns); ++c) {
      out += (c ? "," : "") + csv_cell(row.at(std::string(kColumns[c])));
    }
    out += "\n";
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    o = dispatch(config);
  } catch (const InsufficientCatalyst& e) {
    o = failure("infeasible", e, kExitInfeasible);
    o.report["required_bits"] = e.required_bits();
  } catch (const Infeasible& e) {
    o = failure("infeasible", e, kExitInfeasible);
  } catch (const UnsupportedOrder& e) {
    o = failure("unsupported_order", e, kExitInvalidInput);
    o.report["suggested_order"] = e.suggested_order();
    o.report["overhead_bits"] = e.overhead_bits();
  } catch (const InvalidInput& e) {
    o = failure("invalid_input", e, kExitInvalidInput);
  } catch (const Json::exception& e) {
    o = failure("invalid_input", e, kExitInvalidInput);
  } catch (const std::logic_error& e) {
    o = failure("verification_failure", e, kExitVerificationFailure);
  } catch (const Error& e) {
    o = failure("error", e, kExitInvalidInput);
  }
  if (o.code != kExitOk && o.report.contains("error")) err << "error: " << o.report["error"].get<std::string>() << "\n";
  if (o.code == kExitInfeasible && o.report.contains("message")) err << o.report["message"].get<std::string>() << "\n";
  try {
    emit(config, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return o.code;
}

}  // namespace minent
