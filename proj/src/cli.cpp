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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <CLI11.hpp>

#include "dqc1sim/clifford.hpp"
#include "dqc1sim/correlations.hpp"
#include "dqc1sim/dqc1.hpp"
#include "dqc1sim/errors.hpp"
#include "dqc1sim/tomography.hpp"

namespace dqc1sim::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::map<std::string, SweepOutput>& output_names() {
  static const std::map<std::string, SweepOutput> names = {{"trace", SweepOutput::trace},
                                                           {"discord", SweepOutput::discord},
                                                           {"tangle", SweepOutput::tangle},
                                                           {"tomo", SweepOutput::tomo}};
  return names;
}

const char* to_string(SweepOutput o) {
  switch (o) {
    case SweepOutput::trace: return "trace";
    case SweepOutput::discord: return "discord";
    case SweepOutput::tangle: return "tangle";
    case SweepOutput::tomo: return "tomo";
  }
  return "?";
}

const char* to_string(sampling::SamplingMode m) {
  return m == sampling::SamplingMode::binomial ? "binomial" : "poisson";
}

sampling::SamplingMode parse_mode(const std::string& s) {
  if (s == "binomial") return sampling::SamplingMode::binomial;
  if (s == "poisson") return sampling::SamplingMode::poisson;
  throw std::invalid_argument("unknown sampling mode '" + s + "'");
}

io::Json number_or_null(double v) { return std::isnan(v) ? io::Json(nullptr) : io::Json(v); }

SweepRow compute_row(const SweepConfig& c, int k) {
  SweepRow row;
  row.theta = c.theta_at(k);
  row.alpha = c.alpha;
  row.shots = c.shots;
  row.seed = sampling::derive_seed(c.seed, static_cast<std::uint64_t>(k));
  const dqc1::Unitary u = dqc1::z_theta(row.theta);
  const dqc1::PauliExpectations exact = dqc1::exact_expectations(u, c.alpha);
  row.re_exact = exact.x;
  row.im_exact = exact.y;
  row.re_est = row.im_est = row.trace_re_est = row.trace_im_est = kNaN;
  if (c.shots > 0) {
    const sampling::TraceEstimate est = sampling::estimate_trace(u, c.alpha, c.shots, row.seed, c.mode);
    row.re_est = est.x_raw;
    row.im_est = est.y_raw;
    row.trace_re_est = est.trace.real();
    row.trace_im_est = est.trace.imag();
  }
  const bool need_state = c.wants(SweepOutput::discord) || c.wants(SweepOutput::tangle) ||
                          c.wants(SweepOutput::tomo);
  if (!need_state) return row;
  const qmath::DensityMatrix rho = dqc1::output_state(u, c.alpha);
  if (c.wants(SweepOutput::discord)) {
    const correlations::CorrelationReport report = correlations::analyze(rho);
    row.discord_rc = report.discord_rc;
    row.discord_cr = report.discord_cr;
  }
  if (c.wants(SweepOutput::tangle)) row.tangle = correlations::tangle(rho);
  if (c.wants(SweepOutput::tomo)) {
    const tomography::TomographyRun run =
        tomography::simulate_counts(rho, c.mean_counts, sampling::derive_seed(row.seed, 1));
    const qmath::DensityMatrix recon = tomography::reconstruct(run);
    row.tomo_discord_rc = correlations::discord(recon, correlations::MeasuredSide::control);
    row.tomo_tangle = correlations::tangle(recon);
  }
  return row;
}

// ---------------------------------------------------------------------------
// Command plumbing

struct GlobalOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  std::string format = "auto";
};

struct StateSource {
  std::string state_file;
  std::string unitary_file;
  std::optional<double> theta;
  double alpha = 1.0;
};

struct ResolvedState {
  qmath::DensityMatrix rho;
  io::Json config;
};

std::string resolve_format(const GlobalOptions& g, const char* fallback) {
  return g.format == "auto" ? fallback : g.format;
}

void emit(const GlobalOptions& g, std::ostream& out, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    out << text;
  } else {
    io::write_text_file(g.out, text);
  }
}

std::string json_text(const io::Json& j) { return j.dump(2) + "\n"; }

std::string scalar_csv(const io::Json& config,
                       const std::vector<std::pair<std::string, std::string>>& fields) {
  std::ostringstream os;
  os << "# " << config.dump() << "\n";
  for (std::size_t k = 0; k < fields.size(); ++k) os << (k ? "," : "") << fields[k].first;
  os << "\n";
  for (std::size_t k = 0; k < fields.size(); ++k) os << (k ? "," : "") << fields[k].second;
  os << "\n";
  return os.str();
}

ResolvedState resolve_state(const StateSource& s) {
  const int given = static_cast<int>(!s.state_file.empty()) +
                    static_cast<int>(!s.unitary_file.empty()) +
                    static_cast<int>(s.theta.has_value());
  if (given != 1) {
    throw std::invalid_argument("give exactly one of --state, --unitary, --theta");
  }
  io::Json cfg;
  if (!s.state_file.empty()) {
    const io::Json j = io::read_json_file(s.state_file);
    cfg["state_file"] = s.state_file;
    cfg["state"] = j;
    return {io::state_from_json(j), cfg};
  }
  dqc1::check_alpha(s.alpha);
  cfg["alpha"] = s.alpha;
  if (!s.unitary_file.empty()) {
    const io::Json j = io::read_json_file(s.unitary_file);
    cfg["unitary_file"] = s.unitary_file;
    cfg["unitary"] = j;
    return {dqc1::output_state(io::unitary_from_json(j), s.alpha), cfg};
  }
  cfg["theta"] = *s.theta;
  return {dqc1::output_state(dqc1::z_theta(*s.theta), s.alpha), cfg};
}

void add_state_options(CLI::App* cmd, StateSource& s) {
  cmd->add_option("--state", s.state_file, "Density matrix JSON file");
  cmd->add_option("--unitary", s.unitary_file, "Register unitary JSON; analyses the DQC1 output");
  cmd->add_option("--theta", s.theta, "Analyse the DQC1 output for U = Z_theta");
  cmd->add_option("--alpha", s.alpha, "Control polarisation")->capture_default_str();
}

io::Json base_config(const char* command, const GlobalOptions& g) {
  io::Json cfg;
  cfg["command"] = command;
  cfg["seed"] = g.seed;
  return cfg;
}

void merge(io::Json& into, const io::Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  if (dynamic_cast<const EstimationError*>(&e)) return "EstimationError";
  if (dynamic_cast<const ReconstructionError*>(&e)) return "ReconstructionError";
  if (dynamic_cast<const UnsupportedError*>(&e)) return "UnsupportedError";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "ValidationError";
  return "Error";
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  io::Json j;
  j["error"] = {{"type", kind}, {"message", message}};
  err << j.dump() << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

struct SweepArgs {
  SweepConfig config;
  std::vector<std::string> outputs = {"trace"};
  std::string mode = "binomial";
};

void cmd_sweep(const GlobalOptions& g, SweepArgs& a, std::ostream& out) {
  SweepConfig& c = a.config;
  c.seed = g.seed;
  c.mode = parse_mode(a.mode);
  c.outputs.clear();
  for (const std::string& name : a.outputs) {
    const auto it = output_names().find(name);
    if (it == output_names().end()) throw std::invalid_argument("unknown output '" + name + "'");
    if (!c.wants(it->second)) c.outputs.push_back(it->second);
  }
  c.validate();
  const std::vector<SweepRow> rows = compute_sweep(c, g.jobs);
  const std::string format = resolve_format(g, "csv");
  emit(g, out, format == "csv" ? sweep_csv(c, rows) : json_text(sweep_json(c, rows)));
}

struct TraceArgs {
  std::string unitary_file;
  std::optional<double> theta;
  double alpha = 1.0;
  double epsilon = 0.1;
  double p_error = 0.05;
  std::string mode = "binomial";
};

void cmd_trace(const GlobalOptions& g, const TraceArgs& a, std::ostream& out) {
  io::Json cfg = base_config("trace", g);
  if (a.unitary_file.empty() == !a.theta.has_value()) {
    throw std::invalid_argument("give exactly one of --unitary, --theta");
  }
  std::optional<dqc1::Unitary> u;
  if (!a.unitary_file.empty()) {
    const io::Json j = io::read_json_file(a.unitary_file);
    cfg["unitary_file"] = a.unitary_file;
    cfg["unitary"] = j;
    u.emplace(io::unitary_from_json(j));
  } else {
    cfg["theta"] = *a.theta;
    u.emplace(dqc1::z_theta(*a.theta));
  }
  cfg["alpha"] = a.alpha;
  cfg["epsilon"] = a.epsilon;
  cfg["p_error"] = a.p_error;
  cfg["mode"] = a.mode;
  const sampling::SamplingMode mode = parse_mode(a.mode);
  dqc1::check_alpha(a.alpha);
  const sampling::ShotPlan plan = sampling::plan_shots(a.epsilon, a.p_error, a.alpha);
  const sampling::TraceEstimate est = sampling::estimate_trace(*u, a.alpha, plan.shots, g.seed, mode);
  const Complex exact = dqc1::normalized_trace(*u);
  const double abs_error = std::abs(est.trace - exact);

  if (resolve_format(g, "json") == "csv") {
    emit(g, out,
         scalar_csv(cfg, {{"shots_used", std::to_string(plan.shots)},
                          {"estimate_re", io::format_double(est.trace.real())},
                          {"estimate_im", io::format_double(est.trace.imag())},
                          {"exact_re", io::format_double(exact.real())},
                          {"exact_im", io::format_double(exact.imag())},
                          {"abs_error", io::format_double(abs_error)},
                          {"x_raw", io::format_double(est.x_raw)},
                          {"y_raw", io::format_double(est.y_raw)}}));
    return;
  }
  io::Json j;
  j["config"] = cfg;
  j["shots_used"] = plan.shots;
  j["estimate_re"] = est.trace.real();
  j["estimate_im"] = est.trace.imag();
  j["exact_re"] = exact.real();
  j["exact_im"] = exact.imag();
  j["abs_error"] = abs_error;
  j["x_raw"] = est.x_raw;
  j["y_raw"] = est.y_raw;
  emit(g, out, json_text(j));
}

void cmd_discord(const GlobalOptions& g, const StateSource& s, std::ostream& out) {
  io::Json cfg = base_config("discord", g);
  ResolvedState st = resolve_state(s);
  merge(cfg, st.config);
  const correlations::CorrelationReport r = correlations::analyze(st.rho);
  if (resolve_format(g, "json") == "csv") {
    emit(g, out,
         scalar_csv(cfg, {{"mutual_info", io::format_double(r.mutual_info)},
                          {"discord_rc", io::format_double(r.discord_rc)},
                          {"discord_cr", io::format_double(r.discord_cr)},
                          {"tangle", io::format_double(r.tangle.value_or(kNaN))}}));
    return;
  }
  io::Json j;
  j["config"] = cfg;
  j["report"] = io::report_to_json(r);
  emit(g, out, json_text(j));
}

void cmd_tangle(const GlobalOptions& g, const StateSource& s, std::ostream& out) {
  io::Json cfg = base_config("tangle", g);
  ResolvedState st = resolve_state(s);
  merge(cfg, st.config);
  const double c = correlations::concurrence(st.rho);
  if (resolve_format(g, "json") == "csv") {
    emit(g, out,
         scalar_csv(cfg, {{"concurrence", io::format_double(c)},
                          {"tangle", io::format_double(c * c)}}));
    return;
  }
  io::Json j;
  j["config"] = cfg;
  j["concurrence"] = c;
  j["tangle"] = c * c;
  emit(g, out, json_text(j));
}

struct TomoArgs {
  StateSource source;
  std::string counts_file;
  double mean_counts = 1e4;
  std::string settings = "all";
};

void cmd_tomo(const GlobalOptions& g, const TomoArgs& a, std::ostream& out) {
  if (resolve_format(g, "json") != "json") {
    throw UnsupportedError("tomo writes JSON only");
  }
  io::Json cfg = base_config("tomo", g);
  tomography::TomographyRun run;
  std::optional<qmath::DensityMatrix> truth;
  if (!a.counts_file.empty()) {
    const io::Json j = io::read_json_file(a.counts_file);
    cfg["counts_file"] = a.counts_file;
    run = io::run_from_json(j);
  } else {
    ResolvedState st = resolve_state(a.source);
    merge(cfg, st.config);
    if (a.settings != "all" && a.settings != "minimal") {
      throw std::invalid_argument("--settings must be 'all' or 'minimal'");
    }
    cfg["mean_counts"] = a.mean_counts;
    cfg["settings"] = a.settings;
    run = tomography::simulate_counts(st.rho, a.mean_counts, g.seed,
                                      a.settings == "all" ? tomography::all_settings()
                                                          : tomography::minimal_settings());
    truth = std::move(st.rho);
  }
  const qmath::DensityMatrix recon = run.settings.size() == 36 ? tomography::reconstruct(run)
                                                               : tomography::reconstruct_subset(run);
  io::Json j;
  j["config"] = cfg;
  j["run"] = io::run_to_json(run);
  j["reconstructed"] = io::state_to_json(recon);
  j["correlations"] = io::report_to_json(correlations::analyze(recon));
  if (truth) {
    j["fidelity"] = qmath::fidelity(*truth, recon);
    j["trace_distance"] = qmath::trace_distance(*truth, recon);
  }
  emit(g, out, json_text(j));
}

struct VerifyArgs {
  std::string circuit_file;
  std::optional<int> random_qubits;
  int gates = 20;
};

bool cmd_verify_clifford(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out,
                         std::ostream& err) {
  if (resolve_format(g, "json") != "json") {
    throw UnsupportedError("verify-clifford writes JSON only");
  }
  if (a.circuit_file.empty() == !a.random_qubits.has_value()) {
    throw std::invalid_argument("give exactly one of --circuit, --random-qubits");
  }
  io::Json cfg = base_config("verify-clifford", g);
  std::optional<clifford::CliffordCircuit> circuit;
  if (!a.circuit_file.empty()) {
    cfg["circuit_file"] = a.circuit_file;
    circuit.emplace(io::circuit_from_json(io::read_json_file(a.circuit_file)));
  } else {
    if (*a.random_qubits < 1 || a.gates < 0) {
      throw std::invalid_argument("--random-qubits must be >= 1 and --gates >= 0");
    }
    sampling::Rng rng = sampling::make_rng(g.seed);
    circuit.emplace(clifford::random_circuit(*a.random_qubits, a.gates, rng));
  }
  cfg["circuit"] = io::circuit_to_json(*circuit);
  const clifford::ZeroDiscordReport report = clifford::verify_zero_discord(*circuit);
  io::Json j;
  j["config"] = cfg;
  j["report"] = io::zero_discord_to_json(report);
  emit(g, out, json_text(j));
  if (!report.verified) {
    report_error(err, "VerificationError", "zero-discord verification failed");
  }
  return report.verified;
}

}  // namespace

// ---------------------------------------------------------------------------

void SweepConfig::validate() const {
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (!(theta_min < theta_max)) throw std::invalid_argument("theta_min must be < theta_max");
  dqc1::check_alpha(alpha);
  if (shots < 0) throw std::invalid_argument("shots must be >= 0");
  if (outputs.empty()) throw std::invalid_argument("no outputs requested");
  if (wants(SweepOutput::tomo) && !(mean_counts > 0.0)) {
    throw std::invalid_argument("mean_counts must be positive");
  }
}

bool SweepConfig::wants(SweepOutput o) const {
  return std::find(outputs.begin(), outputs.end(), o) != outputs.end();
}

double SweepConfig::theta_at(int index) const {
  if (index == steps - 1) return theta_max;
  return theta_min + (theta_max - theta_min) * index / (steps - 1);
}

io::Json SweepConfig::to_json() const {
  io::Json j;
  j["command"] = "sweep";
  j["theta_min"] = theta_min;
  j["theta_max"] = theta_max;
  j["steps"] = steps;
  j["alpha"] = alpha;
  j["shots"] = shots;
  j["seed"] = seed;
  io::Json outs = io::Json::array();
  for (SweepOutput o : outputs) outs.push_back(to_string(o));
  j["outputs"] = std::move(outs);
  j["mode"] = to_string(mode);
  if (wants(SweepOutput::tomo)) j["mean_counts"] = mean_counts;
  return j;
}

std::vector<SweepRow> compute_sweep(const SweepConfig& config, int jobs) {
  config.validate();
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  const int n = config.steps;
  std::vector<SweepRow> rows(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int k = next++; k < n; k = next++) {
      try {
        rows[static_cast<std::size_t>(k)] = compute_row(config, k);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min(jobs, n); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string sweep_csv(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  const bool discord = config.wants(SweepOutput::discord);
  const bool tangle = config.wants(SweepOutput::tangle);
  const bool tomo = config.wants(SweepOutput::tomo);
  std::ostringstream os;
  os << "# " << config.to_json().dump() << "\n";
  os << "theta,alpha,re_exact,im_exact,re_est,im_est,shots,seed,trace_re_est,trace_im_est";
  if (discord) os << ",discord_rc,discord_cr";
  if (tangle) os << ",tangle";
  if (tomo) os << ",tomo_discord_rc,tomo_tangle";
  os << "\n";
  using io::format_double;
  for (const SweepRow& r : rows) {
    os << format_double(r.theta) << ',' << format_double(r.alpha) << ','
       << format_double(r.re_exact) << ',' << format_double(r.im_exact) << ','
       << format_double(r.re_est) << ',' << format_double(r.im_est) << ',' << r.shots << ','
       << r.seed << ',' << format_double(r.trace_re_est) << ',' << format_double(r.trace_im_est);
    if (discord) os << ',' << format_double(r.discord_rc) << ',' << format_double(r.discord_cr);
    if (tangle) os << ',' << format_double(r.tangle);
    if (tomo) os << ',' << format_double(r.tomo_discord_rc) << ',' << format_double(r.tomo_tangle);
    os << "\n";
  }
  return os.str();
}

io::Json sweep_json(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  io::Json list = io::Json::array();
  for (const SweepRow& r : rows) {
    io::Json e;
    e["theta"] = r.theta;
    e["alpha"] = r.alpha;
    e["re_exact"] = r.re_exact;
    e["im_exact"] = r.im_exact;
    e["re_est"] = number_or_null(r.re_est);
    e["im_est"] = number_or_null(r.im_est);
    e["shots"] = r.shots;
    e["seed"] = r.seed;
    e["trace_re_est"] = number_or_null(r.trace_re_est);
    e["trace_im_est"] = number_or_null(r.trace_im_est);
    if (config.wants(SweepOutput::discord)) {
      e["discord_rc"] = r.discord_rc;
      e["discord_cr"] = r.discord_cr;
    }
    if (config.wants(SweepOutput::tangle)) e["tangle"] = r.tangle;
    if (config.wants(SweepOutput::tomo)) {
      e["tomo_discord_rc"] = r.tomo_discord_rc;
      e["tomo_tangle"] = r.tomo_tangle;
    }
    list.push_back(std::move(e));
  }
  io::Json j;
  j["config"] = config.to_json();
  j["rows"] = std::move(list);
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DQC1 trace estimation and correlation toolkit", "dqc1sim"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Master RNG seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"auto", "csv", "json"}))
      ->capture_default_str();

  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Theta sweep over U = Z_theta");
  sweep_cmd->add_option("--theta-min", sweep.config.theta_min)->capture_default_str();
  sweep_cmd->add_option("--theta-max", sweep.config.theta_max)->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.config.steps)->capture_default_str();
  sweep_cmd->add_option("--alpha", sweep.config.alpha)->capture_default_str();
  sweep_cmd->add_option("--shots", sweep.config.shots, "Shots per quadrature, 0 = exact")
      ->capture_default_str();
  sweep_cmd->add_option("--outputs", sweep.outputs, "Any of trace,discord,tangle,tomo")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--mode", sweep.mode, "binomial or poisson")->capture_default_str();
  sweep_cmd->add_option("--mean-counts", sweep.config.mean_counts)->capture_default_str();

  TraceArgs trace;
  CLI::App* trace_cmd = app.add_subcommand("trace", "Estimate Tr(U)/N with a Hoeffding shot budget");
  trace_cmd->add_option("--unitary", trace.unitary_file, "Unitary JSON file");
  trace_cmd->add_option("--theta", trace.theta, "Use U = Z_theta");
  trace_cmd->add_option("--alpha", trace.alpha)->capture_default_str();
  trace_cmd->add_option("--epsilon", trace.epsilon)->capture_default_str();
  trace_cmd->add_option("--p-error", trace.p_error)->capture_default_str();
  trace_cmd->add_option("--mode", trace.mode)->capture_default_str();

  StateSource discord_src;
  CLI::App* discord_cmd = app.add_subcommand("discord", "Mutual information and discord");
  add_state_options(discord_cmd, discord_src);

  StateSource tangle_src;
  CLI::App* tangle_cmd = app.add_subcommand("tangle", "Concurrence and tangle");
  add_state_options(tangle_cmd, tangle_src);

  TomoArgs tomo;
  CLI::App* tomo_cmd = app.add_subcommand("tomo", "Simulate and reconstruct two-qubit tomography");
  add_state_options(tomo_cmd, tomo.source);
  tomo_cmd->add_option("--counts", tomo.counts_file, "Reconstruct a recorded TomographyRun JSON");
  tomo_cmd->add_option("--mean-counts", tomo.mean_counts)->capture_default_str();
  tomo_cmd->add_option("--settings", tomo.settings, "all or minimal")->capture_default_str();

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-clifford", "Check that a Clifford DQC1 circuit has zero discord");
  verify_cmd->add_option("--circuit", verify.circuit_file, "Circuit JSON file");
  verify_cmd->add_option("--random-qubits", verify.random_qubits, "Seeded random circuit size");
  verify_cmd->add_option("--gates", verify.gates, "Gates in the random circuit")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    if (sweep_cmd->parsed()) {
      cmd_sweep(g, sweep, out);
    } else if (trace_cmd->parsed()) {
      cmd_trace(g, trace, out);
    } else if (discord_cmd->parsed()) {
      cmd_discord(g, discord_src, out);
    } else if (tangle_cmd->parsed()) {
      cmd_tangle(g, tangle_src, out);
    } else if (tomo_cmd->parsed()) {
      cmd_tomo(g, tomo, out);
    } else if (verify_cmd->parsed()) {
      if (!cmd_verify_clifford(g, verify, out, err)) return 1;
    }
  } catch (const std::exception& e) {
    report_error(err, error_kind(e), e.what());
    return 1;
  }
  return 0;
}

}  // namespace dqc1sim::cli
