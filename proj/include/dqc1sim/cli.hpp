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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dqc1sim/io.hpp"
#include "dqc1sim/sampling.hpp"

namespace dqc1sim::cli {

enum class SweepOutput { trace, discord, tangle, tomo };

struct SweepConfig {
  double theta_min = -3.141592653589793;
  double theta_max = 3.141592653589793;
  int steps = 41;
  double alpha = 1.0;
  /// 0 selects exact mode.
  std::int64_t shots = 0;
  std::uint64_t seed = 1;
  std::vector<SweepOutput> outputs = {SweepOutput::trace};
  sampling::SamplingMode mode = sampling::SamplingMode::binomial;
  /// Mean counts per setting for the tomography columns.
  double mean_counts = 1e4;

  /// Throws std::invalid_argument on steps < 2, theta_min >= theta_max,
  /// alpha outside [0, 1], negative shots or an empty output set.
  void validate() const;
  bool wants(SweepOutput o) const;
  double theta_at(int index) const;
  io::Json to_json() const;
};

struct SweepRow {
  double theta = 0.0;
  double alpha = 0.0;
  /// alpha * Tr(U)/N, the control's <X> and <Y>.
  double re_exact = 0.0;
  double im_exact = 0.0;
  /// Shot estimates on the same scale; NaN in exact mode.
  double re_est = 0.0;
  double im_est = 0.0;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  /// Estimates divided by alpha.
  double trace_re_est = 0.0;
  double trace_im_est = 0.0;
  double discord_rc = 0.0;
  double discord_cr = 0.0;
  double tangle = 0.0;
  double tomo_discord_rc = 0.0;
  double tomo_tangle = 0.0;
};

/// Rows in theta order. Row k draws from derive_seed(config.seed, k), so the
/// result does not depend on `jobs`.
std::vector<SweepRow> compute_sweep(const SweepConfig& config, int jobs = 1);

std::string sweep_csv(const SweepConfig& config, const std::vector<SweepRow>& rows);
io::Json sweep_json(const SweepConfig& config, const std::vector<SweepRow>& rows);

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out names a file; errors are a JSON object on `err`.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqc1sim::cli
