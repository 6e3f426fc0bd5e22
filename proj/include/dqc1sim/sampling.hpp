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
#include <optional>
#include <random>
#include <span>
#include <string>

#include "dqc1sim/dqc1.hpp"

namespace dqc1sim::sampling {

/// Every random stream in the library is a Mersenne Twister (64-bit) seeded
/// from (master seed, stream index) through std::seed_seq.
using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Seed of sub-stream `index` of `master`; used to hand independent tasks
/// private generators.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class SamplingMode {
  /// Fixed number of runs, N+ ~ Binomial(L, (1 + e) / 2).
  binomial,
  /// Independent Poisson counts per port with total mean L.
  poisson,
};

struct ShotPlan {
  double epsilon = 0.1;
  double p_error = 0.05;
  double alpha = 1.0;
  std::int64_t shots = 1;
};

/// ceil(ln(2 / p_error) / (2 epsilon^2) / alpha^2). Throws EstimationError
/// when alpha == 0 and std::invalid_argument for out-of-range inputs.
std::int64_t shots_required(double epsilon, double p_error, double alpha);
ShotPlan plan_shots(double epsilon, double p_error, double alpha);

/// One simulated +/- projective measurement of an observable with the given
/// expectation; returns (N+ - N-) / (N+ + N-).
double sample_expectation(double true_expectation, std::int64_t shots, std::uint64_t seed,
                          SamplingMode mode = SamplingMode::binomial);
double sample_expectation(double true_expectation, std::int64_t shots, Rng& rng,
                          SamplingMode mode = SamplingMode::binomial);

struct TraceEstimate {
  /// Estimate of Tr(U) / N (raw expectations divided by alpha).
  Complex trace;
  /// Raw <X>, <Y> estimates before the alpha rescaling.
  double x_raw = 0.0;
  double y_raw = 0.0;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

/// Shot-based estimate of the normalized trace. `shots == 0` selects exact
/// mode. <X> uses stream 0 of `seed`, <Y> stream 1.
TraceEstimate estimate_trace(const dqc1::Unitary& u, double alpha, std::int64_t shots,
                             std::uint64_t seed, SamplingMode mode = SamplingMode::binomial);

struct MeasurementRecord {
  std::string basis_label;
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  /// Counting window in seconds, when the record models a timed exposure.
  std::optional<double> duration_s;
};

/// Independent Poisson draws for the two output ports. Throws
/// EstimationError("no signal") when both rates are zero.
MeasurementRecord poisson_counts(double rate_plus, double rate_minus, std::uint64_t seed,
                                 std::string basis_label = "x");

/// (N+ - N-) / (N+ + N-); throws EstimationError on an empty record.
double ratio_estimate(const MeasurementRecord& record);

struct Chi2Report {
  double chi2_reduced = 0.0;
  int dof = 0;
  int n_points = 0;
};

/// sum(((obs - exp) / sigma)^2) / (len - dof_subtract).
Chi2Report chi2_report(std::span<const double> observed, std::span<const double> expected,
                       std::span<const double> sigma, int dof_subtract = 3);
double chi2_reduced(std::span<const double> observed, std::span<const double> expected,
                    std::span<const double> sigma, int dof_subtract = 3);

}  // namespace dqc1sim::sampling
