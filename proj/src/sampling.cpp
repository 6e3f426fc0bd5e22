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

#include "dqc1sim/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "dqc1sim/errors.hpp"

namespace dqc1sim::sampling {
namespace {

constexpr const char* kNoPureFraction = "no pure fraction: estimation impossible";

void check_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1), got " +
                                std::to_string(v));
  }
}

void check_estimation_alpha(double alpha) {
  if (alpha == 0.0) throw EstimationError(kNoPureFraction);
  dqc1::check_alpha(alpha);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  Rng rng = make_rng(master, index);
  return rng();
}

std::int64_t shots_required(double epsilon, double p_error, double alpha) {
  check_open_unit(epsilon, "epsilon");
  check_open_unit(p_error, "p_error");
  check_estimation_alpha(alpha);
  const double base = std::log(2.0 / p_error) / (2.0 * epsilon * epsilon);
  return static_cast<std::int64_t>(std::ceil(base / (alpha * alpha)));
}

ShotPlan plan_shots(double epsilon, double p_error, double alpha) {
  return {epsilon, p_error, alpha, shots_required(epsilon, p_error, alpha)};
}

double sample_expectation(double true_expectation, std::int64_t shots, Rng& rng,
                          SamplingMode mode) {
  if (!(std::abs(true_expectation) <= 1.0)) {
    throw std::invalid_argument("expectation must lie in [-1, 1]");
  }
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const double p_plus = (1.0 + true_expectation) / 2.0;
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  if (mode == SamplingMode::binomial) {
    std::binomial_distribution<std::int64_t> draw(shots, p_plus);
    n_plus = draw(rng);
    n_minus = shots - n_plus;
  } else {
    const double total = static_cast<double>(shots);
    const double rate_plus = total * p_plus;
    const double rate_minus = total * (1.0 - p_plus);
    if (rate_plus > 0.0) n_plus = std::poisson_distribution<std::int64_t>(rate_plus)(rng);
    if (rate_minus > 0.0) n_minus = std::poisson_distribution<std::int64_t>(rate_minus)(rng);
  }
  return ratio_estimate({"", n_plus, n_minus, std::nullopt});
}

double sample_expectation(double true_expectation, std::int64_t shots, std::uint64_t seed,
                          SamplingMode mode) {
  Rng rng = make_rng(seed);
  return sample_expectation(true_expectation, shots, rng, mode);
}

TraceEstimate estimate_trace(const dqc1::Unitary& u, double alpha, std::int64_t shots,
                             std::uint64_t seed, SamplingMode mode) {
  check_estimation_alpha(alpha);
  if (shots < 0) throw std::invalid_argument("shots must be >= 0");
  const dqc1::PauliExpectations exact = dqc1::exact_expectations(u, alpha);
  TraceEstimate out;
  out.shots = shots;
  out.seed = seed;
  if (shots == 0) {
    out.x_raw = exact.x;
    out.y_raw = exact.y;
  } else {
    Rng x_stream = make_rng(seed, 0);
    Rng y_stream = make_rng(seed, 1);
    out.x_raw = sample_expectation(exact.x, shots, x_stream, mode);
    out.y_raw = sample_expectation(exact.y, shots, y_stream, mode);
  }
  out.trace = Complex(out.x_raw, out.y_raw) / alpha;
  return out;
}

MeasurementRecord poisson_counts(double rate_plus, double rate_minus, std::uint64_t seed,
                                 std::string basis_label) {
  if (!(rate_plus >= 0.0) || !(rate_minus >= 0.0)) {
    throw std::invalid_argument("count rates must be >= 0");
  }
  if (rate_plus == 0.0 && rate_minus == 0.0) throw EstimationError("no signal");
  Rng rng = make_rng(seed);
  MeasurementRecord rec;
  rec.basis_label = std::move(basis_label);
  if (rate_plus > 0.0) rec.n_plus = std::poisson_distribution<std::int64_t>(rate_plus)(rng);
  if (rate_minus > 0.0) rec.n_minus = std::poisson_distribution<std::int64_t>(rate_minus)(rng);
  return rec;
}

double ratio_estimate(const MeasurementRecord& record) {
  if (record.n_plus < 0 || record.n_minus < 0) {
    throw std::invalid_argument("counts must be non-negative");
  }
  const std::int64_t total = record.n_plus + record.n_minus;
  if (total < 1) throw EstimationError("no signal");
  return static_cast<double>(record.n_plus - record.n_minus) / static_cast<double>(total);
}

Chi2Report chi2_report(std::span<const double> observed, std::span<const double> expected,
                       std::span<const double> sigma, int dof_subtract) {
  if (observed.size() != expected.size() || observed.size() != sigma.size()) {
    throw std::invalid_argument("chi2: observed, expected and sigma lengths differ");
  }
  if (dof_subtract < 0 || observed.size() < static_cast<std::size_t>(dof_subtract) + 1) {
    throw std::invalid_argument("chi2: need more points than fitted degrees of freedom");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    if (!(sigma[k] > 0.0)) throw std::invalid_argument("chi2: sigma must be positive");
    const double r = (observed[k] - expected[k]) / sigma[k];
    sum += r * r;
  }
  const int n = static_cast<int>(observed.size());
  const int dof = n - dof_subtract;
  return {sum / dof, dof, n};
}

double chi2_reduced(std::span<const double> observed, std::span<const double> expected,
                    std::span<const double> sigma, int dof_subtract) {
  return chi2_report(observed, expected, sigma, dof_subtract).chi2_reduced;
}

}  // namespace dqc1sim::sampling
