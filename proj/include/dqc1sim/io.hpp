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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dqc1sim/clifford.hpp"
#include "dqc1sim/correlations.hpp"
#include "dqc1sim/dqc1.hpp"
#include "dqc1sim/sampling.hpp"
#include "dqc1sim/tomography.hpp"

// JSON exchange formats. Matrices are {"dim": d, "re": [[...]], "im": [[...]]}
// with an optional "qubit_dims" list on states.
namespace dqc1sim::io {

using Json = nlohmann::ordered_json;

/// Shortest round-trip text is not stable across libraries, so every number
/// written by the tools uses 17 significant digits.
std::string format_double(double v);

Json matrix_to_json(const Matrix& m);
/// Throws ParseError on malformed input.
Matrix matrix_from_json(const Json& j);

Json state_to_json(const qmath::DensityMatrix& rho);
qmath::DensityMatrix state_from_json(const Json& j);

/// Unitarity checked with tolerance 1e-8; the error names the worst entry.
dqc1::Unitary unitary_from_json(const Json& j);

/// {"n": k, "gates": [{"g": "H", "q": 0}, {"g": "CZ", "q": [0, 1]}, ...]}
/// where k is the total qubit count. ParseError messages carry the gate index.
clifford::CliffordCircuit circuit_from_json(const Json& j);
Json circuit_to_json(const clifford::CliffordCircuit& c);

Json direction_to_json(const correlations::BlochDirection& d);
Json report_to_json(const correlations::CorrelationReport& r);
Json zero_discord_to_json(const clifford::ZeroDiscordReport& r);

/// {"settings": [...36 labels...], "counts": [...], "mean": m, "seed": s}
Json run_to_json(const tomography::TomographyRun& run);
tomography::TomographyRun run_from_json(const Json& j);

Json chi2_to_json(const sampling::Chi2Report& r);

/// File helpers; IoError carries the path.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace dqc1sim::io
