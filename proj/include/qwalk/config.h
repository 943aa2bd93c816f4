// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON run configuration.
//
//   {
//     "graph": {"generator": "torus", "dims": [10, 10]},
//     "coin": "grover",
//     "shift": "moving",
//     "initial": {"vertex": 0, "port": 0},
//     "steps": 50,
//     "seed": 7
//   }
//
// graph:       {"generator": "cycle", "n": N} | {"generator": "torus",
//              "dims": [...]} | {"generator": "complete", "n": N} |
//              {"generator": "random_regular", "n": N, "degree": d,
//              "seed": s} | {"n": N, "edges": [[u, v], ...]} |
//              {"neighbors": [[...], ...]}. Add "port_order": "matching" to
//              reorder ports so the moving shift is a permutation.
// coin:        "hadamard" | "grover" | "identity" | {"random": seed} |
//              {"matrix": M} | {"blocks": [M, ...]} | {"schedule":
//              [{"from": t, "coin": ...}, ...]}. A matrix is a list of rows;
//              entries are reals or [re, im]. "validate": false skips the
//              unitarity check.
// shift:       "moving" | "flip_flop" | {"landing": [[port, ...], ...]} |
//              {"schedule": [...]}.
// interaction: "identity" | {"coincidence_phase": phi}.
// initial:     {"vertex": v, "port": c} | [{"vertex", "port", "re", "im"}]
//              | {"uniform": true} | for K walkers {"walkers": [state, ...]}
//              or [{"vertices": [...], "ports": [...], "re", "im"}].
// walkers:     K, default 1. "coins"/"shifts" may list one spec per walker.

#ifndef QWALK_CONFIG_H_
#define QWALK_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwalk/equivalence.h"
#include "qwalk/graph.h"
#include "qwalk/operators.h"
#include "qwalk/trajectory.h"
#include "qwalk/wavefunction.h"

namespace qwalk {

// Initial states whose squared norm is off by more than this are
// renormalised with a warning.
inline constexpr double kInitialNormTolerance = 1e-8;

struct SamplingConfig {
  std::size_t ensemble_size = 20;
  std::optional<std::size_t> length;
  std::vector<std::size_t> ensemble_sizes = {100, 1000, 10000};
  std::vector<std::size_t> times = {5, 10, 20};
  SamplingOptions options;
};

struct RejectionConfig {
  std::size_t length = 3;
  std::uint64_t attempts = 1'000'000;
  std::uint64_t max_attempts = 10'000'000;
};

struct RunConfig {
  // The input after defaults were filled in; stored in the manifest.
  nlohmann::json resolved;
  GraphPtr graph;
  std::size_t num_walkers = 1;
  std::optional<WalkOperators> ops;
  std::optional<WaveFunction> initial;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  EquivalenceOptions equivalence;
  SamplingConfig sampling;
  RejectionConfig rejection;
  std::vector<std::string> warnings;
};

// Parses JSON text; syntax errors become ConfigError naming the line and
// column.
nlohmann::json ParseJson(std::string_view text, std::string_view source);
nlohmann::json LoadJsonFile(const std::string& path);

GraphPtr GraphFromJson(const nlohmann::json& spec);
CoinOperator CoinFromJson(const PortGraph& g, const nlohmann::json& spec);
ShiftOperator ShiftFromJson(const PortGraph& g, const nlohmann::json& spec);
InteractionOperator InteractionFromJson(const nlohmann::json& spec);
CMatrix MatrixFromJson(const nlohmann::json& rows);

// Builds everything a run needs. Throws ConfigError (or another
// ValidationError) on bad input.
RunConfig ParseRunConfig(const nlohmann::json& config);

}  // namespace qwalk

#endif  // QWALK_CONFIG_H_
