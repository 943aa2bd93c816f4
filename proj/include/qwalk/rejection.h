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

#ifndef QWALK_REJECTION_H_
#define QWALK_REJECTION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qwalk/graph.h"

namespace qwalk {

inline constexpr std::uint64_t kDefaultMaxRejectionAttempts = 10'000'000;

// Trajectory sampling by rejection: draw tau(t) ~ rho(t) independently for
// t = 0..L-1 and keep the sequence only if every consecutive pair is an edge.
// The accepted marginals are rho conditioned on the sequence being a path,
// which generally differs from rho.
struct RejectionReport {
  std::uint64_t requested_attempts = 0;
  // Attempts actually made (requested, clipped to the cap).
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  double acceptance_rate = 0.0;
  bool none_accepted = true;
  // marginals[t][v]: fraction of accepted sequences with tau(t) = v. Empty
  // when nothing was accepted.
  std::vector<std::vector<double>> marginals;
  // Total variation distance between marginals[t] and rho(t).
  std::vector<double> tvd;
  double max_tvd = 0.0;
  // Number of vertex sequences of length L that are paths in the graph.
  double path_count = 0.0;
  // |V|^L.
  double sequence_count = 0.0;
  // V * D^(L-1) for a generated D-dimensional torus, reported as the coarse
  // estimate it is; path_count is the exact figure.
  std::optional<double> torus_path_estimate;
};

// `rho_seq` must hold at least `length` distributions over the vertices.
RejectionReport RejectionSample(std::span<const std::vector<double>> rho_seq,
                                const PortGraph& g, std::size_t length,
                                std::uint64_t attempts, std::uint64_t seed,
                                std::uint64_t max_attempts =
                                    kDefaultMaxRejectionAttempts);

// Number of length-L vertex sequences that follow edges.
double CountPaths(const PortGraph& g, std::size_t length);

}  // namespace qwalk

#endif  // QWALK_REJECTION_H_
