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

#include "qwalk/rejection.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.h"
#include "qwalk/rng.h"
#include "qwalk/trajectory.h"

namespace qwalk {

double CountPaths(const PortGraph& g, std::size_t length) {
  if (length == 0) return 0.0;
  std::vector<double> ends(g.num_vertices(), 1.0);
  for (std::size_t step = 1; step < length; ++step) {
    std::vector<double> next(g.num_vertices(), 0.0);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) next[v] += ends[u];
    }
    ends = std::move(next);
  }
  double total = 0.0;
  for (double x : ends) total += x;
  return total;
}

RejectionReport RejectionSample(std::span<const std::vector<double>> rho_seq,
                                const PortGraph& g, std::size_t length,
                                std::uint64_t attempts, std::uint64_t seed,
                                std::uint64_t max_attempts) {
  if (length == 0) throw ValidationError("rejection length must be >= 1");
  if (rho_seq.size() < length) {
    throw ValidationError("need " + std::to_string(length) +
                          " distributions, got " +
                          std::to_string(rho_seq.size()));
  }
  const std::size_t n = g.num_vertices();
  for (std::size_t t = 0; t < length; ++t) {
    if (rho_seq[t].size() != n) {
      throw ValidationError("rho(" + std::to_string(t) +
                            ") does not match the vertex count");
    }
  }

  RejectionReport report;
  report.requested_attempts = attempts;
  report.attempts = std::min(attempts, max_attempts);
  report.path_count = CountPaths(g, length);
  report.sequence_count = std::pow(static_cast<double>(n),
                                   static_cast<double>(length));
  if (const auto& dims = g.torus_dims(); !dims.empty()) {
    report.torus_path_estimate =
        static_cast<double>(n) *
        std::pow(static_cast<double>(dims.size()),
                 static_cast<double>(length - 1));
  }

  std::vector<AliasTable> tables;
  tables.reserve(length);
  for (std::size_t t = 0; t < length; ++t) tables.emplace_back(rho_seq[t]);

  std::vector<std::vector<std::uint64_t>> counts(
      length, std::vector<std::uint64_t>(n, 0));
  std::vector<std::size_t> draw(length);
  Rng rng(seed);
  for (std::uint64_t a = 0; a < report.attempts; ++a) {
    bool path = true;
    draw[0] = tables[0].Sample(rng);
    for (std::size_t t = 1; t < length && path; ++t) {
      draw[t] = tables[t].Sample(rng);
      path = g.has_edge(static_cast<Vertex>(draw[t - 1]),
                        static_cast<Vertex>(draw[t]));
    }
    if (!path) continue;
    ++report.accepted;
    for (std::size_t t = 0; t < length; ++t) ++counts[t][draw[t]];
  }

  report.acceptance_rate =
      report.attempts == 0
          ? 0.0
          : static_cast<double>(report.accepted) /
                static_cast<double>(report.attempts);
  report.none_accepted = report.accepted == 0;
  if (report.none_accepted) return report;

  report.marginals.assign(length, std::vector<double>(n, 0.0));
  report.tvd.resize(length);
  for (std::size_t t = 0; t < length; ++t) {
    for (std::size_t v = 0; v < n; ++v) {
      report.marginals[t][v] = static_cast<double>(counts[t][v]) /
                               static_cast<double>(report.accepted);
    }
    report.tvd[t] = TotalVariation(report.marginals[t], rho_seq[t]);
    report.max_tvd = std::max(report.max_tvd, report.tvd[t]);
  }
  return report;
}

}  // namespace qwalk
