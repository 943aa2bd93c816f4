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

#ifndef QWALK_TRAJECTORY_H_
#define QWALK_TRAJECTORY_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "qwalk/equivalence.h"
#include "qwalk/graph.h"
#include "qwalk/rng.h"

namespace qwalk {

// Vose alias table: O(n) build, O(1) draws.
class AliasTable {
 public:
  explicit AliasTable(std::span<const double> weights);

  std::size_t Sample(Rng& rng) const;
  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

// Index drawn from `weights` by a cumulative scan, O(n). The weights need not
// be normalised. Zero-weight entries are never returned.
std::size_t SampleLinear(std::span<const double> weights, Rng& rng);

enum class TransitionSampler {
  kLinearScan,  // O(d) per step.
  kAlias,       // O(1) per step after one table per column.
};

struct SamplingOptions {
  TransitionSampler sampler = TransitionSampler::kLinearScan;
  // Number of steps L; defaults to the sequence horizon.
  std::size_t length = std::numeric_limits<std::size_t>::max();
  std::size_t threads = 1;
};

// tau(0..L) as state ids (vertices, or vertex-tuple indices for K walkers).
struct Trajectory {
  std::vector<std::size_t> states;
};

struct TrajectoryEnsemble {
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<Trajectory> paths;
  std::size_t num_states = 0;

  std::size_t size() const { return paths.size(); }
  // Number of steps L; every path has L + 1 states.
  std::size_t length() const {
    return paths.empty() ? 0 : paths.front().states.size() - 1;
  }
};

// Draws tau(0) from rho(0) and tau(t+1) from column tau(t) of P(t).
Trajectory SampleTrajectory(const TransitionMatrixSeq& seq, std::uint64_t seed,
                            const SamplingOptions& options = {});

// Trajectory i uses seed DeriveSeed(master_seed, i), so the result does not
// depend on the number of threads.
TrajectoryEnsemble SampleEnsemble(const TransitionMatrixSeq& seq,
                                  std::size_t count, std::uint64_t master_seed,
                                  const SamplingOptions& options = {});

// Fraction of trajectories at each state at time t.
std::vector<double> EmpiricalDistribution(const TrajectoryEnsemble& ensemble,
                                          std::size_t t);

// Half the L1 distance.
double TotalVariation(std::span<const double> p, std::span<const double> q);

struct ConvergenceRow {
  std::size_t ensemble_size;
  std::size_t t;
  double tvd;
};

// TVD between the empirical distribution of an ensemble of each size and
// rho(t), for every t in the grid. Ensemble j is sampled with master seed
// DeriveSeed(master_seed, j).
std::vector<ConvergenceRow> ConvergenceReport(
    const TransitionMatrixSeq& seq, std::span<const std::size_t> ensemble_sizes,
    std::span<const std::size_t> times, std::uint64_t master_seed,
    const SamplingOptions& options = {});

// Counts (tau(t), tau(t+1)) pairs that are not edges.
std::size_t CountNonEdgeSteps(const TransitionMatrixSeq& seq,
                              const TrajectoryEnsemble& ensemble);

// Torus coordinates of a path with wrap-arounds removed, so consecutive
// points differ by one unit along one axis. Row t holds the coordinates of
// tau(t).
std::vector<std::vector<double>> UnfoldTorusPath(const PortGraph& torus,
                                                 const Trajectory& path);

// Per-instant mean of the unfolded coordinates over the ensemble.
std::vector<std::vector<double>> MeanUnfoldedPath(const PortGraph& torus,
                                                  const TrajectoryEnsemble& ensemble);

}  // namespace qwalk

#endif  // QWALK_TRAJECTORY_H_
