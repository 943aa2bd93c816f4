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

#include "qwalk/trajectory.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <thread>

#include "qwalk/error.h"
#include "qwalk/generators.h"

namespace qwalk {

AliasTable::AliasTable(std::span<const double> weights)
    : prob_(weights.size()), alias_(weights.size()) {
  const std::size_t n = weights.size();
  if (n == 0) throw ValidationError("alias table needs at least one weight");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ValidationError("alias table weights must be >= 0");
    total += w;
  }
  if (!(total > 0.0)) throw ValidationError("alias table weights sum to zero");

  std::vector<double> scaled(n);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / total;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    small.pop_back();
    const std::size_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding. A leftover "small" entry with zero
  // weight must never be drawn, so it aliases to a large one when possible.
  for (std::size_t l : large) {
    prob_[l] = 1.0;
    alias_[l] = l;
  }
  for (std::size_t s : small) {
    prob_[s] = weights[s] > 0.0 ? 1.0 : 0.0;
    alias_[s] = s;
    if (weights[s] == 0.0) {
      for (std::size_t j = 0; j < n; ++j) {
        if (weights[j] > 0.0) {
          alias_[s] = j;
          break;
        }
      }
    }
  }
}

std::size_t AliasTable::Sample(Rng& rng) const {
  const double u = rng.Uniform() * static_cast<double>(prob_.size());
  const std::size_t i = std::min(static_cast<std::size_t>(u), prob_.size() - 1);
  return (u - static_cast<double>(i)) < prob_[i] ? i : alias_[i];
}

std::size_t SampleLinear(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw SamplingError("cannot sample from zero weights");
  const double u = rng.Uniform() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = i;
    if (u < acc) return i;
  }
  // Rounding left u at or above the running sum.
  return last_positive;
}

namespace {

std::size_t ResolveLength(const TransitionMatrixSeq& seq,
                          const SamplingOptions& options) {
  if (options.length == std::numeric_limits<std::size_t>::max()) {
    return seq.horizon();
  }
  if (options.length > seq.horizon()) {
    throw ValidationError("trajectory length " + std::to_string(options.length) +
                          " exceeds the sequence horizon " +
                          std::to_string(seq.horizon()));
  }
  return options.length;
}

// Shared, read-only sampling state for one sequence.
class ChainSampler {
 public:
  ChainSampler(const TransitionMatrixSeq& seq, const SamplingOptions& options)
      : seq_(seq), length_(ResolveLength(seq, options)) {
    if (seq.rho.empty()) throw ValidationError("sequence has no rho(0)");
    if (options.sampler == TransitionSampler::kAlias) {
      initial_.emplace(seq.rho[0]);
      tables_.resize(length_);
      for (std::size_t t = 0; t < length_; ++t) {
        const TransitionMatrix& m = seq.matrices[t];
        tables_[t].reserve(m.num_columns());
        for (std::size_t k = 0; k < m.num_columns(); ++k) {
          tables_[t].emplace_back(m.column_at(k).probs);
        }
      }
    }
  }

  Trajectory Sample(std::uint64_t seed) const {
    Rng rng(seed);
    Trajectory path;
    path.states.reserve(length_ + 1);
    std::size_t state =
        initial_ ? initial_->Sample(rng) : SampleLinear(seq_.rho[0], rng);
    path.states.push_back(state);
    for (std::size_t t = 0; t < length_; ++t) {
      const TransitionMatrix& m = seq_.matrices[t];
      const auto sources = m.sources();
      const auto it = std::lower_bound(sources.begin(), sources.end(), state);
      if (it == sources.end() || *it != state) {
        throw SamplingError("column " + std::to_string(state) + " of P(" +
                            std::to_string(t) +
                            ") was not materialised; rebuild the sequence "
                            "with materialize_all or its reachable halo");
      }
      const std::size_t k = static_cast<std::size_t>(it - sources.begin());
      const TransitionColumn& col = m.column_at(k);
      const std::size_t pick = tables_.empty() ? SampleLinear(col.probs, rng)
                                               : tables_[t][k].Sample(rng);
      state = col.targets[pick];
      path.states.push_back(state);
    }
    return path;
  }

 private:
  const TransitionMatrixSeq& seq_;
  std::size_t length_;
  std::optional<AliasTable> initial_;
  std::vector<std::vector<AliasTable>> tables_;
};

}  // namespace

Trajectory SampleTrajectory(const TransitionMatrixSeq& seq, std::uint64_t seed,
                            const SamplingOptions& options) {
  return ChainSampler(seq, options).Sample(seed);
}

TrajectoryEnsemble SampleEnsemble(const TransitionMatrixSeq& seq,
                                  std::size_t count, std::uint64_t master_seed,
                                  const SamplingOptions& options) {
  if (count == 0) throw ValidationError("ensemble size must be >= 1");
  const ChainSampler sampler(seq, options);
  TrajectoryEnsemble ensemble;
  ensemble.master_seed = master_seed;
  ensemble.num_states = seq.num_states();
  ensemble.seeds.resize(count);
  ensemble.paths.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    ensemble.seeds[i] = DeriveSeed(master_seed, i);
  }

  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      ensemble.paths[i] = sampler.Sample(ensemble.seeds[i]);
    }
    return ensemble;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += threads) {
            ensemble.paths[i] = sampler.Sample(ensemble.seeds[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return ensemble;
}

std::vector<double> EmpiricalDistribution(const TrajectoryEnsemble& ensemble,
                                          std::size_t t) {
  if (ensemble.paths.empty()) throw ValidationError("empty ensemble");
  if (t > ensemble.length()) {
    throw IndexError("time " + std::to_string(t) + " beyond trajectory length " +
                     std::to_string(ensemble.length()));
  }
  std::vector<std::size_t> counts(ensemble.num_states, 0);
  for (const Trajectory& path : ensemble.paths) ++counts[path.states[t]];
  std::vector<double> p(ensemble.num_states);
  const double m = static_cast<double>(ensemble.paths.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    p[v] = static_cast<double>(counts[v]) / m;
  }
  return p;
}

double TotalVariation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw ValidationError("distributions have different lengths (" +
                          std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()) + ")");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

std::vector<ConvergenceRow> ConvergenceReport(
    const TransitionMatrixSeq& seq, std::span<const std::size_t> ensemble_sizes,
    std::span<const std::size_t> times, std::uint64_t master_seed,
    const SamplingOptions& options) {
  std::size_t last = 0;
  for (std::size_t t : times) last = std::max(last, t);
  if (last > seq.horizon()) {
    throw ValidationError("time grid reaches " + std::to_string(last) +
                          " but the sequence horizon is " +
                          std::to_string(seq.horizon()));
  }
  SamplingOptions opts = options;
  opts.length = last;
  std::vector<ConvergenceRow> rows;
  for (std::size_t j = 0; j < ensemble_sizes.size(); ++j) {
    const TrajectoryEnsemble ensemble = SampleEnsemble(
        seq, ensemble_sizes[j], DeriveSeed(master_seed, j), opts);
    for (std::size_t t : times) {
      rows.push_back({ensemble_sizes[j], t,
                      TotalVariation(EmpiricalDistribution(ensemble, t),
                                     seq.rho[t])});
    }
  }
  return rows;
}

std::size_t CountNonEdgeSteps(const TransitionMatrixSeq& seq,
                              const TrajectoryEnsemble& ensemble) {
  std::size_t bad = 0;
  for (const Trajectory& path : ensemble.paths) {
    for (std::size_t t = 0; t + 1 < path.states.size(); ++t) {
      if (!seq.IsEdge(path.states[t], path.states[t + 1])) ++bad;
    }
  }
  return bad;
}

std::vector<std::vector<double>> UnfoldTorusPath(const PortGraph& torus,
                                                 const Trajectory& path) {
  const auto& dims = torus.torus_dims();
  if (dims.empty()) throw ApplicabilityError("graph is not a generated torus");
  std::vector<std::vector<double>> out;
  out.reserve(path.states.size());
  if (path.states.empty()) return out;
  auto prev = TorusCoordinates(torus, static_cast<Vertex>(path.states[0]));
  out.emplace_back(prev.begin(), prev.end());
  for (std::size_t t = 1; t < path.states.size(); ++t) {
    const auto cur = TorusCoordinates(torus, static_cast<Vertex>(path.states[t]));
    std::vector<double> next = out.back();
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t forward = (cur[k] + dims[k] - prev[k]) % dims[k];
      if (forward == 1) {
        next[k] += 1.0;
      } else if (forward == dims[k] - 1) {
        next[k] -= 1.0;
      }
    }
    out.push_back(std::move(next));
    prev = cur;
  }
  return out;
}

std::vector<std::vector<double>> MeanUnfoldedPath(
    const PortGraph& torus, const TrajectoryEnsemble& ensemble) {
  std::vector<std::vector<double>> mean;
  for (const Trajectory& path : ensemble.paths) {
    const auto unfolded = UnfoldTorusPath(torus, path);
    if (mean.empty()) {
      mean.assign(unfolded.size(), std::vector<double>(unfolded[0].size(), 0.0));
    }
    for (std::size_t t = 0; t < unfolded.size(); ++t) {
      for (std::size_t k = 0; k < unfolded[t].size(); ++k) {
        mean[t][k] += unfolded[t][k];
      }
    }
  }
  const double m = static_cast<double>(ensemble.paths.size());
  for (auto& row : mean) {
    for (double& x : row) x /= m;
  }
  return mean;
}

}  // namespace qwalk
