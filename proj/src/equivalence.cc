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

#include "qwalk/equivalence.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

#include "qwalk/error.h"
#include "qwalk/evolution.h"

namespace qwalk {

namespace {

using Entries = std::vector<std::pair<std::size_t, double>>;

// Sorts and merges duplicate targets, then checks and rescales the column.
TransitionColumn FinishColumn(Entries entries, std::size_t source,
                              std::size_t t, const EquivalenceOptions& options) {
  std::sort(entries.begin(), entries.end());
  TransitionColumn col;
  for (const auto& [target, p] : entries) {
    if (!col.targets.empty() && col.targets.back() == target) {
      col.probs.back() += p;
    } else {
      col.targets.push_back(target);
      col.probs.push_back(p);
    }
  }
  if (!options.strict) return col;
  const double sum = col.Sum();
  if (!(std::abs(sum - 1.0) <= options.column_tolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "column " << source << " of P(" << t << ") sums to " << sum
        << "; the coin, shift or interaction is not unitary";
    throw ConsistencyError(msg.str());
  }
  for (double& p : col.probs) p /= sum;
  return col;
}

TransitionColumn UniformColumn(std::vector<std::size_t> targets) {
  std::sort(targets.begin(), targets.end());
  TransitionColumn col;
  const double p = 1.0 / static_cast<double>(targets.size());
  col.probs.assign(targets.size(), p);
  col.targets = std::move(targets);
  return col;
}

void CheckSameSpace(const WaveFunction& a, const WaveFunction& b) {
  if (a.shared_graph() != b.shared_graph() &&
      a.graph().Fingerprint() != b.graph().Fingerprint()) {
    throw ValidationError("wavefunctions live on different graphs");
  }
  if (a.size() != b.size() || a.num_walkers() != b.num_walkers()) {
    throw ValidationError("wavefunctions have mismatched dimensions");
  }
}

TransitionMatrix SingleWalkerMatrix(const PortGraph& g,
                                    std::span<const double> rho_t,
                                    std::span<const double> state_prob_next,
                                    const ShiftOperator& shift, std::size_t t,
                                    const EquivalenceOptions& options) {
  shift.CheckCompatible(g);
  TransitionMatrix m(t, g.num_vertices());
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    const Vertex uv = static_cast<Vertex>(u);
    if (rho_t[u] <= options.zero_threshold) {
      const auto nb = g.neighbors(uv);
      m.AddColumn(u, UniformColumn({nb.begin(), nb.end()}));
      continue;
    }
    Entries entries;
    entries.reserve(g.degree(uv));
    for (std::size_t i = g.port_offset(uv); i < g.port_offset(uv) + g.degree(uv);
         ++i) {
      const BasisIndex landing = shift.target(i);
      entries.emplace_back(g.owner(landing), state_prob_next[landing] / rho_t[u]);
    }
    m.AddColumn(u, FinishColumn(std::move(entries), u, t, options));
  }
  return m;
}

TransitionMatrix MultiWalkerMatrix(const ProductGraph& product,
                                   std::span<const double> rho_t,
                                   std::span<const double> state_prob_next,
                                   std::span<const ShiftOperator* const> shifts,
                                   std::size_t t,
                                   const EquivalenceOptions& options,
                                   std::span<const std::size_t> extra_columns) {
  const PortGraph& g = product.base();
  const std::size_t walkers = product.num_walkers();
  if (shifts.size() != 1 && shifts.size() != walkers) {
    throw ValidationError("need one shift or one per walker");
  }
  for (const ShiftOperator* s : shifts) s->CheckCompatible(g);
  auto shift_of = [&](std::size_t k) -> const ShiftOperator& {
    return *shifts[shifts.size() == 1 ? 0 : k];
  };

  std::vector<char> wanted(product.num_tuples(), options.materialize_all);
  for (std::size_t u = 0; u < product.num_tuples(); ++u) {
    if (rho_t[u] > options.zero_threshold) wanted[u] = 1;
  }
  for (std::size_t u : extra_columns) {
    if (u >= product.num_tuples()) {
      throw IndexError("requested column " + std::to_string(u) + " out of range");
    }
    wanted[u] = 1;
  }

  const std::size_t n = g.dimension();
  const std::size_t nv = g.num_vertices();
  TransitionMatrix m(t, product.num_tuples());
  for (std::size_t u = 0; u < product.num_tuples(); ++u) {
    if (!wanted[u]) continue;
    if (rho_t[u] <= options.zero_threshold) {
      m.AddColumn(u, UniformColumn(product.Successors(u)));
      continue;
    }
    const std::vector<Vertex> tuple = product.Tuple(u);
    // Odometer over the joint ports of the tuple.
    std::vector<Port> ports(walkers, 0);
    Entries entries;
    entries.reserve(product.degree(tuple));
    for (bool done = false; !done;) {
      std::size_t landing = 0;
      std::size_t target = 0;
      for (std::size_t k = 0; k < walkers; ++k) {
        const BasisIndex landed = shift_of(k).target(g.index(tuple[k], ports[k]));
        landing = landing * n + landed;
        target = target * nv + g.owner(landed);
      }
      entries.emplace_back(target, state_prob_next[landing] / rho_t[u]);
      done = true;
      for (std::size_t k = walkers; k-- > 0;) {
        if (++ports[k] < g.degree(tuple[k])) {
          done = false;
          break;
        }
        ports[k] = 0;
      }
    }
    m.AddColumn(u, FinishColumn(std::move(entries), u, t, options));
  }
  return m;
}

}  // namespace

TransitionMatrix BuildTransitionMatrix(const WaveFunction& psi_t,
                                       const WaveFunction& psi_next,
                                       const ShiftOperator& shift,
                                       std::size_t t,
                                       const EquivalenceOptions& options) {
  CheckSameSpace(psi_t, psi_next);
  if (psi_t.num_walkers() != 1) {
    throw ValidationError("BuildTransitionMatrix expects a single walker; use "
                          "BuildMultiwalkerMatrix");
  }
  const auto rho = psi_t.VertexDistribution();
  const auto next = psi_next.StateProbabilities();
  return SingleWalkerMatrix(psi_t.graph(), rho, next, shift, t, options);
}

TransitionMatrix BuildTransitionMatrixFromProbabilities(
    const PortGraph& g, std::span<const double> rho_t,
    std::span<const double> state_prob_next, const ShiftOperator& shift,
    std::size_t t, const EquivalenceOptions& options) {
  if (rho_t.size() != g.num_vertices() || state_prob_next.size() != g.dimension()) {
    throw ValidationError("probability tables do not match the graph");
  }
  return SingleWalkerMatrix(g, rho_t, state_prob_next, shift, t, options);
}

TransitionMatrix BuildMultiwalkerMatrix(
    const WaveFunction& psi_t, const WaveFunction& psi_next,
    const ProductGraph& product, std::span<const ShiftOperator* const> shifts,
    std::size_t t, const EquivalenceOptions& options,
    std::span<const std::size_t> extra_columns) {
  CheckSameSpace(psi_t, psi_next);
  if (psi_t.num_walkers() != product.num_walkers()) {
    throw ValidationError("wavefunction has " +
                          std::to_string(psi_t.num_walkers()) +
                          " walkers but the product graph has " +
                          std::to_string(product.num_walkers()));
  }
  if (psi_t.graph().Fingerprint() != product.base().Fingerprint()) {
    throw ValidationError("wavefunction and product graph differ");
  }
  const auto rho = psi_t.VertexDistribution();
  const auto next = psi_next.StateProbabilities();
  return MultiWalkerMatrix(product, rho, next, shifts, t, options, extra_columns);
}

std::size_t TransitionMatrixSeq::num_states() const {
  std::size_t s = 1;
  for (std::size_t k = 0; k < num_walkers; ++k) s *= graph->num_vertices();
  return s;
}

bool TransitionMatrixSeq::IsEdge(std::size_t from, std::size_t to) const {
  if (num_walkers == 1) {
    return graph->has_edge(static_cast<Vertex>(from), static_cast<Vertex>(to));
  }
  return ProductGraph(graph, num_walkers).has_edge(from, to);
}

TransitionMatrixSeq BuildSequence(const WalkOperators& ops,
                                  const WaveFunction& psi0, std::size_t horizon,
                                  const EquivalenceOptions& options) {
  const std::size_t walkers = psi0.num_walkers();
  ops.CheckCompatible(psi0.graph(), walkers);

  TransitionMatrixSeq seq;
  seq.graph = psi0.shared_graph();
  seq.num_walkers = walkers;
  seq.matrices.reserve(horizon);
  seq.rho.reserve(horizon + 1);

  const ProductGraph product(seq.graph, walkers);
  WaveFunction psi = psi0;
  seq.rho.push_back(psi.VertexDistribution());
  std::vector<std::size_t> halo;
  for (std::size_t t = 0; t < horizon; ++t) {
    WaveFunction next = Step(psi, ops, t);
    const auto state_prob = next.StateProbabilities();
    const auto& rho_t = seq.rho.back();
    if (walkers == 1) {
      seq.matrices.push_back(SingleWalkerMatrix(psi.graph(), rho_t, state_prob,
                                                ops.shift(0, t), t, options));
    } else {
      std::vector<const ShiftOperator*> shifts;
      for (std::size_t k = 0; k < walkers; ++k) shifts.push_back(&ops.shift(k, t));
      seq.matrices.push_back(MultiWalkerMatrix(product, rho_t, state_prob, shifts,
                                               t, options, halo));
    }
    seq.rho.push_back(next.VertexDistribution());

    if (walkers > 1 && !options.materialize_all) {
      // Zero-probability tuples the chain can still step into at t+1.
      const auto& rho_next = seq.rho.back();
      std::vector<char> mark(product.num_tuples(), 0);
      halo.clear();
      const TransitionMatrix& m = seq.matrices.back();
      for (std::size_t k = 0; k < m.num_columns(); ++k) {
        const TransitionColumn& col = m.column_at(k);
        for (std::size_t i = 0; i < col.targets.size(); ++i) {
          const std::size_t v = col.targets[i];
          if (col.probs[i] > 0.0 && rho_next[v] <= options.zero_threshold &&
              !mark[v]) {
            mark[v] = 1;
            halo.push_back(v);
          }
        }
      }
      std::sort(halo.begin(), halo.end());
    }
    psi = std::move(next);
  }
  return seq;
}

TheoremReport VerifyTheoremProperties(const TransitionMatrixSeq& seq) {
  TheoremReport report;
  report.steps = seq.matrices.size();
  if (seq.matrices.empty()) return report;
  if (seq.rho.size() != seq.matrices.size() + 1) {
    throw ValidationError("sequence needs one more distribution than matrices");
  }
  std::optional<ProductGraph> product;
  if (seq.num_walkers > 1) product.emplace(seq.graph, seq.num_walkers);

  for (std::size_t t = 0; t < seq.matrices.size(); ++t) {
    const TransitionMatrix& m = seq.matrices[t];
    for (std::size_t k = 0; k < m.num_columns(); ++k) {
      const std::size_t u = m.sources()[k];
      const TransitionColumn& col = m.column_at(k);
      double sum = 0.0;
      for (std::size_t i = 0; i < col.targets.size(); ++i) {
        const double p = col.probs[i];
        sum += p;
        report.max_entry_violation =
            std::max({report.max_entry_violation, -p, p - 1.0});
        if (p > 0.0) {
          const std::size_t v = col.targets[i];
          const bool edge =
              product ? product->has_edge(u, v)
                      : seq.graph->has_edge(static_cast<Vertex>(u),
                                            static_cast<Vertex>(v));
          if (!edge) ++report.off_edge_entries;
        }
      }
      report.max_column_sum_deviation =
          std::max(report.max_column_sum_deviation, std::abs(sum - 1.0));
    }
    const auto propagated = m.Apply(seq.rho[t]);
    for (std::size_t v = 0; v < propagated.size(); ++v) {
      report.max_propagation_residual =
          std::max(report.max_propagation_residual,
                   std::abs(propagated[v] - seq.rho[t + 1][v]));
    }
  }
  return report;
}

}  // namespace qwalk
