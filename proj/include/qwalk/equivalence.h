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

// Non-homogeneous random walks that reproduce the vertex distributions of a
// coined quantum walk.
//
// For a source vertex u with rho(u, t) > 0 the column of P(t) is
//
//   p_vu(t) = rho(v, c, t+1) / rho(u, t),
//
// where (v, c) is the basis state that the shift sends u's port towards v
// to. Because the coin block of u is unitary, these ratios lie in [0, 1] and
// sum to one, and P(t) rho(t) = rho(t+1) holds exactly. Columns with
// rho(u, t) == 0 never influence the chain and are set to 1/d(u) on every
// out-neighbour. K walkers are handled the same way on the product graph,
// with vertex tuples as states.
//
// Building P(t) needs only rho(t) and the state probabilities at t+1, so the
// cost is dominated by evolving the wavefunction: O(T |E|^2) with dense
// operators, O(T |E| d_max) with the block-sparse ones used here.

#ifndef QWALK_EQUIVALENCE_H_
#define QWALK_EQUIVALENCE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/graph.h"
#include "qwalk/operators.h"
#include "qwalk/transition_matrix.h"
#include "qwalk/wavefunction.h"

namespace qwalk {

inline constexpr double kZeroProbabilityThreshold = 1e-14;
inline constexpr double kColumnSumTolerance = 1e-8;

struct EquivalenceOptions {
  // rho(u, t) at or below this counts as zero.
  double zero_threshold = kZeroProbabilityThreshold;
  // Columns deviating from one by more than this raise ConsistencyError;
  // smaller deviations are rescaled away.
  double column_tolerance = kColumnSumTolerance;
  // When false, raw ratios are kept and nothing is rescaled or rejected, so
  // defects can be inspected with VerifyTheoremProperties.
  bool strict = true;
  // Multi-walker only: materialise every tuple column, not just the support
  // and the states the chain can reach.
  bool materialize_all = false;
};

// P(t) for one walker. `shift` is the shift that produced psi_next from the
// coined psi_t; it fixes which port of v receives u's amplitude.
TransitionMatrix BuildTransitionMatrix(const WaveFunction& psi_t,
                                       const WaveFunction& psi_next,
                                       const ShiftOperator& shift,
                                       std::size_t t,
                                       const EquivalenceOptions& options = {});

// Same as BuildTransitionMatrix, from rho(t) over vertices and
// |Psi(i, t+1)|^2 over basis states. Lets specialised solvers that never
// form a wavefunction reuse the construction.
TransitionMatrix BuildTransitionMatrixFromProbabilities(
    const PortGraph& g, std::span<const double> rho_t,
    std::span<const double> state_prob_next, const ShiftOperator& shift,
    std::size_t t, const EquivalenceOptions& options = {});

// P(t) over vertex tuples. `shifts` holds one operator shared by all walkers
// or one per walker. Columns are materialised for tuples with rho above the
// threshold, for `extra_columns`, or for all tuples with materialize_all.
TransitionMatrix BuildMultiwalkerMatrix(
    const WaveFunction& psi_t, const WaveFunction& psi_next,
    const ProductGraph& product, std::span<const ShiftOperator* const> shifts,
    std::size_t t, const EquivalenceOptions& options = {},
    std::span<const std::size_t> extra_columns = {});

// P(0..T-1) together with rho(0..T).
struct TransitionMatrixSeq {
  GraphPtr graph;
  std::size_t num_walkers = 1;
  std::vector<TransitionMatrix> matrices;
  std::vector<std::vector<double>> rho;

  std::size_t horizon() const { return matrices.size(); }
  // |V|^K.
  std::size_t num_states() const;
  // True iff from -> to is an edge of the (product) graph.
  bool IsEdge(std::size_t from, std::size_t to) const;
};

// Evolves psi0 for `horizon` steps and emits the matrix sequence. In the
// multi-walker case each P(t) also materialises the zero-probability tuples
// reachable from P(t-1), so a sampled chain never meets a missing column.
TransitionMatrixSeq BuildSequence(const WalkOperators& ops,
                                  const WaveFunction& psi0, std::size_t horizon,
                                  const EquivalenceOptions& options = {});

struct TheoremReport {
  std::size_t steps = 0;
  // Largest distance of an entry outside [0, 1].
  double max_entry_violation = 0.0;
  // Largest |sum_v p_vu - 1| over materialised columns.
  double max_column_sum_deviation = 0.0;
  // max_t || P(t) rho(t) - rho(t+1) ||_inf.
  double max_propagation_residual = 0.0;
  // Positive entries that do not follow an edge.
  std::size_t off_edge_entries = 0;

  bool Holds(double tolerance = 1e-10) const {
    return max_entry_violation <= tolerance &&
           max_column_sum_deviation <= tolerance &&
           max_propagation_residual <= tolerance && off_edge_entries == 0;
  }
};

TheoremReport VerifyTheoremProperties(const TransitionMatrixSeq& seq);

}  // namespace qwalk

#endif  // QWALK_EQUIVALENCE_H_
