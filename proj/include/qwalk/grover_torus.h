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

// Fast path for the Grover-coined, moving-shift walk on a D-dimensional
// torus started from real amplitudes.
//
// Every vertex has 2D ports, so the Grover block is (1/D) J - I and the
// amplitude that leaves u through port c and lands on (eta(u, c), c) is
//
//   psi(eta(u, c), c, t+1) = (1/D) sum_c' psi(u, c', t) - psi(u, c, t).
//
// With real amplitudes this is a recursion on sqrt(rho(u, c, t)) and its
// sign; rho(v, c, t+1) is the square of the right-hand side. Each step is one
// O(|V| D) sweep over the table.

#ifndef QWALK_GROVER_TORUS_H_
#define QWALK_GROVER_TORUS_H_

#include <cstddef>
#include <vector>

#include "qwalk/equivalence.h"
#include "qwalk/graph.h"
#include "qwalk/transition_matrix.h"
#include "qwalk/wavefunction.h"

namespace qwalk {

struct TorusDPState {
  std::vector<std::size_t> dims;
  std::size_t time = 0;
  // rho(v, c, t) by flattened basis index.
  std::vector<double> prob;
  // Sign of the real amplitude: -1, 0 or +1.
  std::vector<signed char> sign;

  std::vector<double> VertexDistribution() const;
  double Total() const;
};

// States for t = 0..horizon. Throws ApplicabilityError unless `torus` came
// from Torus()/Cycle() and every initial amplitude is real.
std::vector<TorusDPState> GroverTorusDp(const PortGraph& torus,
                                        const WaveFunction& psi0,
                                        std::size_t horizon);

// P(t) from two consecutive DP states; same conventions as
// BuildTransitionMatrix.
TransitionMatrix GroverTorusMatrix(const PortGraph& torus,
                                   const TorusDPState& now,
                                   const TorusDPState& next,
                                   const EquivalenceOptions& options = {});

}  // namespace qwalk

#endif  // QWALK_GROVER_TORUS_H_
