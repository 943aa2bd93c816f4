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

#include "qwalk/grover_torus.h"

#include <cmath>
#include <string>

#include "qwalk/error.h"
#include "qwalk/operators.h"

namespace qwalk {

namespace {

// Imaginary parts up to this size are taken as rounding noise.
constexpr double kRealTolerance = 1e-14;

signed char SignOf(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

void CheckTorus(const PortGraph& torus) {
  if (torus.torus_dims().empty()) {
    throw ApplicabilityError("the Grover torus recursion needs a generated torus");
  }
}

}  // namespace

std::vector<double> TorusDPState::VertexDistribution() const {
  const std::size_t ports = 2 * dims.size();
  std::vector<double> rho(prob.size() / ports, 0.0);
  for (std::size_t i = 0; i < prob.size(); ++i) rho[i / ports] += prob[i];
  return rho;
}

double TorusDPState::Total() const {
  double s = 0.0;
  for (double p : prob) s += p;
  return s;
}

std::vector<TorusDPState> GroverTorusDp(const PortGraph& torus,
                                        const WaveFunction& psi0,
                                        std::size_t horizon) {
  CheckTorus(torus);
  if (psi0.num_walkers() != 1 ||
      psi0.graph().Fingerprint() != torus.Fingerprint()) {
    throw ApplicabilityError("initial state must be one walker on the torus");
  }
  const std::size_t ports = 2 * torus.torus_dims().size();
  const double inv_d = 1.0 / static_cast<double>(torus.torus_dims().size());

  TorusDPState state;
  state.dims = torus.torus_dims();
  state.prob.resize(torus.dimension());
  state.sign.resize(torus.dimension());
  for (std::size_t i = 0; i < torus.dimension(); ++i) {
    const Complex a = psi0[i];
    if (std::abs(a.imag()) > kRealTolerance) {
      throw ApplicabilityError("initial amplitude at basis index " +
                               std::to_string(i) + " is not real");
    }
    state.prob[i] = a.real() * a.real();
    state.sign[i] = SignOf(a.real());
  }

  std::vector<TorusDPState> states;
  states.reserve(horizon + 1);
  states.push_back(state);
  std::vector<double> amp(ports);
  for (std::size_t t = 0; t < horizon; ++t) {
    const TorusDPState& cur = states.back();
    TorusDPState next;
    next.dims = cur.dims;
    next.time = t + 1;
    next.prob.assign(cur.prob.size(), 0.0);
    next.sign.assign(cur.sign.size(), 0);
    for (std::size_t u = 0; u < torus.num_vertices(); ++u) {
      const std::size_t base = u * ports;
      double mean = 0.0;
      for (std::size_t c = 0; c < ports; ++c) {
        amp[c] = cur.sign[base + c] * std::sqrt(cur.prob[base + c]);
        mean += amp[c];
      }
      mean *= inv_d;
      for (std::size_t c = 0; c < ports; ++c) {
        const double x = mean - amp[c];
        // Moving shift: port c of u lands on port c of its c-th neighbour.
        const std::size_t landing = torus.target(base + c) * ports + c;
        next.prob[landing] = x * x;
        next.sign[landing] = SignOf(x);
      }
    }
    states.push_back(std::move(next));
  }
  return states;
}

TransitionMatrix GroverTorusMatrix(const PortGraph& torus,
                                   const TorusDPState& now,
                                   const TorusDPState& next,
                                   const EquivalenceOptions& options) {
  CheckTorus(torus);
  if (now.prob.size() != torus.dimension() ||
      next.prob.size() != torus.dimension() || next.time != now.time + 1) {
    throw ValidationError("DP states are not consecutive states of this torus");
  }
  return BuildTransitionMatrixFromProbabilities(
      torus, now.VertexDistribution(), next.prob, ShiftOperator::Moving(torus),
      now.time, options);
}

}  // namespace qwalk
