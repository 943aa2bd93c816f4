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

#include "qwalk/evolution.h"

#include <cmath>
#include <utility>

#include "qwalk/error.h"

namespace qwalk {

namespace {

// N^e.
std::size_t Power(std::size_t n, std::size_t e) {
  std::size_t p = 1;
  while (e-- > 0) p *= n;
  return p;
}

void ApplyCoinAxis(WaveFunction& psi, std::size_t axis,
                   const CoinOperator& coin) {
  const PortGraph& g = psi.graph();
  coin.CheckCompatible(g);
  const std::size_t n = g.dimension();
  const std::size_t inner = Power(n, psi.num_walkers() - 1 - axis);
  const std::size_t outer = Power(n, axis);
  std::vector<Complex> scratch(g.max_degree());
  Complex* data = psi.amplitudes().data();
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t in = 0; in < inner; ++in) {
      const std::size_t base = o * n * inner + in;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const CMatrix& block = coin.block(static_cast<Vertex>(v));
        block.ApplyStrided(data + base + g.port_offset(static_cast<Vertex>(v)) * inner,
                           inner, scratch.data());
      }
    }
  }
}

void ApplyShiftAxis(const WaveFunction& in, WaveFunction& out, std::size_t axis,
                    const ShiftOperator& shift) {
  const PortGraph& g = in.graph();
  shift.CheckCompatible(g);
  const std::size_t n = g.dimension();
  const std::size_t inner = Power(n, in.num_walkers() - 1 - axis);
  const std::size_t outer = Power(n, axis);
  const auto src = in.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t from = (o * n + i) * inner;
      const std::size_t to = (o * n + shift.target(i)) * inner;
      for (std::size_t k = 0; k < inner; ++k) dst[to + k] = src[from + k];
    }
  }
}

}  // namespace

WaveFunction ApplyCoin(const WaveFunction& psi, const WalkOperators& ops,
                       std::size_t t) {
  WaveFunction out = psi;
  for (std::size_t k = 0; k < psi.num_walkers(); ++k) {
    ApplyCoinAxis(out, k, ops.coin(k, t));
  }
  return out;
}

WaveFunction ApplyCoin(const WaveFunction& psi, const CoinOperator& coin) {
  WaveFunction out = psi;
  for (std::size_t k = 0; k < psi.num_walkers(); ++k) ApplyCoinAxis(out, k, coin);
  return out;
}

WaveFunction ApplyShift(const WaveFunction& psi, const WalkOperators& ops,
                        std::size_t t) {
  WaveFunction a = psi;
  WaveFunction b = psi;
  for (std::size_t k = 0; k < psi.num_walkers(); ++k) {
    ApplyShiftAxis(a, b, k, ops.shift(k, t));
    std::swap(a, b);
  }
  return a;
}

WaveFunction ApplyShift(const WaveFunction& psi, const ShiftOperator& shift) {
  WaveFunction a = psi;
  WaveFunction b = psi;
  for (std::size_t k = 0; k < psi.num_walkers(); ++k) {
    ApplyShiftAxis(a, b, k, shift);
    std::swap(a, b);
  }
  return a;
}

WaveFunction ApplyInteraction(const WaveFunction& psi,
                              const InteractionOperator& u) {
  WaveFunction out = psi;
  const PortGraph& g = psi.graph();
  const std::size_t walkers = psi.num_walkers();
  const std::size_t n = g.dimension();
  switch (u.kind()) {
    case InteractionOperator::Kind::kIdentity:
      return out;
    case InteractionOperator::Kind::kCoincidencePhase: {
      std::vector<Vertex> where(walkers);
      for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t rest = i;
        for (std::size_t k = walkers; k-- > 0;) {
          where[k] = g.owner(rest % n);
          rest /= n;
        }
        int pairs = 0;
        for (std::size_t a = 0; a < walkers; ++a) {
          for (std::size_t b = a + 1; b < walkers; ++b) pairs += where[a] == where[b];
        }
        if (pairs > 0) out[i] *= std::polar(1.0, u.phi() * pairs);
      }
      return out;
    }
    case InteractionOperator::Kind::kExplicit: {
      for (const auto& [tuple, block] : u.blocks()) {
        if (tuple.size() != walkers) {
          throw ValidationError("interaction tuple arity does not match the "
                                "number of walkers");
        }
        // Joint basis indices of the tuple's port space, walker 0 slowest.
        std::vector<std::size_t> indices{0};
        for (Vertex v : tuple) {
          std::vector<std::size_t> next;
          for (std::size_t prefix : indices) {
            for (std::size_t c = 0; c < g.degree(v); ++c) {
              next.push_back(prefix * n + g.port_offset(v) + c);
            }
          }
          indices = std::move(next);
        }
        if (block.dim() != indices.size()) {
          throw ValidationError("interaction block dimension does not match "
                                "the joint port space of its tuple");
        }
        std::vector<Complex> x(indices.size());
        for (std::size_t j = 0; j < indices.size(); ++j) x[j] = psi[indices[j]];
        for (std::size_t i = 0; i < indices.size(); ++i) {
          Complex acc = 0.0;
          for (std::size_t j = 0; j < indices.size(); ++j) acc += block(i, j) * x[j];
          out[indices[i]] = acc;
        }
      }
      return out;
    }
  }
  return out;
}

WaveFunction Step(const WaveFunction& psi, const WalkOperators& ops,
                  std::size_t t) {
  const InteractionOperator& u = ops.interaction.at(t);
  if (u.kind() == InteractionOperator::Kind::kIdentity) {
    return ApplyShift(ApplyCoin(psi, ops, t), ops, t);
  }
  return ApplyShift(ApplyCoin(ApplyInteraction(psi, u), ops, t), ops, t);
}

std::vector<std::vector<double>> EvolveDistributions(const WaveFunction& psi0,
                                                     const WalkOperators& ops,
                                                     std::size_t steps) {
  ops.CheckCompatible(psi0.graph(), psi0.num_walkers());
  std::vector<std::vector<double>> rho;
  rho.reserve(steps + 1);
  WaveFunction psi = psi0;
  rho.push_back(psi.VertexDistribution());
  for (std::size_t t = 0; t < steps; ++t) {
    psi = Step(psi, ops, t);
    rho.push_back(psi.VertexDistribution());
  }
  return rho;
}

}  // namespace qwalk
