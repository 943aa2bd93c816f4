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

#ifndef QWALK_EVOLUTION_H_
#define QWALK_EVOLUTION_H_

#include <cstddef>
#include <vector>

#include "qwalk/operators.h"
#include "qwalk/wavefunction.h"

namespace qwalk {

// W = W_0 (x) ... (x) W_{K-1}, each walker using its coin at time t.
WaveFunction ApplyCoin(const WaveFunction& psi, const WalkOperators& ops,
                       std::size_t t);
// The same coin on every walker.
WaveFunction ApplyCoin(const WaveFunction& psi, const CoinOperator& coin);

WaveFunction ApplyShift(const WaveFunction& psi, const WalkOperators& ops,
                        std::size_t t);
WaveFunction ApplyShift(const WaveFunction& psi, const ShiftOperator& shift);

WaveFunction ApplyInteraction(const WaveFunction& psi,
                              const InteractionOperator& u);

// One step: S W U psi at time t (U is skipped when it is the identity).
WaveFunction Step(const WaveFunction& psi, const WalkOperators& ops,
                  std::size_t t);

// Vertex(-tuple) distributions rho(0..steps).
std::vector<std::vector<double>> EvolveDistributions(const WaveFunction& psi0,
                                                     const WalkOperators& ops,
                                                     std::size_t steps);

}  // namespace qwalk

#endif  // QWALK_EVOLUTION_H_
