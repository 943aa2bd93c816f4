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

#ifndef QWALK_WAVEFUNCTION_H_
#define QWALK_WAVEFUNCTION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/graph.h"
#include "qwalk/matrix.h"

namespace qwalk {

// Cap on stored amplitudes (16 bytes each): 2^27 amplitudes = 2 GiB.
inline constexpr std::size_t kDefaultAmplitudeBudget = std::size_t{1} << 27;

inline constexpr double kNormTolerance = 1e-10;

// Amplitudes of K walkers on the K-fold tensor basis. With N = graph
// dimension, basis state (i_0, ..., i_{K-1}) lives at sum_k i_k N^{K-1-k},
// where i_k is walker k's flattened (vertex, port) index. Vertex tuples use
// the same mixed-radix layout over |V|.
class WaveFunction {
 public:
  // The zero vector. Throws ResourceError if N^K exceeds `budget`.
  WaveFunction(GraphPtr graph, std::size_t num_walkers = 1,
               std::size_t budget = kDefaultAmplitudeBudget);

  // The basis state |v, c>.
  static WaveFunction Localized(GraphPtr graph, Vertex v, Port c);
  // Tensor product of single-walker states on the same graph.
  static WaveFunction Product(std::span<const WaveFunction> walkers,
                              std::size_t budget = kDefaultAmplitudeBudget);

  const PortGraph& graph() const { return *graph_; }
  const GraphPtr& shared_graph() const { return graph_; }
  std::size_t num_walkers() const { return num_walkers_; }
  std::size_t size() const { return amplitudes_.size(); }
  // |V|^K.
  std::size_t num_vertex_tuples() const { return num_tuples_; }

  std::span<Complex> amplitudes() { return amplitudes_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  // Single walker only.
  Complex amplitude(Vertex v, Port c) const;

  double SquaredNorm() const;
  // Scales to unit norm and returns the previous squared norm.
  double Normalize();

  // |Psi(i)|^2 for every basis state.
  std::vector<double> StateProbabilities() const;
  // Probability of each vertex tuple; length |V|^K.
  std::vector<double> VertexDistribution() const;
  // Vertex tuple index of joint basis index i.
  std::size_t VertexTupleOf(std::size_t i) const;

 private:
  GraphPtr graph_;
  std::size_t num_walkers_;
  std::size_t num_tuples_;
  std::vector<Complex> amplitudes_;
};

}  // namespace qwalk

#endif  // QWALK_WAVEFUNCTION_H_
