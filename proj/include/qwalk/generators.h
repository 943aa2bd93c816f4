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

#ifndef QWALK_GENERATORS_H_
#define QWALK_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/graph.h"

namespace qwalk {

// Periodic lattice with the given extents (each >= 3). Vertex ids are
// x0 + n0 * (x1 + n1 * (x2 + ...)); ports are ordered (+x0, -x0, +x1, -x1,
// ...), so port 2k moves forward along axis k.
PortGraph Torus(std::span<const std::size_t> dims);
PortGraph Torus(std::initializer_list<std::size_t> dims);

// One-dimensional torus: port 0 is +1, port 1 is -1.
PortGraph Cycle(std::size_t n);

PortGraph Complete(std::size_t n);

// Uniform simple d-regular graph from the pairing model. Neighbour lists are
// sorted.
PortGraph RandomRegular(std::size_t n, std::size_t degree, std::uint64_t seed);

// Reorders ports so that, for every c, v -> eta(v, c) is a permutation of V.
// That is exactly what the moving shift needs to be unitary. Works for every
// regular graph (a regular bipartite double cover splits into perfect
// matchings); throws ValidationError for irregular graphs.
PortGraph OrderPortsForMovingShift(const PortGraph& g);

// Torus coordinates of vertex v.
std::vector<std::size_t> TorusCoordinates(const PortGraph& torus, Vertex v);

}  // namespace qwalk

#endif  // QWALK_GENERATORS_H_
