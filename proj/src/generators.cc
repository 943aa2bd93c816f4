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

#include "qwalk/generators.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "qwalk/error.h"
#include "qwalk/rng.h"

namespace qwalk {

PortGraph Torus(std::span<const std::size_t> dims) {
  if (dims.empty()) throw ValidationError("torus needs at least one dimension");
  std::size_t n = 1;
  for (std::size_t d : dims) {
    // Extent 2 would make +x and -x the same neighbour (a multi-edge).
    if (d < 3) throw ValidationError("torus extents must be >= 3");
    n *= d;
  }
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t stride = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t x = (v / stride) % dims[k];
      const std::size_t base = v - x * stride;
      lists[v].push_back(static_cast<Vertex>(base + ((x + 1) % dims[k]) * stride));
      lists[v].push_back(
          static_cast<Vertex>(base + ((x + dims[k] - 1) % dims[k]) * stride));
      stride *= dims[k];
    }
  }
  PortGraph g = PortGraph::FromNeighborLists(std::move(lists));
  g.torus_dims_.assign(dims.begin(), dims.end());
  return g;
}

PortGraph Torus(std::initializer_list<std::size_t> dims) {
  return Torus(std::span<const std::size_t>(dims.begin(), dims.size()));
}

PortGraph Cycle(std::size_t n) { return Torus({n}); }

PortGraph Complete(std::size_t n) {
  if (n < 2) throw DegenerateGraphError("complete graph needs >= 2 vertices");
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) lists[u].push_back(static_cast<Vertex>(v));
    }
  }
  return PortGraph::FromNeighborLists(std::move(lists));
}

PortGraph RandomRegular(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (degree == 0 || degree >= n || (n * degree) % 2 != 0) {
    throw ValidationError("no simple " + std::to_string(degree) +
                          "-regular graph on " + std::to_string(n) +
                          " vertices");
  }
  Rng rng(seed);
  constexpr int kMaxTries = 100000;
  std::vector<Vertex> points(n * degree);
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      points[i] = static_cast<Vertex>(i / degree);
    }
    for (std::size_t i = points.size(); i > 1; --i) {
      std::swap(points[i - 1], points[rng.Below(i)]);
    }
    std::set<std::pair<Vertex, Vertex>> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const Vertex a = points[i];
      const Vertex b = points[i + 1];
      simple = a != b && edges.insert(std::minmax(a, b)).second;
    }
    if (!simple) continue;
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    return PortGraph::FromEdges(n, list);
  }
  throw ValidationError("pairing model failed to produce a simple graph");
}

namespace {

// Kuhn's augmenting path search on the remaining bipartite edges.
bool Augment(std::size_t u, const std::vector<std::vector<Vertex>>& remaining,
             std::vector<char>& visited, std::vector<std::size_t>& match_right,
             std::vector<std::size_t>& match_left) {
  for (Vertex w : remaining[u]) {
    if (visited[w]) continue;
    visited[w] = 1;
    if (match_right[w] == SIZE_MAX ||
        Augment(match_right[w], remaining, visited, match_right, match_left)) {
      match_right[w] = u;
      match_left[u] = w;
      return true;
    }
  }
  return false;
}

}  // namespace

PortGraph OrderPortsForMovingShift(const PortGraph& g) {
  if (!g.is_regular()) {
    throw ValidationError(
        "moving-shift port ordering requires a regular graph");
  }
  const std::size_t n = g.num_vertices();
  auto remaining = g.NeighborLists();
  std::vector<std::vector<Vertex>> ordered(n);
  for (std::size_t c = 0; c < g.max_degree(); ++c) {
    std::vector<std::size_t> match_right(n, SIZE_MAX);
    std::vector<std::size_t> match_left(n, SIZE_MAX);
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<char> visited(n, 0);
      if (!Augment(u, remaining, visited, match_right, match_left)) {
        throw ConsistencyError("regular bipartite cover has no perfect matching");
      }
    }
    for (std::size_t u = 0; u < n; ++u) {
      const Vertex w = static_cast<Vertex>(match_left[u]);
      ordered[u].push_back(w);
      auto& r = remaining[u];
      r.erase(std::find(r.begin(), r.end(), w));
    }
  }
  return PortGraph::FromNeighborLists(std::move(ordered));
}

std::vector<std::size_t> TorusCoordinates(const PortGraph& torus, Vertex v) {
  const auto& dims = torus.torus_dims();
  if (dims.empty()) throw ApplicabilityError("graph is not a generated torus");
  if (v >= torus.num_vertices()) {
    throw IndexError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<std::size_t> x(dims.size());
  std::size_t rest = v;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    x[k] = rest % dims[k];
    rest /= dims[k];
  }
  return x;
}

}  // namespace qwalk
