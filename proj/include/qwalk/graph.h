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

#ifndef QWALK_GRAPH_H_
#define QWALK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace qwalk {

using Vertex = std::uint32_t;
using Port = std::uint32_t;
// Position in the flattened (vertex, port) enumeration.
using BasisIndex = std::size_t;

// A symmetric simple graph whose out-edges carry port labels.
//
// Port c of vertex v is the c-th entry of v's ordered neighbour list, so
// eta(v, c) is a table lookup. sigma(u, v) is the port of v that points back
// at u, which makes the flip-flop shift (v, c) -> (eta(v, c), sigma(v, eta))
// an involution on the basis. The graph is immutable once built.
class PortGraph {
 public:
  // Ports follow the order given in `lists`. Throws ValidationError for
  // asymmetric, self-looped or duplicated adjacency, DegenerateGraphError for
  // isolated vertices.
  static PortGraph FromNeighborLists(std::vector<std::vector<Vertex>> lists);

  // Symmetrises an undirected edge list; every neighbour list is sorted.
  static PortGraph FromEdges(std::size_t num_vertices,
                             std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  // Total number of (vertex, port) pairs, i.e. the directed edge count.
  std::size_t dimension() const { return targets_.size(); }
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const { return max_degree_; }
  bool is_regular() const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t port_offset(Vertex v) const;

  Vertex eta(Vertex v, Port c) const;
  // Port of v associated with its in-neighbour u.
  Port sigma(Vertex u, Vertex v) const;
  // Port c of u such that eta(u, c) == v.
  Port sigma_inv(Vertex v, Vertex u) const;
  // sigma(v, eta(v, c)) in O(1).
  Port reverse_port(Vertex v, Port c) const;
  bool has_edge(Vertex u, Vertex v) const;

  BasisIndex index(Vertex v, Port c) const;
  Vertex owner(BasisIndex i) const { return owner_[i]; }
  Port port_of(BasisIndex i) const {
    return static_cast<Port>(i - offsets_[owner_[i]]);
  }
  // eta for a flattened basis index.
  Vertex target(BasisIndex i) const { return targets_[i]; }
  // Flattened index of the reverse port, i.e. index(eta(v,c), reverse_port).
  BasisIndex reverse_index(BasisIndex i) const {
    return offsets_[targets_[i]] + reverse_[i];
  }

  // Extents of the generating torus; empty for graphs that are not tori.
  const std::vector<std::size_t>& torus_dims() const { return torus_dims_; }

  // Stable 64-bit FNV-1a hash of the port-labelled adjacency.
  std::uint64_t Fingerprint() const;

  std::vector<std::vector<Vertex>> NeighborLists() const;

 private:
  PortGraph() = default;
  friend PortGraph Torus(std::span<const std::size_t> dims);

  void CheckVertex(Vertex v) const;

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<Port> reverse_;
  std::vector<Vertex> owner_;
  std::size_t max_degree_ = 0;
  std::vector<std::size_t> torus_dims_;
};

using GraphPtr = std::shared_ptr<const PortGraph>;

// The K-fold graph whose vertices are tuples of walker positions. Tuples are
// handled as mixed-radix integers and never materialised as an adjacency.
class ProductGraph {
 public:
  ProductGraph(GraphPtr base, std::size_t num_walkers);

  const PortGraph& base() const { return *base_; }
  const GraphPtr& shared_base() const { return base_; }
  std::size_t num_walkers() const { return num_walkers_; }
  // |V|^K.
  std::size_t num_tuples() const { return num_tuples_; }

  std::size_t degree(std::span<const Vertex> tuple) const;
  std::size_t degree(std::size_t tuple_index) const;

  std::size_t TupleIndex(std::span<const Vertex> tuple) const;
  std::vector<Vertex> Tuple(std::size_t tuple_index) const;
  // True iff every coordinate moves along an edge of the base graph.
  bool has_edge(std::size_t from, std::size_t to) const;
  std::vector<std::size_t> Successors(std::size_t tuple_index) const;

 private:
  void CheckArity(std::span<const Vertex> tuple) const;

  GraphPtr base_;
  std::size_t num_walkers_;
  std::size_t num_tuples_;
};

}  // namespace qwalk

#endif  // QWALK_GRAPH_H_
