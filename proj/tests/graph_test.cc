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

#include "qwalk/graph.h"

#include <gtest/gtest.h>

#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "qwalk/error.h"
#include "qwalk/generators.h"
#include "qwalk/operators.h"

namespace qwalk {
namespace {

PortGraph SortedC4() {
  const std::vector<std::pair<Vertex, Vertex>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return PortGraph::FromEdges(4, edges);
}

TEST(PortGraph, SortedCycleEtaAndSigma) {
  const PortGraph g = SortedC4();
  EXPECT_EQ(g.dimension(), 8u);
  EXPECT_EQ(g.eta(0, 0), 1u);
  EXPECT_EQ(g.eta(0, 1), 3u);
  EXPECT_EQ(g.eta(1, 0), 0u);
  EXPECT_EQ(g.eta(1, 1), 2u);
  // Vertex 0 sits at position 0 of vertex 1's list [0, 2].
  EXPECT_EQ(g.sigma(0, 1), 0u);
  EXPECT_EQ(g.sigma(2, 1), 1u);
  EXPECT_EQ(g.sigma_inv(2, 1), 1u);
}

TEST(PortGraph, SigmaInvertsEta) {
  for (const PortGraph& g : {SortedC4(), Torus({3, 4}), Complete(5),
                             RandomRegular(10, 3, 7)}) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (Port c = 0; c < g.degree(v); ++c) {
        const Vertex w = g.eta(v, c);
        EXPECT_EQ(g.sigma_inv(w, v), c);
        EXPECT_EQ(g.eta(w, g.sigma(v, w)), v);
        EXPECT_EQ(g.eta(w, g.reverse_port(v, c)), v);
        EXPECT_EQ(g.target(g.reverse_index(g.index(v, c))), v);
      }
    }
  }
}

TEST(PortGraph, BasisIndexRoundTrip) {
  const PortGraph g = RandomRegular(12, 4, 3);
  for (BasisIndex i = 0; i < g.dimension(); ++i) {
    EXPECT_EQ(g.index(g.owner(i), g.port_of(i)), i);
  }
}

TEST(PortGraph, RejectsMalformedInput) {
  EXPECT_THROW(PortGraph::FromNeighborLists({{0}, {}}), ValidationError);
  EXPECT_THROW(PortGraph::FromNeighborLists({{1, 1}, {0}}), ValidationError);
  EXPECT_THROW(PortGraph::FromNeighborLists({{1}, {}}), ValidationError);
  EXPECT_THROW(PortGraph::FromNeighborLists({{1}, {0}, {}}), DegenerateGraphError);
  EXPECT_THROW(PortGraph::FromNeighborLists({{5}, {0}}), ValidationError);
}

TEST(PortGraph, QueriesCheckRange) {
  const PortGraph g = SortedC4();
  EXPECT_THROW(g.eta(4, 0), IndexError);
  EXPECT_THROW(g.eta(0, 2), IndexError);
  EXPECT_THROW(g.sigma(0, 2), ValidationError);
}

TEST(PortGraph, FingerprintTracksPortOrder) {
  EXPECT_EQ(SortedC4().Fingerprint(), SortedC4().Fingerprint());
  EXPECT_NE(SortedC4().Fingerprint(), Cycle(4).Fingerprint());
}

TEST(Generators, TorusShapeAndPorts) {
  const PortGraph t = Torus({10, 10});
  EXPECT_EQ(t.num_vertices(), 100u);
  EXPECT_EQ(t.dimension(), 400u);
  EXPECT_TRUE(t.is_regular());
  // Ports are (+x0, -x0, +x1, -x1); vertex id is x0 + 10 x1.
  EXPECT_EQ(t.eta(0, 0), 1u);
  EXPECT_EQ(t.eta(0, 1), 9u);
  EXPECT_EQ(t.eta(0, 2), 10u);
  EXPECT_EQ(t.eta(0, 3), 90u);
  EXPECT_EQ(TorusCoordinates(t, 37), (std::vector<std::size_t>{7, 3}));
  EXPECT_THROW(Torus({2, 5}), ValidationError);
}

TEST(Generators, CycleUsesTorusPorts) {
  const PortGraph c = Cycle(4);
  EXPECT_EQ(c.eta(1, 0), 2u);
  EXPECT_EQ(c.eta(1, 1), 0u);
  EXPECT_NO_THROW(ShiftOperator::Moving(c));
  // The sorted edge-list C4 has no consistent +/- direction.
  EXPECT_THROW(ShiftOperator::Moving(SortedC4()), ValidationError);
}

TEST(Generators, CompleteGraph) {
  const PortGraph k = Complete(5);
  EXPECT_EQ(k.dimension(), 20u);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(k.has_edge(u, v), u != v);
  }
}

TEST(Generators, RandomRegularIsSimpleAndSeeded) {
  const PortGraph a = RandomRegular(20, 3, 42);
  const PortGraph b = RandomRegular(20, 3, 42);
  EXPECT_EQ(a.Fingerprint(), b.Fingerprint());
  EXPECT_TRUE(a.is_regular());
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    const auto n = a.neighbors(v);
    EXPECT_EQ(std::set<Vertex>(n.begin(), n.end()).size(), 3u);
  }
  EXPECT_THROW(RandomRegular(5, 3, 1), ValidationError);
}

TEST(Generators, MatchingOrderMakesMovingShiftUnitary) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PortGraph g = OrderPortsForMovingShift(RandomRegular(16, 4, seed));
    EXPECT_NO_THROW(ShiftOperator::Moving(g));
  }
}

TEST(ProductGraph, DegreeAndEdges) {
  auto base = std::make_shared<const PortGraph>(Torus({10, 10}));
  const ProductGraph p(base, 2);
  EXPECT_EQ(p.num_tuples(), 10000u);
  const std::vector<Vertex> tuple = {0, 55};
  EXPECT_EQ(p.degree(tuple), 16u);
  const std::size_t from = p.TupleIndex(tuple);
  EXPECT_EQ(p.Tuple(from), tuple);
  EXPECT_TRUE(p.has_edge(from, p.TupleIndex(std::vector<Vertex>{1, 45})));
  EXPECT_FALSE(p.has_edge(from, p.TupleIndex(std::vector<Vertex>{0, 45})));
  EXPECT_EQ(p.Successors(from).size(), 16u);
  EXPECT_THROW(p.degree(std::vector<Vertex>{0}), ValidationError);
}

}  // namespace
}  // namespace qwalk
