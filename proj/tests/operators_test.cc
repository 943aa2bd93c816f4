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

#include "qwalk/operators.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qwalk/error.h"
#include "qwalk/generators.h"

namespace qwalk {
namespace {

TEST(Coin, HadamardNeedsPowerOfTwoDegrees) {
  EXPECT_NO_THROW(CoinOperator::Hadamard(Torus({4, 4})));
  EXPECT_THROW(CoinOperator::Hadamard(Complete(4)), UnsupportedDimensionError);
}

TEST(Coin, GroverOnMixedDegrees) {
  const PortGraph g = PortGraph::FromNeighborLists({{1, 2, 3}, {0}, {0}, {0}});
  const CoinOperator w = CoinOperator::Grover(g);
  EXPECT_EQ(w.block(0).dim(), 3u);
  EXPECT_EQ(w.block(1).dim(), 1u);
  // The one-port Grover block is the identity.
  EXPECT_NEAR(w.block(1)(0, 0).real(), 1.0, 1e-15);
}

TEST(Coin, ExplicitRejectsNonUnitaryWithCondition) {
  const PortGraph g = Cycle(4);
  const CMatrix scaled = HadamardMatrix(2) * Complex(1.1, 0.0);
  try {
    CoinOperator::Uniform(g, scaled);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("column normalisation"), std::string::npos);
  }
  EXPECT_NO_THROW(CoinOperator::Uniform(g, scaled, Validation::kSkip));
}

TEST(Coin, BlockDimensionMismatch) {
  EXPECT_THROW(CoinOperator::Uniform(Cycle(4), HadamardMatrix(4)), ValidationError);
  const CoinOperator w = CoinOperator::Grover(Cycle(5));
  EXPECT_THROW(w.CheckCompatible(Cycle(4)), ValidationError);
  EXPECT_THROW(w.CheckCompatible(Complete(5)), ValidationError);
}

TEST(Coin, RandomBlocksAreUnitaryAndSeeded) {
  const PortGraph g = RandomRegular(10, 3, 2);
  const CoinOperator a = CoinOperator::Random(g, 5);
  const CoinOperator b = CoinOperator::Random(g, 5);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    EXPECT_TRUE(CheckUnitarity(a.block(v), 1e-12).unitary);
    EXPECT_EQ(a.block(v).MaxAbsDiff(b.block(v)), 0.0);
  }
  EXPECT_GT(a.block(0).MaxAbsDiff(a.block(1)), 1e-6);
}

bool IsPermutation(const ShiftOperator& s, std::size_t n) {
  std::set<BasisIndex> seen;
  for (BasisIndex i = 0; i < n; ++i) seen.insert(s.target(i));
  return seen.size() == n && *seen.rbegin() == n - 1;
}

TEST(Shift, MovingKeepsPortAndFollowsEdge) {
  const PortGraph t = Torus({3, 5});
  const ShiftOperator s = ShiftOperator::Moving(t);
  EXPECT_TRUE(IsPermutation(s, t.dimension()));
  for (BasisIndex i = 0; i < t.dimension(); ++i) {
    EXPECT_EQ(t.owner(s.target(i)), t.target(i));
    EXPECT_EQ(t.port_of(s.target(i)), t.port_of(i));
  }
}

TEST(Shift, FlipFlopLandsOnReturnPort) {
  const PortGraph g = RandomRegular(12, 3, 9);
  const ShiftOperator s = ShiftOperator::FlipFlop(g);
  EXPECT_TRUE(IsPermutation(s, g.dimension()));
  for (BasisIndex i = 0; i < g.dimension(); ++i) {
    const BasisIndex j = s.target(i);
    EXPECT_EQ(g.owner(j), g.target(i));
    EXPECT_EQ(g.target(j), g.owner(i));
    // An involution.
    EXPECT_EQ(s.target(j), i);
  }
}

TEST(Shift, ExplicitMustBeBijective) {
  const PortGraph c = Cycle(4);
  // Every arrival on port 0: two sources collide on each landing state.
  const std::vector<std::vector<Port>> collide(4, std::vector<Port>{0, 0});
  EXPECT_THROW(ShiftOperator::Explicit(c, collide), ValidationError);
  const std::vector<std::vector<Port>> moving(4, std::vector<Port>{0, 1});
  const ShiftOperator s = ShiftOperator::Explicit(c, moving);
  const ShiftOperator m = ShiftOperator::Moving(c);
  EXPECT_TRUE(std::ranges::equal(s.permutation(), m.permutation()));
}

TEST(Shift, IdentityDoesNotRespectEdges) {
  const ShiftOperator s = ShiftOperator::Identity(Cycle(5));
  EXPECT_FALSE(s.respects_edges());
  EXPECT_TRUE(ShiftOperator::Moving(Cycle(5)).respects_edges());
}

TEST(Interaction, Kinds) {
  EXPECT_EQ(InteractionOperator::Identity().kind(), InteractionOperator::Kind::kIdentity);
  const auto u = InteractionOperator::CoincidencePhase(1.5);
  EXPECT_EQ(u.kind(), InteractionOperator::Kind::kCoincidencePhase);
  EXPECT_DOUBLE_EQ(u.phi(), 1.5);
}

TEST(Schedule, PiecewiseConstant) {
  const PortGraph c = Cycle(4);
  Schedule<CoinOperator> s(CoinOperator::Hadamard(c));
  s.Then(3, CoinOperator::Grover(c));
  EXPECT_EQ(s.at(0).name(), s.at(2).name());
  EXPECT_NE(s.at(2).name(), s.at(3).name());
  EXPECT_EQ(s.at(100).name(), s.at(3).name());
  EXPECT_THROW(s.Then(3, CoinOperator::Identity(c)), ValidationError);
}

TEST(WalkOperators, CompatibilityChecks) {
  const PortGraph c = Cycle(4);
  const WalkOperators ops(CoinOperator::Hadamard(c), ShiftOperator::Moving(c));
  EXPECT_NO_THROW(ops.CheckCompatible(c, 1));
  EXPECT_NO_THROW(ops.CheckCompatible(c, 3));
  EXPECT_THROW(ops.CheckCompatible(Cycle(5), 1), ValidationError);
  const WalkOperators two({CoinOperator::Hadamard(c), CoinOperator::Grover(c)},
                          {ShiftOperator::Moving(c)},
                          InteractionOperator::Identity());
  EXPECT_NO_THROW(two.CheckCompatible(c, 2));
  EXPECT_THROW(two.CheckCompatible(c, 3), ValidationError);
}

}  // namespace
}  // namespace qwalk
