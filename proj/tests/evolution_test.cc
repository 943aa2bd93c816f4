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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "dense_oracle.h"
#include "qwalk/error.h"
#include "qwalk/generators.h"
#include "qwalk/rng.h"

namespace qwalk {
namespace {

GraphPtr Share(PortGraph g) { return std::make_shared<const PortGraph>(std::move(g)); }

WaveFunction RandomState(const GraphPtr& g, std::size_t k, std::uint64_t seed) {
  WaveFunction psi(g, k);
  Rng rng(seed);
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = Complex(rng.Normal(), rng.Normal());
  psi.Normalize();
  return psi;
}

TEST(WaveFunction, LocalizedAndBudget) {
  const GraphPtr g = Share(Cycle(4));
  const WaveFunction psi = WaveFunction::Localized(g, 2, 1);
  EXPECT_EQ(psi.size(), 8u);
  EXPECT_EQ(psi.amplitude(2, 1), Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(psi.SquaredNorm(), 1.0);
  EXPECT_THROW(WaveFunction(g, 3, 100), ResourceError);
  EXPECT_THROW(WaveFunction::Localized(g, 4, 0), IndexError);
}

TEST(WaveFunction, ProductIndexing) {
  const GraphPtr g = Share(Cycle(4));
  const WaveFunction a = WaveFunction::Localized(g, 1, 0);
  const WaveFunction b = WaveFunction::Localized(g, 3, 1);
  const std::vector<WaveFunction> parts = {a, b};
  const WaveFunction joint = WaveFunction::Product(parts);
  EXPECT_EQ(joint.size(), 64u);
  // Joint index i_0 * 8 + i_1.
  EXPECT_EQ(joint[g->index(1, 0) * 8 + g->index(3, 1)], Complex(1.0, 0.0));
  const auto rho = joint.VertexDistribution();
  EXPECT_DOUBLE_EQ(rho[1 * 4 + 3], 1.0);
}

TEST(Step, HadamardCycleFromOrigin) {
  const GraphPtr g = Share(Cycle(4));
  const WalkOperators ops(CoinOperator::Hadamard(*g), ShiftOperator::Moving(*g));
  const WaveFunction psi = Step(WaveFunction::Localized(g, 0, 0), ops, 0);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(psi.amplitude(1, 0).real(), s, 1e-15);
  EXPECT_NEAR(psi.amplitude(3, 1).real(), s, 1e-15);
  EXPECT_NEAR(psi.SquaredNorm(), 1.0, 1e-15);
  const auto rho = psi.VertexDistribution();
  EXPECT_NEAR(rho[1], 0.5, 1e-15);
  EXPECT_NEAR(rho[3], 0.5, 1e-15);
}

TEST(Step, GroverCycleIsSwap) {
  // Two ports: Grover swaps them, so the moving shift sends |0,0> back.
  const GraphPtr g = Share(Cycle(6));
  const WalkOperators ops(CoinOperator::Grover(*g), ShiftOperator::Moving(*g));
  const WaveFunction psi = Step(WaveFunction::Localized(g, 0, 0), ops, 0);
  EXPECT_NEAR(std::abs(psi.amplitude(5, 1)), 1.0, 1e-15);
}

struct Case {
  const char* name;
  PortGraph graph;
};

std::vector<Case> SmallGraphs() {
  std::vector<Case> out;
  out.push_back({"cycle3", Cycle(3)});
  out.push_back({"cycle8", Cycle(8)});
  out.push_back({"torus3x3", Torus({3, 3})});
  out.push_back({"complete5", Complete(5)});
  out.push_back({"regular8x3", OrderPortsForMovingShift(RandomRegular(8, 3, 4))});
  out.push_back({"star", PortGraph::FromNeighborLists({{1, 2, 3}, {0}, {0}, {0}})});
  return out;
}

TEST(Step, MatchesDenseProductSingleWalker) {
  for (auto& c : SmallGraphs()) {
    const GraphPtr g = Share(c.graph);
    if (g->num_vertices() > 9) continue;
    const std::vector<CoinOperator> coins = {CoinOperator::Grover(*g),
                                             CoinOperator::Random(*g, 3)};
    std::vector<std::pair<ShiftOperator, oracle::Dense>> shifts;
    shifts.emplace_back(ShiftOperator::FlipFlop(*g), oracle::FlipFlopShift(*g));
    if (g->is_regular() && c.name != std::string("complete5")) {
      shifts.emplace_back(ShiftOperator::Moving(*g), oracle::MovingShift(*g));
    }
    for (const CoinOperator& coin : coins) {
      for (auto& [shift, s_dense] : shifts) {
        const WalkOperators ops(coin, shift);
        const WaveFunction psi = RandomState(g, 1, 17);
        const oracle::DenseVec expect = s_dense * oracle::Coin(*g, coin) * oracle::ToDense(psi);
        EXPECT_LE(oracle::MaxAbsDiff(expect, Step(psi, ops, 0)), 1e-12)
            << c.name << " " << coin.name() << " " << shift.name();
      }
    }
  }
}

TEST(Step, MatchesDenseProductTwoWalkersWithInteraction) {
  const GraphPtr g = Share(Cycle(4));
  const CoinOperator coin = CoinOperator::Random(*g, 8);
  const ShiftOperator shift = ShiftOperator::Moving(*g);
  const oracle::Dense sw =
      oracle::KronPower(oracle::MovingShift(*g), 2) * oracle::KronPower(oracle::Coin(*g, coin), 2);
  for (double phi : {0.0, std::numbers::pi, 0.7}) {
    const WalkOperators ops(coin, shift, InteractionOperator::CoincidencePhase(phi));
    const WaveFunction psi = RandomState(g, 2, 99);
    const oracle::DenseVec expect =
        sw * oracle::CoincidencePhase(*g, 2, phi) * oracle::ToDense(psi);
    EXPECT_LE(oracle::MaxAbsDiff(expect, Step(psi, ops, 0)), 1e-12) << phi;
  }
}

TEST(Step, ThreeWalkersPairCount) {
  const GraphPtr g = Share(Cycle(3));
  const CoinOperator coin = CoinOperator::Grover(*g);
  const ShiftOperator shift = ShiftOperator::FlipFlop(*g);
  const WalkOperators ops(coin, shift, InteractionOperator::CoincidencePhase(0.3));
  const WaveFunction psi = RandomState(g, 3, 5);
  const oracle::DenseVec expect = oracle::KronPower(oracle::FlipFlopShift(*g), 3) *
                                  oracle::KronPower(oracle::Coin(*g, coin), 3) *
                                  oracle::CoincidencePhase(*g, 3, 0.3) * oracle::ToDense(psi);
  EXPECT_LE(oracle::MaxAbsDiff(expect, Step(psi, ops, 0)), 1e-12);
}

TEST(Step, PerWalkerOperators) {
  const GraphPtr g = Share(Cycle(4));
  const CoinOperator h = CoinOperator::Hadamard(*g);
  const CoinOperator r = CoinOperator::Random(*g, 1);
  const WalkOperators ops({h, r}, {ShiftOperator::Moving(*g), ShiftOperator::FlipFlop(*g)},
                          InteractionOperator::Identity());
  const WaveFunction psi = RandomState(g, 2, 3);
  const oracle::Dense op =
      oracle::Kron(oracle::MovingShift(*g) * oracle::Coin(*g, h),
                   oracle::FlipFlopShift(*g) * oracle::Coin(*g, r));
  EXPECT_LE(oracle::MaxAbsDiff(op * oracle::ToDense(psi), Step(psi, ops, 0)), 1e-12);
}

TEST(Evolve, NormPreservedAndScheduleApplied) {
  const GraphPtr g = Share(Torus({4, 4}));
  Schedule<CoinOperator> coins(CoinOperator::Hadamard(*g));
  coins.Then(5, CoinOperator::Grover(*g));
  const WalkOperators ops(coins, ShiftOperator::Moving(*g));
  WaveFunction psi = WaveFunction::Localized(g, 0, 0);
  oracle::DenseVec x = oracle::ToDense(psi);
  const oracle::Dense s = oracle::MovingShift(*g);
  const oracle::Dense h = s * oracle::Coin(*g, CoinOperator::Hadamard(*g));
  const oracle::Dense gr = s * oracle::Coin(*g, CoinOperator::Grover(*g));
  for (std::size_t t = 0; t < 20; ++t) {
    psi = Step(psi, ops, t);
    x = (t < 5 ? h : gr) * x;
    EXPECT_NEAR(psi.SquaredNorm(), 1.0, 1e-12);
    EXPECT_LE(oracle::MaxAbsDiff(x, psi), 1e-12) << t;
  }
  const auto rho = EvolveDistributions(WaveFunction::Localized(g, 0, 0), ops, 20);
  EXPECT_EQ(rho.size(), 21u);
}

TEST(Evolve, IndependentWalkersFactorise) {
  const GraphPtr g = Share(Cycle(5));
  const WalkOperators ops(CoinOperator::Random(*g, 4), ShiftOperator::Moving(*g));
  const WaveFunction a = RandomState(g, 1, 1);
  const WaveFunction b = RandomState(g, 1, 2);
  const std::vector<WaveFunction> parts = {a, b};
  const auto joint = EvolveDistributions(WaveFunction::Product(parts), ops, 12);
  const auto ra = EvolveDistributions(a, ops, 12);
  const auto rb = EvolveDistributions(b, ops, 12);
  for (std::size_t t = 0; t <= 12; ++t) {
    for (std::size_t u = 0; u < 5; ++u) {
      for (std::size_t v = 0; v < 5; ++v) {
        EXPECT_NEAR(joint[t][u * 5 + v], ra[t][u] * rb[t][v], 1e-13);
      }
    }
  }
}

}  // namespace
}  // namespace qwalk
