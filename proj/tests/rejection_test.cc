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

#include "qwalk/rejection.h"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "qwalk/error.h"
#include "qwalk/evolution.h"
#include "qwalk/generators.h"
#include "qwalk/trajectory.h"

namespace qwalk {
namespace {

GraphPtr Share(PortGraph g) { return std::make_shared<const PortGraph>(std::move(g)); }

struct Exact {
  double acceptance = 0.0;
  std::vector<std::vector<double>> marginals;
};

// Enumerates all |V|^L sequences with weight prod_t rho(tau_t, t) and keeps
// the paths.
Exact Enumerate(const PortGraph& g, const std::vector<std::vector<double>>& rho,
                std::size_t length) {
  const std::size_t n = g.num_vertices();
  Exact out;
  out.marginals.assign(length, std::vector<double>(n, 0.0));
  std::vector<std::size_t> seq(length, 0);
  std::size_t total = 1;
  for (std::size_t t = 0; t < length; ++t) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t t = 0; t < length; ++t) {
      seq[t] = rest % n;
      rest /= n;
    }
    double w = 1.0;
    bool path = true;
    for (std::size_t t = 0; t < length; ++t) {
      w *= rho[t][seq[t]];
      if (t > 0) path = path && g.has_edge(static_cast<Vertex>(seq[t - 1]),
                                           static_cast<Vertex>(seq[t]));
    }
    if (!path || w == 0.0) continue;
    out.acceptance += w;
    for (std::size_t t = 0; t < length; ++t) out.marginals[t][seq[t]] += w;
  }
  for (auto& m : out.marginals) {
    for (double& x : m) x /= out.acceptance;
  }
  return out;
}

std::vector<std::vector<double>> Rho(const GraphPtr& g, const WaveFunction& psi0,
                                     std::size_t steps, bool grover = false) {
  const WalkOperators ops(grover ? CoinOperator::Grover(*g) : CoinOperator::Hadamard(*g),
                          grover ? ShiftOperator::FlipFlop(*g) : ShiftOperator::Moving(*g));
  return EvolveDistributions(psi0, ops, steps);
}

WaveFunction Mixed(const GraphPtr& g) {
  WaveFunction psi(g);
  psi[g->index(0, 0)] = 1.0;
  psi[g->index(1, 1)] = 0.5;
  psi.Normalize();
  return psi;
}

TEST(Rejection, MatchesEnumerationOnCycle) {
  const GraphPtr g = Share(Cycle(4));
  const auto rho = Rho(g, Mixed(g), 2);
  const RejectionReport r = RejectionSample(rho, *g, 3, 1'000'000, 17);
  const Exact exact = Enumerate(*g, rho, 3);
  EXPECT_EQ(r.attempts, 1'000'000u);
  EXPECT_LE(r.accepted, r.attempts);
  EXPECT_DOUBLE_EQ(r.acceptance_rate, static_cast<double>(r.accepted) / r.attempts);
  // Five standard errors of a binomial proportion.
  const double se = std::sqrt(exact.acceptance * (1 - exact.acceptance) / 1e6);
  EXPECT_NEAR(r.acceptance_rate, exact.acceptance, 5 * se);
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_LE(TotalVariation(r.marginals[t], exact.marginals[t]), 0.02) << t;
  }
  // Conditioning on paths moves the marginals away from rho.
  EXPECT_GE(r.max_tvd, 0.01);
}

TEST(Rejection, LocalizedCycleStartAcceptsEverything) {
  // Supports alternate between the two colour classes, so every draw is a
  // path and the marginals equal rho.
  const GraphPtr g = Share(Cycle(4));
  const auto rho = Rho(g, WaveFunction::Localized(g, 0, 0), 2);
  const RejectionReport r = RejectionSample(rho, *g, 3, 10000, 1);
  EXPECT_EQ(r.accepted, r.attempts);
  EXPECT_LE(r.max_tvd, 0.03);
}

TEST(Rejection, CompleteGraphRateFollowsOverlap) {
  // On K5 a sequence fails only where tau(t) == tau(t+1).
  const GraphPtr g = Share(Complete(5));
  const auto rho = Rho(g, WaveFunction::Localized(g, 0, 0), 2, true);
  const RejectionReport two = RejectionSample(rho, *g, 2, 100000, 3);
  EXPECT_EQ(two.acceptance_rate, 1.0);
  const RejectionReport three = RejectionSample(rho, *g, 3, 1'000'000, 3);
  const Exact exact = Enumerate(*g, rho, 3);
  EXPECT_LT(exact.acceptance, 1.0);
  const double se = std::sqrt(exact.acceptance * (1 - exact.acceptance) / 1e6);
  EXPECT_NEAR(three.acceptance_rate, exact.acceptance, 5 * se);
}

TEST(Rejection, NothingAcceptedIsReportedNotThrown) {
  const GraphPtr g = Share(Cycle(5));
  const std::vector<std::vector<double>> rho = {{1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}};
  const RejectionReport r = RejectionSample(rho, *g, 2, 1000, 1);
  EXPECT_TRUE(r.none_accepted);
  EXPECT_EQ(r.accepted, 0u);
  EXPECT_EQ(r.acceptance_rate, 0.0);
  EXPECT_TRUE(r.marginals.empty());
}

TEST(Rejection, PathCounts) {
  const GraphPtr g = Share(Torus({4, 4}));
  const std::vector<std::vector<double>> rho(3, std::vector<double>(16, 1.0 / 16));
  const RejectionReport r = RejectionSample(rho, *g, 3, 1000, 1);
  EXPECT_EQ(r.path_count, 16.0 * 4 * 4);
  EXPECT_EQ(r.sequence_count, 4096.0);
  ASSERT_TRUE(r.torus_path_estimate.has_value());
  EXPECT_EQ(*r.torus_path_estimate, 16.0 * 2 * 2);
  EXPECT_FALSE(RejectionSample(rho, *Share(Complete(16)), 3, 10, 1).torus_path_estimate);
  EXPECT_EQ(CountPaths(*g, 1), 16.0);
}

TEST(Rejection, AttemptCapAndValidation) {
  const GraphPtr g = Share(Cycle(4));
  const std::vector<std::vector<double>> rho(2, std::vector<double>(4, 0.25));
  const RejectionReport r = RejectionSample(rho, *g, 2, 5000, 1, 1000);
  EXPECT_EQ(r.requested_attempts, 5000u);
  EXPECT_EQ(r.attempts, 1000u);
  EXPECT_THROW(RejectionSample(rho, *g, 3, 10, 1), ValidationError);
  EXPECT_THROW(RejectionSample(rho, *g, 0, 10, 1), ValidationError);
  const std::vector<std::vector<double>> short_rho(2, std::vector<double>(3, 1.0 / 3));
  EXPECT_THROW(RejectionSample(short_rho, *g, 2, 10, 1), ValidationError);
}

TEST(Rejection, SeededReproducibility) {
  const GraphPtr g = Share(Cycle(4));
  const auto rho = Rho(g, Mixed(g), 2);
  const RejectionReport a = RejectionSample(rho, *g, 3, 20000, 5);
  const RejectionReport b = RejectionSample(rho, *g, 3, 20000, 5);
  EXPECT_EQ(a.accepted, b.accepted);
  EXPECT_EQ(a.marginals, b.marginals);
}

}  // namespace
}  // namespace qwalk
