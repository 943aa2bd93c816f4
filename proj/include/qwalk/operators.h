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

#ifndef QWALK_OPERATORS_H_
#define QWALK_OPERATORS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/error.h"
#include "qwalk/graph.h"
#include "qwalk/matrix.h"

namespace qwalk {

enum class Validation { kUnitary, kSkip };

// Block-diagonal coin W: one d(v) x d(v) block per vertex. Entry (j, k) of
// the block at v is the weight sending port k to port j.
class CoinOperator {
 public:
  static CoinOperator Hadamard(const PortGraph& g);
  static CoinOperator Grover(const PortGraph& g);
  static CoinOperator Identity(const PortGraph& g);
  // Independent random unitary block per vertex.
  static CoinOperator Random(const PortGraph& g, std::uint64_t seed);
  static CoinOperator Explicit(const PortGraph& g, std::vector<CMatrix> blocks,
                               Validation validation = Validation::kUnitary);
  // The same block on every vertex; all degrees must match its dimension.
  static CoinOperator Uniform(const PortGraph& g, const CMatrix& block,
                              Validation validation = Validation::kUnitary);

  std::size_t num_vertices() const { return blocks_.size(); }
  const CMatrix& block(Vertex v) const { return blocks_[v]; }
  const std::string& name() const { return name_; }

  // Throws ValidationError on a block-dimension mismatch with `g`.
  void CheckCompatible(const PortGraph& g) const;

 private:
  CoinOperator(std::vector<CMatrix> blocks, std::string name)
      : blocks_(std::move(blocks)), name_(std::move(name)) {}

  std::vector<CMatrix> blocks_;
  std::string name_;
};

// Basis permutation S. The amplitude on (v, c) moves to target(index(v, c)).
class ShiftOperator {
 public:
  // (v, c) -> (eta(v, c), c). Unitary only when every port map
  // v -> eta(v, c) is a permutation; see OrderPortsForMovingShift.
  static ShiftOperator Moving(const PortGraph& g);
  // (v, c) -> (eta(v, c), sigma(v, eta(v, c))): the default convention.
  static ShiftOperator FlipFlop(const PortGraph& g);
  // (v, c) -> (eta(v, c), landing_ports[v][c]).
  static ShiftOperator Explicit(const PortGraph& g,
                                const std::vector<std::vector<Port>>& landing_ports);
  // Leaves every basis state in place. Does not follow graph edges; useful
  // only as a reference operator.
  static ShiftOperator Identity(const PortGraph& g);

  std::size_t dimension() const { return targets_.size(); }
  BasisIndex target(BasisIndex i) const { return targets_[i]; }
  std::span<const BasisIndex> permutation() const { return targets_; }
  const std::string& name() const { return name_; }
  bool respects_edges() const { return respects_edges_; }

  void CheckCompatible(const PortGraph& g) const;

 private:
  ShiftOperator(std::vector<BasisIndex> targets, std::string name,
                bool respects_edges);
  static ShiftOperator FromLanding(const PortGraph& g, std::string name,
                                   const auto& landing_port);

  std::vector<BasisIndex> targets_;
  std::string name_;
  bool respects_edges_;
};

// Interaction U, block-diagonal in the vertex tuple: it never moves a walker,
// only mixes the joint port amplitudes of walkers at fixed positions.
class InteractionOperator {
 public:
  enum class Kind { kIdentity, kCoincidencePhase, kExplicit };

  static InteractionOperator Identity();
  // Multiplies |v, c> by exp(i * phi * m), m the number of walker pairs that
  // share a vertex in v.
  static InteractionOperator CoincidencePhase(double phi);
  // Blocks keyed by vertex tuple act on the joint port space of that tuple,
  // indexed row-major with walker 0 slowest. Missing tuples act as identity.
  static InteractionOperator Explicit(std::map<std::vector<Vertex>, CMatrix> blocks,
                                      Validation validation = Validation::kUnitary);

  Kind kind() const { return kind_; }
  double phi() const { return phi_; }
  const std::map<std::vector<Vertex>, CMatrix>& blocks() const { return blocks_; }
  std::string name() const;

 private:
  Kind kind_ = Kind::kIdentity;
  double phi_ = 0.0;
  std::map<std::vector<Vertex>, CMatrix> blocks_;
};

// Piecewise-constant map t -> operator. Entry i applies from its start time
// until the next entry's start time.
template <typename Op>
class Schedule {
 public:
  Schedule(Op op) { entries_.emplace_back(0, std::move(op)); }  // NOLINT

  Schedule& Then(std::size_t from, Op op) {
    if (from <= entries_.back().first) {
      throw ValidationError("schedule start times must increase");
    }
    entries_.emplace_back(from, std::move(op));
    return *this;
  }

  const Op& at(std::size_t t) const {
    auto it = entries_.rbegin();
    while (it->first > t) ++it;
    return it->second;
  }

  const std::vector<std::pair<std::size_t, Op>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::size_t, Op>> entries_;
};

// Everything that drives one walk. `coins` and `shifts` hold either one
// schedule shared by all walkers or one per walker.
struct WalkOperators {
  std::vector<Schedule<CoinOperator>> coins;
  std::vector<Schedule<ShiftOperator>> shifts;
  Schedule<InteractionOperator> interaction = InteractionOperator::Identity();

  WalkOperators(Schedule<CoinOperator> coin, Schedule<ShiftOperator> shift)
      : coins{std::move(coin)}, shifts{std::move(shift)} {}
  WalkOperators(Schedule<CoinOperator> coin, Schedule<ShiftOperator> shift,
                Schedule<InteractionOperator> u)
      : coins{std::move(coin)}, shifts{std::move(shift)}, interaction(std::move(u)) {}
  WalkOperators(std::vector<Schedule<CoinOperator>> c,
                std::vector<Schedule<ShiftOperator>> s,
                Schedule<InteractionOperator> u)
      : coins(std::move(c)), shifts(std::move(s)), interaction(std::move(u)) {}

  const CoinOperator& coin(std::size_t walker, std::size_t t) const;
  const ShiftOperator& shift(std::size_t walker, std::size_t t) const;
  // Throws unless the operators fit `g` and there are 1 or `num_walkers`
  // schedules of each kind.
  void CheckCompatible(const PortGraph& g, std::size_t num_walkers) const;
};

}  // namespace qwalk

#endif  // QWALK_OPERATORS_H_
