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

#include <sstream>
#include <string>

#include "qwalk/rng.h"

namespace qwalk {

namespace {

void ValidateBlock(const CMatrix& block, const std::string& where) {
  const UnitarityCheck check = CheckUnitarity(block);
  if (!check.unitary) {
    throw ValidationError(where + " is not unitary: " + check.violated_condition);
  }
}

}  // namespace

CoinOperator CoinOperator::Hadamard(const PortGraph& g) {
  std::vector<CMatrix> blocks;
  blocks.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    blocks.push_back(HadamardMatrix(g.degree(static_cast<Vertex>(v))));
  }
  return CoinOperator(std::move(blocks), "hadamard");
}

CoinOperator CoinOperator::Grover(const PortGraph& g) {
  std::vector<CMatrix> blocks;
  blocks.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    blocks.push_back(GroverMatrix(g.degree(static_cast<Vertex>(v))));
  }
  return CoinOperator(std::move(blocks), "grover");
}

CoinOperator CoinOperator::Identity(const PortGraph& g) {
  std::vector<CMatrix> blocks;
  blocks.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    blocks.push_back(CMatrix::Identity(g.degree(static_cast<Vertex>(v))));
  }
  return CoinOperator(std::move(blocks), "identity");
}

CoinOperator CoinOperator::Random(const PortGraph& g, std::uint64_t seed) {
  std::vector<CMatrix> blocks;
  blocks.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    blocks.push_back(RandomUnitaryMatrix(g.degree(static_cast<Vertex>(v)),
                                         DeriveSeed(seed, v)));
  }
  return CoinOperator(std::move(blocks), "random:" + std::to_string(seed));
}

CoinOperator CoinOperator::Explicit(const PortGraph& g,
                                    std::vector<CMatrix> blocks,
                                    Validation validation) {
  CoinOperator coin(std::move(blocks), "explicit");
  coin.CheckCompatible(g);
  if (validation == Validation::kUnitary) {
    for (std::size_t v = 0; v < coin.blocks_.size(); ++v) {
      ValidateBlock(coin.blocks_[v], "coin block at vertex " + std::to_string(v));
    }
  }
  return coin;
}

CoinOperator CoinOperator::Uniform(const PortGraph& g, const CMatrix& block,
                                   Validation validation) {
  if (validation == Validation::kUnitary) ValidateBlock(block, "coin block");
  std::vector<CMatrix> blocks(g.num_vertices(), block);
  CoinOperator coin(std::move(blocks), "explicit");
  coin.CheckCompatible(g);
  return coin;
}

void CoinOperator::CheckCompatible(const PortGraph& g) const {
  if (blocks_.size() != g.num_vertices()) {
    throw ValidationError("coin has " + std::to_string(blocks_.size()) +
                          " blocks for a graph with " +
                          std::to_string(g.num_vertices()) + " vertices");
  }
  for (std::size_t v = 0; v < blocks_.size(); ++v) {
    const std::size_t d = g.degree(static_cast<Vertex>(v));
    if (blocks_[v].dim() != d) {
      throw ValidationError("coin block at vertex " + std::to_string(v) +
                            " has dimension " + std::to_string(blocks_[v].dim()) +
                            " but the vertex has degree " + std::to_string(d));
    }
  }
}

ShiftOperator::ShiftOperator(std::vector<BasisIndex> targets, std::string name,
                             bool respects_edges)
    : targets_(std::move(targets)),
      name_(std::move(name)),
      respects_edges_(respects_edges) {
  std::vector<char> hit(targets_.size(), 0);
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (targets_[i] >= targets_.size() || hit[targets_[i]]) {
      throw ValidationError(name_ + " shift is not a permutation of the basis "
                            "(two basis states land on index " +
                            std::to_string(targets_[i]) + ")");
    }
    hit[targets_[i]] = 1;
  }
}

ShiftOperator ShiftOperator::FromLanding(const PortGraph& g, std::string name,
                                         const auto& landing_port) {
  std::vector<BasisIndex> targets(g.dimension());
  for (BasisIndex i = 0; i < g.dimension(); ++i) {
    const Vertex v = g.owner(i);
    const Port c = g.port_of(i);
    const Vertex w = g.target(i);
    const Port landing = landing_port(v, c, i);
    if (landing >= g.degree(w)) {
      throw ValidationError(name + " shift sends (" + std::to_string(v) + ", " +
                            std::to_string(c) + ") to port " +
                            std::to_string(landing) + " of vertex " +
                            std::to_string(w) + ", which has degree " +
                            std::to_string(g.degree(w)));
    }
    targets[i] = g.port_offset(w) + landing;
  }
  return ShiftOperator(std::move(targets), std::move(name), true);
}

ShiftOperator ShiftOperator::Moving(const PortGraph& g) {
  return FromLanding(g, "moving", [](Vertex, Port c, BasisIndex) { return c; });
}

ShiftOperator ShiftOperator::FlipFlop(const PortGraph& g) {
  return FromLanding(g, "flip-flop", [&g](Vertex v, Port c, BasisIndex) {
    return g.reverse_port(v, c);
  });
}

ShiftOperator ShiftOperator::Explicit(
    const PortGraph& g, const std::vector<std::vector<Port>>& landing_ports) {
  if (landing_ports.size() != g.num_vertices()) {
    throw ValidationError("explicit shift needs one port list per vertex");
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (landing_ports[v].size() != g.degree(static_cast<Vertex>(v))) {
      throw ValidationError("explicit shift port list of vertex " +
                            std::to_string(v) + " does not match its degree");
    }
  }
  return FromLanding(g, "explicit", [&](Vertex v, Port c, BasisIndex) {
    return landing_ports[v][c];
  });
}

ShiftOperator ShiftOperator::Identity(const PortGraph& g) {
  std::vector<BasisIndex> targets(g.dimension());
  for (BasisIndex i = 0; i < targets.size(); ++i) targets[i] = i;
  return ShiftOperator(std::move(targets), "identity", false);
}

void ShiftOperator::CheckCompatible(const PortGraph& g) const {
  if (targets_.size() != g.dimension()) {
    throw ValidationError("shift acts on " + std::to_string(targets_.size()) +
                          " basis states but the graph has " +
                          std::to_string(g.dimension()));
  }
  if (!respects_edges_) return;
  for (BasisIndex i = 0; i < targets_.size(); ++i) {
    if (g.owner(targets_[i]) != g.target(i)) {
      throw ValidationError("shift does not follow the edge leaving basis "
                            "state " + std::to_string(i));
    }
  }
}

InteractionOperator InteractionOperator::Identity() { return {}; }

InteractionOperator InteractionOperator::CoincidencePhase(double phi) {
  InteractionOperator u;
  u.kind_ = Kind::kCoincidencePhase;
  u.phi_ = phi;
  return u;
}

InteractionOperator InteractionOperator::Explicit(
    std::map<std::vector<Vertex>, CMatrix> blocks, Validation validation) {
  if (validation == Validation::kUnitary) {
    for (const auto& [tuple, block] : blocks) {
      std::ostringstream where;
      where << "interaction block at tuple (";
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        where << (k ? "," : "") << tuple[k];
      }
      where << ")";
      ValidateBlock(block, where.str());
    }
  }
  InteractionOperator u;
  u.kind_ = Kind::kExplicit;
  u.blocks_ = std::move(blocks);
  return u;
}

std::string InteractionOperator::name() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kCoincidencePhase: {
      std::ostringstream os;
      os.precision(17);
      os << "coincidence_phase:" << phi_;
      return os.str();
    }
    case Kind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

const CoinOperator& WalkOperators::coin(std::size_t walker,
                                        std::size_t t) const {
  return coins[coins.size() == 1 ? 0 : walker].at(t);
}

const ShiftOperator& WalkOperators::shift(std::size_t walker,
                                          std::size_t t) const {
  return shifts[shifts.size() == 1 ? 0 : walker].at(t);
}

void WalkOperators::CheckCompatible(const PortGraph& g,
                                    std::size_t num_walkers) const {
  if (coins.empty() || (coins.size() != 1 && coins.size() != num_walkers)) {
    throw ValidationError("need one coin schedule or one per walker");
  }
  if (shifts.empty() || (shifts.size() != 1 && shifts.size() != num_walkers)) {
    throw ValidationError("need one shift schedule or one per walker");
  }
  for (const auto& schedule : coins) {
    for (const auto& [from, coin] : schedule.entries()) coin.CheckCompatible(g);
  }
  for (const auto& schedule : shifts) {
    for (const auto& [from, shift] : schedule.entries()) shift.CheckCompatible(g);
  }
  for (const auto& [from, u] : interaction.entries()) {
    for (const auto& [tuple, block] : u.blocks()) {
      if (tuple.size() != num_walkers) {
        throw ValidationError("interaction tuple arity does not match the "
                              "number of walkers");
      }
      std::size_t d = 1;
      for (Vertex v : tuple) d *= g.degree(v);
      if (block.dim() != d) {
        throw ValidationError("interaction block dimension does not match the "
                              "joint port space of its tuple");
      }
    }
  }
}

}  // namespace qwalk
