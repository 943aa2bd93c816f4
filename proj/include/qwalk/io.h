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

// Long-format CSV and JSON artifacts. Doubles are written in the shortest
// form that parses back to the same value, so outputs are byte-stable and
// round-trip exactly.
//
//   rho.csv                   t,v,rho
//   transition_matrices.csv   t,u,v,p      (u source, v target)
//   trajectories.csv          traj_id,t,vertex
//   convergence.csv           M,t,tvd
//
// Vertex tuples of K walkers are written as "u1|u2|...".

#ifndef QWALK_IO_H_
#define QWALK_IO_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwalk/equivalence.h"
#include "qwalk/rejection.h"
#include "qwalk/trajectory.h"
#include "qwalk/transition_matrix.h"

namespace qwalk {

inline constexpr const char* kToolVersion = "0.1.0";

std::string FormatDouble(double x);
double ParseDouble(std::string_view text);

// "v" for one walker, "u1|u2|..." otherwise.
std::string StateLabel(std::size_t state, std::size_t num_vertices,
                       std::size_t num_walkers);
std::size_t ParseStateLabel(std::string_view label, std::size_t num_vertices,
                            std::size_t num_walkers);

void WriteRhoCsv(std::ostream& out, std::span<const std::vector<double>> rho,
                 std::size_t num_vertices, std::size_t num_walkers);
std::vector<std::vector<double>> ReadRhoCsv(std::istream& in,
                                            std::size_t num_vertices,
                                            std::size_t num_walkers);
nlohmann::json RhoJson(std::span<const std::vector<double>> rho);

void WriteMatricesCsv(std::ostream& out, std::span<const TransitionMatrix> ps,
                      std::size_t num_vertices, std::size_t num_walkers);
std::vector<TransitionMatrix> ReadMatricesCsv(std::istream& in,
                                              std::size_t num_vertices,
                                              std::size_t num_walkers);

// Compact little-endian binary form of the matrix sequence, for large
// tuple spaces.
void WriteMatricesBinary(std::ostream& out, std::span<const TransitionMatrix> ps);
std::vector<TransitionMatrix> ReadMatricesBinary(std::istream& in);

void WriteTrajectoriesCsv(std::ostream& out, const TrajectoryEnsemble& ensemble,
                          std::size_t num_vertices, std::size_t num_walkers);
// traj_id,t,x0,x1,... with unwrapped torus coordinates; traj_id "mean" holds
// the ensemble average.
void WriteUnfoldedCsv(std::ostream& out, const PortGraph& torus,
                      const TrajectoryEnsemble& ensemble);
void WriteConvergenceCsv(std::ostream& out, std::span<const ConvergenceRow> rows);

nlohmann::json ToJson(const TheoremReport& report);
nlohmann::json ToJson(const RejectionReport& report);

}  // namespace qwalk

#endif  // QWALK_IO_H_
