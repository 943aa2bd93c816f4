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

#include "qwalk/transition_matrix.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

double TransitionColumn::Sum() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

void TransitionMatrix::AddColumn(std::size_t source, TransitionColumn column) {
  if (source >= num_states_) {
    throw IndexError("column " + std::to_string(source) + " out of range");
  }
  if (!sources_.empty() && source <= sources_.back()) {
    throw ValidationError("columns must be added in increasing source order");
  }
  if (column.targets.size() != column.probs.size()) {
    throw ValidationError("column targets and probabilities differ in length");
  }
  for (std::size_t i = 0; i < column.targets.size(); ++i) {
    if (column.targets[i] >= num_states_ ||
        (i > 0 && column.targets[i] <= column.targets[i - 1])) {
      throw ValidationError("column targets must be in range and ascending");
    }
  }
  sources_.push_back(source);
  columns_.push_back(std::move(column));
}

const TransitionColumn* TransitionMatrix::column(std::size_t source) const {
  const auto it = std::lower_bound(sources_.begin(), sources_.end(), source);
  if (it == sources_.end() || *it != source) return nullptr;
  return &columns_[it - sources_.begin()];
}

double TransitionMatrix::entry(std::size_t to, std::size_t from) const {
  const TransitionColumn* col = column(from);
  if (col == nullptr) return 0.0;
  const auto it = std::lower_bound(col->targets.begin(), col->targets.end(), to);
  if (it == col->targets.end() || *it != to) return 0.0;
  return col->probs[it - col->targets.begin()];
}

std::vector<double> TransitionMatrix::Apply(std::span<const double> rho) const {
  if (rho.size() != num_states_) {
    throw ValidationError("distribution length " + std::to_string(rho.size()) +
                          " does not match matrix size " +
                          std::to_string(num_states_));
  }
  std::vector<double> out(num_states_, 0.0);
  for (std::size_t k = 0; k < sources_.size(); ++k) {
    const double mass = rho[sources_[k]];
    if (mass == 0.0) continue;
    const TransitionColumn& col = columns_[k];
    for (std::size_t i = 0; i < col.targets.size(); ++i) {
      out[col.targets[i]] += col.probs[i] * mass;
    }
  }
  return out;
}

}  // namespace qwalk
