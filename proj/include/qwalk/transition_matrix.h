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

#ifndef QWALK_TRANSITION_MATRIX_H_
#define QWALK_TRANSITION_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

// Outgoing probabilities of one source state, targets in ascending order.
struct TransitionColumn {
  std::vector<std::size_t> targets;
  std::vector<double> probs;

  double Sum() const;
};

// Sparse column-stochastic matrix P(t), stored by source column. Entry
// (v, u) is the probability of moving from u to v, so pi(t+1) = P(t) pi(t).
// Columns that were never materialised are absent, not zero.
class TransitionMatrix {
 public:
  TransitionMatrix(std::size_t time, std::size_t num_states)
      : time_(time), num_states_(num_states) {}

  // Sources must be added in strictly increasing order.
  void AddColumn(std::size_t source, TransitionColumn column);

  std::size_t time() const { return time_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_columns() const { return sources_.size(); }
  std::span<const std::size_t> sources() const { return sources_; }
  const TransitionColumn& column_at(std::size_t k) const { return columns_[k]; }
  // nullptr when the column was not materialised.
  const TransitionColumn* column(std::size_t source) const;

  double entry(std::size_t to, std::size_t from) const;
  // P rho; absent columns contribute nothing.
  std::vector<double> Apply(std::span<const double> rho) const;

 private:
  std::size_t time_;
  std::size_t num_states_;
  std::vector<std::size_t> sources_;
  std::vector<TransitionColumn> columns_;
};

}  // namespace qwalk

#endif  // QWALK_TRANSITION_MATRIX_H_
