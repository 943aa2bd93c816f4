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

#include "qwalk/wavefunction.h"

#include <cmath>
#include <string>

#include "qwalk/error.h"

namespace qwalk {

WaveFunction::WaveFunction(GraphPtr graph, std::size_t num_walkers,
                           std::size_t budget)
    : graph_(std::move(graph)), num_walkers_(num_walkers), num_tuples_(1) {
  if (!graph_) throw ValidationError("wavefunction needs a graph");
  if (num_walkers_ == 0) throw ValidationError("number of walkers must be >= 1");
  const std::size_t n = graph_->dimension();
  std::size_t size = 1;
  for (std::size_t k = 0; k < num_walkers_; ++k) {
    if (size > budget / n) {
      throw ResourceError(std::to_string(num_walkers_) + " walkers on a basis " +
                          "of dimension " + std::to_string(n) +
                          " exceed the amplitude budget of " +
                          std::to_string(budget));
    }
    size *= n;
    num_tuples_ *= graph_->num_vertices();
  }
  amplitudes_.assign(size, Complex(0.0));
}

WaveFunction WaveFunction::Localized(GraphPtr graph, Vertex v, Port c) {
  WaveFunction psi(std::move(graph));
  psi.amplitudes_[psi.graph_->index(v, c)] = 1.0;
  return psi;
}

WaveFunction WaveFunction::Product(std::span<const WaveFunction> walkers,
                                   std::size_t budget) {
  if (walkers.empty()) throw ValidationError("product of zero walkers");
  for (const auto& w : walkers) {
    if (w.num_walkers_ != 1 || w.graph_ != walkers[0].graph_) {
      throw ValidationError("product states need single walkers on one graph");
    }
  }
  WaveFunction psi(walkers[0].graph_, walkers.size(), budget);
  psi.amplitudes_[0] = 1.0;
  std::size_t filled = 1;
  // Expand digit by digit; walker 0 ends up most significant.
  std::vector<Complex> next;
  for (const auto& w : walkers) {
    next.assign(filled * w.size(), Complex(0.0));
    for (std::size_t i = 0; i < filled; ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        next[i * w.size() + j] = psi.amplitudes_[i] * w.amplitudes_[j];
      }
    }
    filled = next.size();
    std::copy(next.begin(), next.end(), psi.amplitudes_.begin());
  }
  return psi;
}

Complex WaveFunction::amplitude(Vertex v, Port c) const {
  if (num_walkers_ != 1) {
    throw ValidationError("amplitude(v, c) is only defined for one walker");
  }
  return amplitudes_[graph_->index(v, c)];
}

double WaveFunction::SquaredNorm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return s;
}

double WaveFunction::Normalize() {
  const double s = SquaredNorm();
  if (s == 0.0) throw ValidationError("cannot normalise the zero state");
  const double scale = 1.0 / std::sqrt(s);
  for (Complex& a : amplitudes_) a *= scale;
  return s;
}

std::vector<double> WaveFunction::StateProbabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

std::size_t WaveFunction::VertexTupleOf(std::size_t i) const {
  const std::size_t n = graph_->dimension();
  const std::size_t nv = graph_->num_vertices();
  std::size_t tuple = 0;
  std::size_t place = 1;
  for (std::size_t k = 0; k < num_walkers_; ++k) {
    tuple += graph_->owner(i % n) * place;
    i /= n;
    place *= nv;
  }
  return tuple;
}

std::vector<double> WaveFunction::VertexDistribution() const {
  std::vector<double> rho(num_tuples_, 0.0);
  if (num_walkers_ == 1) {
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
      rho[graph_->owner(i)] += std::norm(amplitudes_[i]);
    }
    return rho;
  }
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    const double p = std::norm(amplitudes_[i]);
    if (p != 0.0) rho[VertexTupleOf(i)] += p;
  }
  return rho;
}

}  // namespace qwalk
