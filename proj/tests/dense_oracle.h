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

// Dense reference operators built straight from neighbour lists, without the
// library's port tables or block-sparse kernels.

#ifndef QWALK_TESTS_DENSE_ORACLE_H_
#define QWALK_TESTS_DENSE_ORACLE_H_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qwalk/graph.h"
#include "qwalk/operators.h"
#include "qwalk/wavefunction.h"

namespace qwalk::oracle {

using Dense = Eigen::MatrixXcd;
using DenseVec = Eigen::VectorXcd;

struct Layout {
  std::vector<std::vector<Vertex>> lists;
  std::vector<std::size_t> offset;
  std::size_t dim = 0;

  explicit Layout(const PortGraph& g) : lists(g.NeighborLists()) {
    for (const auto& l : lists) {
      offset.push_back(dim);
      dim += l.size();
    }
  }
  std::size_t Position(Vertex of, Vertex in) const {
    const auto& l = lists[in];
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), of) - l.begin());
  }
};

inline Dense Coin(const PortGraph& g, const CoinOperator& coin) {
  const Layout lay(g);
  Dense w = Dense::Zero(lay.dim, lay.dim);
  for (std::size_t v = 0; v < lay.lists.size(); ++v) {
    const CMatrix& b = coin.block(static_cast<Vertex>(v));
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) {
        w(lay.offset[v] + j, lay.offset[v] + k) = b(j, k);
      }
    }
  }
  return w;
}

// (v, c) -> (eta(v, c), c).
inline Dense MovingShift(const PortGraph& g) {
  const Layout lay(g);
  Dense s = Dense::Zero(lay.dim, lay.dim);
  for (std::size_t v = 0; v < lay.lists.size(); ++v) {
    for (std::size_t c = 0; c < lay.lists[v].size(); ++c) {
      s(lay.offset[lay.lists[v][c]] + c, lay.offset[v] + c) = 1.0;
    }
  }
  return s;
}

// (v, c) -> (w, position of v in w's list) with w = eta(v, c).
inline Dense FlipFlopShift(const PortGraph& g) {
  const Layout lay(g);
  Dense s = Dense::Zero(lay.dim, lay.dim);
  for (std::size_t v = 0; v < lay.lists.size(); ++v) {
    for (std::size_t c = 0; c < lay.lists[v].size(); ++c) {
      const Vertex w = lay.lists[v][c];
      s(lay.offset[w] + lay.Position(static_cast<Vertex>(v), w), lay.offset[v] + c) = 1.0;
    }
  }
  return s;
}

inline Dense Kron(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Dense KronPower(const Dense& a, std::size_t k) {
  Dense out = a;
  for (std::size_t i = 1; i < k; ++i) out = Kron(out, a);
  return out;
}

// Diagonal e^{i phi (number of coincident walker pairs)} on K walkers.
inline Dense CoincidencePhase(const PortGraph& g, std::size_t k, double phi) {
  const Layout lay(g);
  std::vector<Vertex> owner;
  for (std::size_t v = 0; v < lay.lists.size(); ++v) {
    owner.insert(owner.end(), lay.lists[v].size(), static_cast<Vertex>(v));
  }
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= lay.dim;
  Dense u = Dense::Zero(size, size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::vector<Vertex> at(k);
    std::size_t rest = idx;
    for (std::size_t w = k; w-- > 0;) {
      at[w] = owner[rest % lay.dim];
      rest /= lay.dim;
    }
    int pairs = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) pairs += at[a] == at[b];
    }
    u(idx, idx) = std::polar(1.0, phi * pairs);
  }
  return u;
}

inline DenseVec ToDense(const WaveFunction& psi) {
  DenseVec x(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) x(i) = psi[i];
  return x;
}

inline double MaxAbsDiff(const DenseVec& a, const WaveFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) m = std::max(m, std::abs(a(i) - b[i]));
  return m;
}

}  // namespace qwalk::oracle

#endif  // QWALK_TESTS_DENSE_ORACLE_H_
