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

#include "qwalk/matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.h"
#include "qwalk/rng.h"

namespace qwalk {

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) {
    throw ValidationError("matrix of dimension " + std::to_string(dim_) +
                          " needs " + std::to_string(dim_ * dim_) +
                          " entries, got " + std::to_string(data_.size()));
  }
}

CMatrix CMatrix::Identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::Adjoint() const {
  CMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw ValidationError("matrix dimension mismatch");
  CMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(i, k);
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) += a * rhs(k, j);
    }
  }
  return m;
}

CMatrix CMatrix::operator*(Complex s) const {
  CMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

CMatrix CMatrix::Kron(const CMatrix& rhs) const {
  const std::size_t n = dim_ * rhs.dim_;
  CMatrix m(n);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Complex a = (*this)(i, j);
      for (std::size_t k = 0; k < rhs.dim_; ++k) {
        for (std::size_t l = 0; l < rhs.dim_; ++l) {
          m(i * rhs.dim_ + k, j * rhs.dim_ + l) = a * rhs(k, l);
        }
      }
    }
  }
  return m;
}

void CMatrix::ApplyStrided(Complex* x, std::size_t stride,
                           Complex* scratch) const {
  for (std::size_t i = 0; i < dim_; ++i) scratch[i] = x[i * stride];
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex acc = 0.0;
    const Complex* row = data_.data() + i * dim_;
    for (std::size_t j = 0; j < dim_; ++j) acc += row[j] * scratch[j];
    x[i * stride] = acc;
  }
}

double CMatrix::MaxAbsDiff(const CMatrix& other) const {
  if (other.dim_ != dim_) throw ValidationError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

UnitarityCheck CheckUnitarity(const CMatrix& m, double tolerance) {
  UnitarityCheck check;
  const std::size_t n = m.dim();
  std::ostringstream first;
  for (std::size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, k));
    const double dev = std::abs(norm - 1.0);
    check.max_norm_deviation = std::max(check.max_norm_deviation, dev);
    if (dev > tolerance && check.unitary) {
      check.unitary = false;
      first << "column normalisation sum_i |w_ik|^2 = 1 violated at column "
            << k << " (sum = " << norm << ")";
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(m(i, j)) * m(i, k);
      const double mag = std::abs(overlap);
      check.max_column_overlap = std::max(check.max_column_overlap, mag);
      if (mag > tolerance && check.unitary) {
        check.unitary = false;
        first << "column orthogonality sum_i conj(w_ij) w_ik = 0 violated for "
              << "columns " << j << " and " << k << " (|overlap| = " << mag
              << ")";
      }
    }
  }
  check.violated_condition = first.str();
  return check;
}

CMatrix HadamardMatrix(std::size_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw UnsupportedDimensionError(
        "Hadamard coin needs a power-of-two dimension, got " +
        std::to_string(dim));
  }
  const double s = 1.0 / std::sqrt(2.0);
  const CMatrix h2(2, {s, s, s, -s});
  CMatrix h = h2;
  for (std::size_t d = 2; d < dim; d *= 2) h = h.Kron(h2);
  return h;
}

CMatrix GroverMatrix(std::size_t dim) {
  if (dim == 0) throw ValidationError("Grover coin needs dimension >= 1");
  const double off = 2.0 / static_cast<double>(dim);
  CMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = i == j ? off - 1.0 : off;
  }
  return g;
}

CMatrix RandomUnitaryMatrix(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw ValidationError("unitary needs dimension >= 1");
  Rng rng(seed);
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = {rng.Normal(), rng.Normal()};
  }
  // Modified Gram-Schmidt over columns, applied twice for orthogonality to
  // working precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += std::conj(m(i, j)) * m(i, k);
        for (std::size_t i = 0; i < dim; ++i) m(i, k) -= dot * m(i, j);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) norm += std::norm(m(i, k));
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < dim; ++i) m(i, k) /= norm;
    }
  }
  return m;
}

}  // namespace qwalk
