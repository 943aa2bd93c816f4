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

#ifndef QWALK_MATRIX_H_
#define QWALK_MATRIX_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTolerance = 1e-10;

// Small dense square complex matrix, row-major. Used for coin and
// interaction blocks, which are at most a few dozen rows.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  CMatrix(std::size_t dim, std::vector<Complex> row_major);

  static CMatrix Identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> data() const { return data_; }

  CMatrix Adjoint() const;
  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator*(Complex s) const;
  // Kronecker product; `rhs` indexes the fastest-varying factor.
  CMatrix Kron(const CMatrix& rhs) const;

  // y = M x, in place over a strided slice of length dim().
  void ApplyStrided(Complex* x, std::size_t stride, Complex* scratch) const;

  // Largest |M(i,j) - other(i,j)|.
  double MaxAbsDiff(const CMatrix& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// Result of checking the unitarity conditions column by column: every column
// has unit norm, and distinct columns are orthogonal.
struct UnitarityCheck {
  bool unitary = true;
  // Human-readable name of the first violated condition; empty when unitary.
  std::string violated_condition;
  double max_norm_deviation = 0.0;
  double max_column_overlap = 0.0;
};

UnitarityCheck CheckUnitarity(const CMatrix& m,
                              double tolerance = kUnitarityTolerance);

// H_2 tensored with itself log2(dim) times; dim must be a power of two.
CMatrix HadamardMatrix(std::size_t dim);
// Grover diffusion (2/D) J - I.
CMatrix GroverMatrix(std::size_t dim);
// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
CMatrix RandomUnitaryMatrix(std::size_t dim, std::uint64_t seed);

}  // namespace qwalk

#endif  // QWALK_MATRIX_H_
