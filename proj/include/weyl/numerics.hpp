// Copyright 2026 The Weyl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace weyl {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using RealMat4 = Eigen::Matrix4d;

/// The single source of randomness. Every stochastic routine takes one of
/// these by reference; nothing seeds itself.
using Rng = std::mt19937_64;

inline constexpr Complex kI{0.0, 1.0};

struct TolerancePolicy {
  double unitarity_tol = 1e-10;
  double eig_tol = 1e-9;
  double coord_tol = 1e-8;
  std::uint64_t volume_mc_samples = 100000;
  std::uint64_t rng_seed = 20240611;

  /// Throws ConstraintViolation unless every tolerance is positive,
  /// coord_tol >= 1e-12 and the sample count is nonzero.
  void validate() const;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
  return m.cwiseAbs().maxCoeff();
}

/// max |M M^dagger - I|.
double unitarity_residual(const Mat4 &m);
double unitarity_residual(const Mat2 &m);

/// Throws NotUnitary when unitarity_residual(m) > tol.
void require_unitary(const Mat4 &m, double tol, const char *what);

Mat4 kron(const Mat2 &a, const Mat2 &b);

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

// Single-qubit rotations, R_a(t) = exp(-i t sigma_a / 2).
Mat2 rx(double theta);
Mat2 ry(double theta);
Mat2 rz(double theta);

/// Eigendecomposition M = O diag(eigenvalues) O^T of a symmetric unitary.
struct SymmetricUnitaryEigen {
  std::array<Complex, 4> eigenvalues;
  RealMat4 vectors;  // columns are eigenvectors, det = +1
  double residual = 0.0;
};

/// Diagonalizes a complex symmetric unitary matrix with a real special
/// orthogonal eigenbasis. Re(M) and Im(M) are real symmetric and commute,
/// so a joint Jacobi iteration diagonalizes both at once; this stays exact
/// on degenerate and near-degenerate spectra where a generic complex
/// eigensolver would hand back complex eigenvectors.
///
/// Throws NotSymmetric, NotUnitary, or ConvergenceFailure.
SymmetricUnitaryEigen eig_symmetric_unitary(const Mat4 &m,
                                            double input_tol = 1e-10,
                                            double residual_tol = 1e-9);

/// Splits a 4x4 product a (x) b back into its factors via the rank-one
/// realignment. residual is max|m - a (x) b|, which measures how far m is
/// from a tensor product.
struct TensorFactors {
  Mat2 first;
  Mat2 second;
  double residual = 0.0;
};
TensorFactors tensor_factor(const Mat4 &m);

/// Factors a local unitary into phase * (a (x) b) with a, b in SU(2).
struct LocalFactors {
  Complex phase{1.0, 0.0};
  Mat2 first;
  Mat2 second;
  double residual = 0.0;
};
LocalFactors su2_factor(const Mat4 &m);

Mat2 haar_su2(Rng &rng);
Mat4 haar_su2_pair(Rng &rng);
/// Haar-distributed U(4) via QR of a complex Ginibre matrix with the
/// diagonal phase correction.
Mat4 haar_unitary4(Rng &rng);

}  // namespace weyl
