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

#include "weyl/numerics.hpp"

#include <cmath>
#include <string>

#include "weyl/error.hpp"

namespace weyl {

void TolerancePolicy::validate() const {
  if (!(unitarity_tol > 0) || !(eig_tol > 0) || !(coord_tol >= 1e-12) ||
      volume_mc_samples == 0) {
    throw Error(ErrorCode::ConstraintViolation,
                "tolerances must be positive, coord_tol >= 1e-12 and "
                "volume_mc_samples > 0");
  }
}

double unitarity_residual(const Mat4 &m) {
  return max_abs(m * m.adjoint() - Mat4::Identity());
}

double unitarity_residual(const Mat2 &m) {
  return max_abs(m * m.adjoint() - Mat2::Identity());
}

void require_unitary(const Mat4 &m, double tol, const char *what) {
  const double r = unitarity_residual(m);
  if (!(r <= tol)) {
    throw Error(ErrorCode::NotUnitary, std::string(what) +
                                           " is not unitary (residual " +
                                           std::to_string(r) + ")");
  }
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

Mat2 rx(double theta) {
  return std::cos(theta / 2) * pauli::identity() -
         kI * std::sin(theta / 2) * pauli::x();
}
Mat2 ry(double theta) {
  return std::cos(theta / 2) * pauli::identity() -
         kI * std::sin(theta / 2) * pauli::y();
}
Mat2 rz(double theta) {
  return std::cos(theta / 2) * pauli::identity() -
         kI * std::sin(theta / 2) * pauli::z();
}

namespace {

double joint_off_norm(const RealMat4 &a, const RealMat4 &b) {
  double s = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) s += a(p, q) * a(p, q) + b(p, q) * b(p, q);
  return std::sqrt(s);
}

// A <- R^T A R for the plane rotation with R(p,p)=R(q,q)=c, R(q,p)=s,
// R(p,q)=-s.
void rotate(RealMat4 &a, int p, int q, double c, double s) {
  for (int k = 0; k < 4; ++k) {
    const double ap = a(k, p), aq = a(k, q);
    a(k, p) = c * ap + s * aq;
    a(k, q) = -s * ap + c * aq;
  }
  for (int k = 0; k < 4; ++k) {
    const double ap = a(p, k), aq = a(q, k);
    a(p, k) = c * ap + s * aq;
    a(q, k) = -s * ap + c * aq;
  }
}

void rotate_columns(RealMat4 &v, int p, int q, double c, double s) {
  for (int k = 0; k < 4; ++k) {
    const double vp = v(k, p), vq = v(k, q);
    v(k, p) = c * vp + s * vq;
    v(k, q) = -s * vp + c * vq;
  }
}

}  // namespace

SymmetricUnitaryEigen eig_symmetric_unitary(const Mat4 &m, double input_tol,
                                            double residual_tol) {
  if (!(max_abs(m - m.transpose()) <= input_tol)) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  }
  require_unitary(m, input_tol, "symmetric eigenproblem input");

  const Mat4 sym = 0.5 * (m + m.transpose());
  RealMat4 a = sym.real();
  RealMat4 b = sym.imag();
  RealMat4 v = RealMat4::Identity();

  constexpr int kMaxSweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (joint_off_norm(a, b) <= 1e-15) {
      converged = true;
      break;
    }
    double largest_sine = 0.0;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a(p, q)) + std::abs(b(p, q)) < 1e-300) continue;
        const double h1x = a(p, p) - a(q, q), h1y = 2 * a(p, q);
        const double h2x = b(p, p) - b(q, q), h2y = 2 * b(p, q);
        const double g11 = h1x * h1x + h2x * h2x;
        const double g12 = h1x * h1y + h2x * h2y;
        const double g22 = h1y * h1y + h2y * h2y;
        // Principal eigenvector (x, y) of G, with x >= 0.
        const double psi = 0.5 * std::atan2(2 * g12, g11 - g22);
        const double x = std::cos(psi), y = std::sin(psi);
        const double c = std::sqrt(0.5 * (1 + x));
        const double s = y / (2 * c);
        if (std::abs(s) < 1e-300) continue;
        rotate(a, p, q, c, s);
        rotate(b, p, q, c, s);
        rotate_columns(v, p, q, c, s);
        largest_sine = std::max(largest_sine, std::abs(s));
      }
    }
    if (largest_sine < 1e-15) converged = true;
  }
  if (!converged) {
    throw Error(ErrorCode::ConvergenceFailure,
                "joint Jacobi iteration exceeded the sweep cap");
  }

  if (v.determinant() < 0) v.col(0) = -v.col(0);

  SymmetricUnitaryEigen out;
  out.vectors = v;
  Eigen::Vector4cd d;
  for (int j = 0; j < 4; ++j) {
    const Complex z{a(j, j), b(j, j)};
    out.eigenvalues[j] = z / std::abs(z);
    d(j) = out.eigenvalues[j];
  }
  const Mat4 vc = v.cast<Complex>();
  out.residual = max_abs(m - vc * d.asDiagonal() * vc.transpose());
  if (!(out.residual <= residual_tol)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "eigendecomposition residual " + std::to_string(out.residual));
  }
  return out;
}

TensorFactors tensor_factor(const Mat4 &m) {
  // Realignment: r(2*i1 + j1, 2*i2 + j2) = m(2*i1 + i2, 2*j1 + j2) is the
  // rank-one matrix vec(a) vec(b)^T when m = a (x) b.
  Mat4 r;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + j1, 2 * i2 + j2) = m(2 * i1 + i2, 2 * j1 + j2);
  Eigen::Index p = 0, q = 0;
  r.cwiseAbs().maxCoeff(&p, &q);
  TensorFactors out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.first(i, j) = r(2 * i + j, q);
      out.second(i, j) = r(p, 2 * i + j) / r(p, q);
    }
  }
  out.residual = max_abs(m - kron(out.first, out.second));
  return out;
}

LocalFactors su2_factor(const Mat4 &m) {
  const TensorFactors t = tensor_factor(m);
  LocalFactors out;
  out.first = t.first / std::sqrt(t.first.determinant());
  out.second = t.second / std::sqrt(t.second.determinant());
  const Mat4 k = kron(out.first, out.second);
  const Complex overlap = (k.adjoint() * m).trace() / 4.0;
  out.phase = overlap / std::abs(overlap);
  out.residual = max_abs(m - out.phase * k);
  return out;
}

Mat2 haar_su2(Rng &rng) {
  std::normal_distribution<double> normal;
  double q[4];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double &v : q) {
      v = normal(rng);
      norm += v * v;
    }
  } while (norm < 1e-300);
  norm = std::sqrt(norm);
  const Complex a{q[0] / norm, q[3] / norm};
  const Complex b{q[2] / norm, q[1] / norm};
  Mat2 u;
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

Mat4 haar_su2_pair(Rng &rng) {
  const Mat2 a = haar_su2(rng);
  const Mat2 b = haar_su2(rng);
  return kron(a, b);
}

Mat4 haar_unitary4(Rng &rng) {
  std::normal_distribution<double> normal;
  Mat4 z;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z(i, j) = Complex{normal(rng), normal(rng)};
  Eigen::HouseholderQR<Mat4> qr(z);
  Mat4 q = qr.householderQ();
  const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace weyl
