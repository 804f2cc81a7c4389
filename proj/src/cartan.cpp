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

#include "weyl/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "weyl/error.hpp"
#include "weyl/symmetry.hpp"

namespace weyl {

using std::numbers::pi;

const Mat4 &magic_basis() {
  static const Mat4 q = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 m;
    m << s, 0, 0, kI * s,
         0, kI * s, s, 0,
         0, kI * s, -s, 0,
         s, 0, 0, -kI * s;
    return m;
  }();
  return q;
}

Mat4 nonlocal_hamiltonian(const CartanCoord &c) {
  return c.c1 * kron(pauli::x(), pauli::x()) + c.c2 * kron(pauli::y(), pauli::y()) +
         c.c3 * kron(pauli::z(), pauli::z());
}

std::array<double, 4> hamiltonian_spectrum(const CartanCoord &c) {
  return {c.c1 - c.c2 + c.c3, c.c1 + c.c2 - c.c3, -c.c1 - c.c2 - c.c3, -c.c1 + c.c2 + c.c3};
}

Mat4 canonical_gate(const CartanCoord &c) {
  const auto h = hamiltonian_spectrum(c);
  Eigen::Vector4cd d;
  for (int j = 0; j < 4; ++j) d(j) = std::polar(1.0, h[j] / 2);
  const Mat4 &q = magic_basis();
  return q * d.asDiagonal() * q.adjoint();
}

Mat4 makhlin_matrix(const Mat4 &u) {
  const Mat4 &q = magic_basis();
  const Mat4 mb = q.adjoint() * u * q;
  return mb.transpose() * mb;
}

LocalInvariants local_invariants(const Mat4 &u, double unitarity_tol) {
  require_unitary(u, unitarity_tol, "local_invariants input");
  const Mat4 m = makhlin_matrix(u);
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  LocalInvariants out;
  out.g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - tr2) / (4.0 * det);
  if (std::abs(g2.imag()) > 1e-9) {
    throw Error(ErrorCode::ConstraintViolation,
                "G2 has imaginary part " + std::to_string(g2.imag()));
  }
  out.g2 = g2.real();
  return out;
}

double invariant_mismatch(const LocalInvariants &a, const LocalInvariants &b) {
  const double d2 = a.g2 - b.g2;
  return std::norm(a.g1 - b.g1) + d2 * d2;
}

Mat4 KakDecomposition::left() const { return kron(k1, k2); }
Mat4 KakDecomposition::right() const { return kron(k3, k4); }
Mat4 KakDecomposition::reassemble() const {
  return std::polar(1.0, global_phase) * left() * canonical_gate(coord) * right();
}

KakDecomposition kak_decompose(const Mat4 &u, double unitarity_tol) {
  require_unitary(u, unitarity_tol, "kak_decompose input");
  const Mat4 &q = magic_basis();

  // Special-unitary representative; the quarter root of det is absorbed
  // into the global phase at the end.
  const Complex det = u.determinant();
  const Mat4 us = u * std::polar(1.0, -std::arg(det) / 4);
  const Mat4 mb = q.adjoint() * us * q;
  Mat4 m = mb.transpose() * mb;
  m = 0.5 * (m + m.transpose()).eval();

  const SymmetricUnitaryEigen eig = eig_symmetric_unitary(m, 1e-9, 1e-9);

  // Arguments with zero sum, so that exp(i theta/2) has determinant one.
  std::array<double, 4> theta{};
  double sum = 0.0;
  for (int j = 0; j < 4; ++j) {
    theta[j] = std::arg(eig.eigenvalues[j]);
    sum += theta[j];
  }
  for (int guard = 0; guard < 4 && std::abs(sum) > 1.0; ++guard) {
    if (sum > 0) {
      auto it = std::max_element(theta.begin(), theta.end());
      *it -= 2 * pi;
      sum -= 2 * pi;
    } else {
      auto it = std::min_element(theta.begin(), theta.end());
      *it += 2 * pi;
      sum += 2 * pi;
    }
  }
  if (std::abs(sum) > 1e-6) {
    throw Error(ErrorCode::ConvergenceFailure, "eigenphases do not sum to zero");
  }

  const Mat4 o = eig.vectors.cast<Complex>();
  Eigen::Vector4cd dinv;
  for (int j = 0; j < 4; ++j) dinv(j) = std::polar(1.0, -theta[j] / 2);
  const RealMat4 o1 = (mb * o * dinv.asDiagonal()).real();

  Mat4 left = q * o1.cast<Complex>() * q.adjoint();
  Mat4 right = q * o.transpose() * q.adjoint();

  const CartanCoord raw{(theta[0] + theta[1]) / 2, (theta[1] + theta[3]) / 2,
                        (theta[0] + theta[3]) / 2};
  const Canonicalized canon = canonicalize_with_moves(raw);
  const MoveLocals ml = move_locals(canon.moves);
  left = left * ml.left;
  right = ml.right * right;

  const LocalFactors lf = su2_factor(left);
  const LocalFactors rf = su2_factor(right);

  KakDecomposition out;
  out.k1 = lf.first;
  out.k2 = lf.second;
  out.k3 = rf.first;
  out.k4 = rf.second;
  out.coord = canon.coord;
  const Mat4 w = out.left() * canonical_gate(out.coord) * out.right();
  const Complex overlap = (w.adjoint() * u).trace() / 4.0;
  out.global_phase = std::arg(overlap);
  out.residual = max_abs(u - out.reassemble());
  if (!(out.residual <= 1e-8)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "KAK reconstruction residual " + std::to_string(out.residual));
  }
  return out;
}

CartanCoord cartan_coordinates(const Mat4 &u, double unitarity_tol) {
  return kak_decompose(u, unitarity_tol).coord;
}

NonlocalContent nonlocal_content(const CartanCoord &c) {
  require_chamber(c);
  const double s = 2 * pi;
  return {{(c.c1 + c.c2 - c.c3) / s, (c.c1 - c.c2 + c.c3) / s, (-c.c1 + c.c2 + c.c3) / s,
           -(c.c1 + c.c2 + c.c3) / s}};
}

ExactContent nonlocal_content(const ExactCoord &x) {
  if (!in_chamber(x)) {
    throw Error(ErrorCode::NotInChamber, "exact coordinate outside the Weyl chamber");
  }
  ExactContent out;
  out.a[0] = (x.x1 + x.x2 - x.x3) / 2;
  out.a[1] = (x.x1 - x.x2 + x.x3) / 2;
  out.a[2] = (-x.x1 + x.x2 + x.x3) / 2;
  out.a[3] = -(x.x1 + x.x2 + x.x3) / 2;
  return out;
}

bool valid_content(const NonlocalContent &v, double tol) {
  const double sum = v[0] + v[1] + v[2] + v[3];
  return v[0] + tol >= v[1] && v[1] + tol >= v[2] && v[2] + tol >= v[3] &&
         v[0] - v[3] <= 1 + tol && std::abs(sum) <= tol;
}

bool valid_content(const ExactContent &v) {
  return v[0] >= v[1] && v[1] >= v[2] && v[2] >= v[3] && v[0] - v[3] <= 1 &&
         v[0] + v[1] + v[2] + v[3] == 0;
}

NonlocalContent negate_content(const NonlocalContent &v) {
  if (!valid_content(v)) {
    throw Error(ErrorCode::ConstraintViolation, "input is not a valid nonlocal content");
  }
  NonlocalContent out{{v[2] + 0.5, v[3] + 0.5, v[0] - 0.5, v[1] - 0.5}};
  if (!valid_content(out)) {
    throw Error(ErrorCode::ConstraintViolation, "negated content violates ordering");
  }
  return out;
}

ExactContent negate_content(const ExactContent &v) {
  if (!valid_content(v)) {
    throw Error(ErrorCode::ConstraintViolation, "input is not a valid nonlocal content");
  }
  const Rational half(1, 2);
  ExactContent out;
  out.a = {v[2] + half, v[3] + half, v[0] - half, v[1] - half};
  if (!valid_content(out)) {
    throw Error(ErrorCode::ConstraintViolation, "negated content violates ordering");
  }
  return out;
}

CartanCoord coord_from_content(const NonlocalContent &v) {
  return {pi * (v[0] + v[1]), pi * (v[0] + v[2]), pi * (v[1] + v[2])};
}

}  // namespace weyl
