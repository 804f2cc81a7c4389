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

#include "weyl/coord.hpp"
#include "weyl/numerics.hpp"

namespace weyl {

/// Columns are the Bell-type eigenvectors of the nonlocal Hamiltonian:
///   Psi1 = (|00> + |11>)/sqrt2,   Psi2 = i(|01> + |10>)/sqrt2,
///   Psi3 = (|01> - |10>)/sqrt2,   Psi4 = i(|00> - |11>)/sqrt2.
const Mat4 &magic_basis();

/// H = c1 XX + c2 YY + c3 ZZ. Eigenvalues on Psi1..Psi4 are
/// c1-c2+c3, c1+c2-c3, -c1-c2-c3, -c1+c2+c3.
Mat4 nonlocal_hamiltonian(const CartanCoord &c);

/// The four eigenvalues above, in Psi order.
std::array<double, 4> hamiltonian_spectrum(const CartanCoord &c);

/// exp(iH/2), exponentiated exactly in the magic basis.
Mat4 canonical_gate(const CartanCoord &c);

struct LocalInvariants {
  Complex g1;
  double g2 = 0.0;
};

/// m(U) = (Q^dagger U Q)^T (Q^dagger U Q).
Mat4 makhlin_matrix(const Mat4 &u);

/// G1 = tr^2 m / (16 det U), G2 = (tr^2 m - tr m^2) / (4 det U).
/// Throws NotUnitary.
LocalInvariants local_invariants(const Mat4 &u, double unitarity_tol = 1e-10);

/// Squared distance between invariant pairs, |dG1|^2 + |dG2|^2.
double invariant_mismatch(const LocalInvariants &a, const LocalInvariants &b);

/// U = e^{i phase} (k1 (x) k2) exp(iH(coord)/2) (k3 (x) k4), k_i in SU(2).
struct KakDecomposition {
  double global_phase = 0.0;
  Mat2 k1, k2, k3, k4;
  CartanCoord coord;
  double residual = 0.0;

  Mat4 left() const;   // k1 (x) k2
  Mat4 right() const;  // k3 (x) k4
  Mat4 reassemble() const;
};

/// Throws NotUnitary or ConvergenceFailure (including when the
/// reconstruction residual exceeds 1e-8).
KakDecomposition kak_decompose(const Mat4 &u, double unitarity_tol = 1e-10);

/// Chamber coordinate of U's class.
CartanCoord cartan_coordinates(const Mat4 &u, double unitarity_tol = 1e-10);

/// Sorted eigenvalues of H divided by 2pi:
///   a1 = (c1+c2-c3)/2pi, a2 = (c1-c2+c3)/2pi,
///   a3 = (-c1+c2+c3)/2pi, a4 = -(c1+c2+c3)/2pi.
struct NonlocalContent {
  std::array<double, 4> a{};
  double operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
};
/// Same, exact. Coordinates in pi units give contents as plain rationals.
struct ExactContent {
  std::array<Rational, 4> a;
  const Rational &operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
};

/// Throws NotInChamber.
NonlocalContent nonlocal_content(const CartanCoord &c);
/// Throws NotInChamber.
ExactContent nonlocal_content(const ExactCoord &x);

/// Sorted, sums to zero, a1 - a4 <= 1.
bool valid_content(const NonlocalContent &v, double tol = 1e-12);
bool valid_content(const ExactContent &v);

/// Content of -U: [a3 + 1/2, a4 + 1/2, a1 - 1/2, a2 - 1/2].
/// Throws ConstraintViolation if either side is not a valid content.
NonlocalContent negate_content(const NonlocalContent &v);
ExactContent negate_content(const ExactContent &v);

/// Inverse of the content map on the sum-zero hyperplane:
/// c1 = pi(a1+a2), c2 = pi(a1+a3), c3 = pi(a2+a3).
CartanCoord coord_from_content(const NonlocalContent &v);

}  // namespace weyl
