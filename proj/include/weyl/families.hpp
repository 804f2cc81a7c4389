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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/cartan.hpp"
#include "weyl/coord.hpp"
#include "weyl/pi_rational.hpp"

namespace weyl {

enum class FamilyId {
  BAlpha,          // (t, t/2, 0),                  t = c1 in [0, pi/2]
  SpeToB,          // (t, pi/4, pi/2 - t),          t = c1 in [pi/4, pi/2]
  PlaneThetaLine,  // (pi/2 + s - t, t, t - s),     t = c2 in [s, pi/4], s = theta in [0, pi/4]
  C2QuarterLine,   // (t, pi/4, s),                 t = c1 in [pi/2 - s, pi/2], s = c3 in [0, pi/4]
  FsimDiag,        // (t, pi/2 - t, pi/2 - t),      t = c1 in [pi/4, pi/2]
};

/// A one-parameter family of classes. Angles are exact, in units of pi.
/// `mirrored` selects the mirrored-inverse image of the line where the
/// family has one:
///   PlaneThetaLine -> (pi/2 + s - t, pi/2 - t, t - s)
///   C2QuarterLine  -> (pi/2 - s, pi/4, pi/2 - t)
///   FsimDiag       -> (t, t, pi/2 - t)
struct FamilySpec {
  FamilyId id = FamilyId::BAlpha;
  std::string name;
  std::string parameter;  // what t is
  Rational lo;
  Rational hi;
  bool has_secondary = false;
  Rational secondary;  // s, when has_secondary
  bool mirrored = false;
};

/// Registry order: b_alpha, spe_to_b, plane_theta_line, c2_quarter_line,
/// fsim_diag; secondary parameters at their defaults (1/12 and 1/6).
const std::vector<FamilySpec> &family_registry();

/// Looks up a family by id string, optionally overriding the secondary
/// parameter and selecting the mirrored branch. Throws ParseError for an
/// unknown id and OutOfRange for a bad secondary or a family with no
/// mirrored branch.
FamilySpec family_spec(std::string_view id, std::optional<Rational> secondary = std::nullopt,
                       bool mirrored = false);

/// Throws OutOfRange when t is outside [lo, hi].
ExactCoord family_coord(const FamilySpec &spec, const Rational &t);
/// Same for t in radians (with a 1e-12 range slack).
CartanCoord family_coord(const FamilySpec &spec, double t);

/// n equally spaced exact parameters from lo to hi (n >= 2).
std::vector<Rational> family_grid(const FamilySpec &spec, int n);

/// Point alpha of B^alpha: (alpha pi/2, alpha pi/4, 0), alpha in [0, 1].
CartanCoord b_alpha(double alpha);

/// [[1,0,0,0],[0,cos t,-i sin t,0],[0,-i sin t,cos t,0],[0,0,0,e^{-i phi}]].
Mat4 fsim(double theta, double phi);

/// Closed-form invariants of fsim(theta, phi):
///   G1 = [2cos2t + (3 + cos4t) cos(phi)/2 - i sin^2(2t) sin(phi)] / 4
///   G2 = 2cos2t + cos(phi).
/// fsim(theta, phi) lies in the class of exp(iH(theta, theta, -phi/2)/2);
/// the sign of Im G1 follows from that.
LocalInvariants fsim_invariants(double theta, double phi);

struct FsimParams {
  double theta = 0.0;
  double phi = 0.0;
};

/// (theta, phi) with cartan_coordinates(fsim(theta, phi)) equal to c as
/// classes, for c on the c1 = c2 plane (preferred when both hold) or the
/// c2 = c3 plane. phi is reduced to (-pi, pi]. Throws NotOnFsimPlane.
FsimParams fsim_cartan_params(const CartanCoord &c, double tol = 1e-8);

/// exp(i t (2g XX + g YY)) as a function of gt, i.e. the canonical gate at
/// (4gt, 2gt, 0). Throws OutOfRange for gt < 0.
Mat4 hamiltonian_family_gate(double gt);

/// CX . (Rx(-theta) (x) exp(i phi Z/2)) . CX with phi calibrated so the
/// circuit's class is (theta, theta/2, 0).
struct BAlphaCircuit {
  double theta = 0.0;
  double phi = 0.0;
  Mat4 unitary;
  CartanCoord coord;
};

/// Throws OutOfRange (theta outside [0, pi/2]) or CalibrationFailure.
BAlphaCircuit b_alpha_circuit(double theta, double coord_tol = 1e-8);

}  // namespace weyl
