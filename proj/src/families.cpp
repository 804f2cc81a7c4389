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

#include "weyl/families.hpp"

#include <cmath>
#include <numbers>

#include "weyl/error.hpp"
#include "weyl/gates.hpp"
#include "weyl/symmetry.hpp"

namespace weyl {

using std::numbers::pi;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Parameter range for a given secondary value s.
void set_range(FamilySpec &f) {
  switch (f.id) {
    case FamilyId::BAlpha:
      f.lo = 0;
      f.hi = q(1, 2);
      break;
    case FamilyId::SpeToB:
    case FamilyId::FsimDiag:
      f.lo = q(1, 4);
      f.hi = q(1, 2);
      break;
    case FamilyId::PlaneThetaLine:
      f.lo = f.secondary;
      f.hi = q(1, 4);
      break;
    case FamilyId::C2QuarterLine:
      f.lo = q(1, 2) - f.secondary;
      f.hi = q(1, 2);
      break;
  }
}

FamilySpec make(FamilyId id, const char *name, const char *parameter, bool has_secondary,
                Rational secondary) {
  FamilySpec f;
  f.id = id;
  f.name = name;
  f.parameter = parameter;
  f.has_secondary = has_secondary;
  f.secondary = secondary;
  set_range(f);
  return f;
}

}  // namespace

const std::vector<FamilySpec> &family_registry() {
  static const std::vector<FamilySpec> reg = {
      make(FamilyId::BAlpha, "b_alpha", "c1", false, 0),
      make(FamilyId::SpeToB, "spe_to_b", "c1", false, 0),
      make(FamilyId::PlaneThetaLine, "plane_theta_line", "c2", true, q(1, 12)),
      make(FamilyId::C2QuarterLine, "c2_quarter_line", "c1", true, q(1, 6)),
      make(FamilyId::FsimDiag, "fsim_diag", "c1", false, 0),
  };
  return reg;
}

FamilySpec family_spec(std::string_view id, std::optional<Rational> secondary, bool mirrored) {
  for (const auto &f : family_registry()) {
    if (f.name != id) continue;
    FamilySpec out = f;
    if (secondary) {
      if (!out.has_secondary) {
        throw Error(ErrorCode::OutOfRange, out.name + " has no secondary parameter");
      }
      if (*secondary < 0 || *secondary > q(1, 4)) {
        throw Error(ErrorCode::OutOfRange, "secondary parameter must lie in [0, pi/4]");
      }
      out.secondary = *secondary;
      set_range(out);
    }
    if (mirrored) {
      if (out.id == FamilyId::BAlpha || out.id == FamilyId::SpeToB) {
        throw Error(ErrorCode::OutOfRange, out.name + " has no mirrored branch");
      }
      out.mirrored = true;
    }
    return out;
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(id) + "'");
}

ExactCoord family_coord(const FamilySpec &spec, const Rational &t) {
  if (t < spec.lo || t > spec.hi) {
    throw Error(ErrorCode::OutOfRange, "parameter " + format_pi(t) + " outside [" +
                                           format_pi(spec.lo) + ", " + format_pi(spec.hi) + "]");
  }
  const Rational half = q(1, 2), quarter = q(1, 4);
  const Rational &s = spec.secondary;
  ExactCoord x;
  switch (spec.id) {
    case FamilyId::BAlpha:
      x = {t, t / 2, 0};
      break;
    case FamilyId::SpeToB:
      x = {t, quarter, half - t};
      break;
    case FamilyId::PlaneThetaLine:
      x = spec.mirrored ? ExactCoord{half + s - t, half - t, t - s}
                        : ExactCoord{half + s - t, t, t - s};
      break;
    case FamilyId::C2QuarterLine:
      x = spec.mirrored ? ExactCoord{half - s, quarter, half - t} : ExactCoord{t, quarter, s};
      break;
    case FamilyId::FsimDiag:
      x = spec.mirrored ? ExactCoord{t, t, half - t} : ExactCoord{t, half - t, half - t};
      break;
  }
  if (!in_chamber(x)) {
    throw Error(ErrorCode::NotInChamber, "family point left the chamber");
  }
  return x;
}

CartanCoord family_coord(const FamilySpec &spec, double t) {
  const double lo = to_double(spec.lo) * pi, hi = to_double(spec.hi) * pi;
  if (!(t >= lo - 1e-12 && t <= hi + 1e-12)) {
    throw Error(ErrorCode::OutOfRange, "parameter outside the family range");
  }
  t = std::clamp(t, lo, hi);
  const double half = pi / 2, quarter = pi / 4;
  const double s = to_double(spec.secondary) * pi;
  CartanCoord c;
  switch (spec.id) {
    case FamilyId::BAlpha:
      c = {t, t / 2, 0};
      break;
    case FamilyId::SpeToB:
      c = {t, quarter, half - t};
      break;
    case FamilyId::PlaneThetaLine:
      c = spec.mirrored ? CartanCoord{half + s - t, half - t, t - s}
                        : CartanCoord{half + s - t, t, t - s};
      break;
    case FamilyId::C2QuarterLine:
      c = spec.mirrored ? CartanCoord{half - s, quarter, half - t} : CartanCoord{t, quarter, s};
      break;
    case FamilyId::FsimDiag:
      c = spec.mirrored ? CartanCoord{t, t, half - t} : CartanCoord{t, half - t, half - t};
      break;
  }
  return canonicalize(c);
}

std::vector<Rational> family_grid(const FamilySpec &spec, int n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "a parameter grid needs at least two points");
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    Rational step(i, n - 1);
    step.canonicalize();
    out.push_back(spec.lo + (spec.hi - spec.lo) * step);
  }
  return out;
}

CartanCoord b_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "alpha must lie in [0, 1]");
  }
  return {alpha * pi / 2, alpha * pi / 4, 0.0};
}

Mat4 fsim(double theta, double phi) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1;
  m(1, 1) = m(2, 2) = std::cos(theta);
  m(1, 2) = m(2, 1) = -kI * std::sin(theta);
  m(3, 3) = std::polar(1.0, -phi);
  return m;
}

LocalInvariants fsim_invariants(double theta, double phi) {
  const double s2 = std::sin(2 * theta);
  LocalInvariants g;
  g.g1 = 0.25 * Complex(2 * std::cos(2 * theta) + (3 + std::cos(4 * theta)) * std::cos(phi) / 2,
                        -s2 * s2 * std::sin(phi));
  g.g2 = 2 * std::cos(2 * theta) + std::cos(phi);
  return g;
}

namespace {

double wrap_angle(double a) {
  // Into (-pi, pi].
  a = std::remainder(a, 2 * pi);
  if (a <= -pi) a += 2 * pi;
  return a;
}

}  // namespace

FsimParams fsim_cartan_params(const CartanCoord &c, double tol) {
  require_chamber(c, tol);
  if (std::abs(c.c1 - c.c2) <= tol) {
    return {wrap_angle(-c.c1), wrap_angle(-2 * c.c3)};
  }
  if (std::abs(c.c2 - c.c3) <= tol) {
    return {wrap_angle(-c.c3), wrap_angle(-2 * c.c1)};
  }
  throw Error(ErrorCode::NotOnFsimPlane, to_string(c) + " is on neither c1 = c2 nor c2 = c3");
}

Mat4 hamiltonian_family_gate(double gt) {
  if (!(gt >= 0.0)) throw Error(ErrorCode::OutOfRange, "gt must be non-negative");
  return canonical_gate({4 * gt, 2 * gt, 0.0});
}

namespace {

Mat4 two_cx_template(double theta, double phi) {
  const Mat4 layer = kron(rx(-theta), rz(-phi));
  return gates::cnot() * layer * gates::cnot();
}

}  // namespace

BAlphaCircuit b_alpha_circuit(double theta, double coord_tol) {
  if (!(theta >= 0.0 && theta <= pi / 2 + 1e-12)) {
    throw Error(ErrorCode::OutOfRange, "theta must lie in [0, pi/2]");
  }
  // The realized class is (c1, c2, 0); solve c2 = c1/2 for the free angle
  // by bisection. The mismatch is negative at phi = 0 and positive at
  // phi = theta.
  auto mismatch = [&](double phi) {
    const CartanCoord c = cartan_coordinates(two_cx_template(theta, phi));
    const CartanCoord r = c.c1 > pi / 2 ? twin(c) : c;
    return r.c2 - r.c1 / 2;
  };
  double lo = 0.0, hi = theta;
  if (theta > 0) {
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (mismatch(mid) < 0 ? lo : hi) = mid;
    }
  }
  BAlphaCircuit out;
  out.theta = theta;
  out.phi = 0.5 * (lo + hi);
  out.unitary = two_cx_template(theta, out.phi);
  out.coord = cartan_coordinates(out.unitary);
  const CartanCoord want{theta, theta / 2, 0.0};
  if (!class_equal(out.coord, want, coord_tol)) {
    throw Error(ErrorCode::CalibrationFailure,
                "calibrated circuit realized " + to_string(out.coord));
  }
  return out;
}

}  // namespace weyl
