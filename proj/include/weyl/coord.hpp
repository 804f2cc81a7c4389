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
#include <string>

#include "weyl/pi_rational.hpp"

namespace weyl {

/// Location of a local-equivalence class: the coefficients of
/// H = c1 XX + c2 YY + c3 ZZ, in radians. Nothing forces a CartanCoord into
/// the chamber; functions that need that say so and check.
struct CartanCoord {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  double &operator[](int i) { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  std::array<double, 3> as_array() const { return {c1, c2, c3}; }
};

/// The same triple kept exactly, in units of pi.
struct ExactCoord {
  Rational x1;
  Rational x2;
  Rational x3;

  const Rational &operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  Rational &operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
};

CartanCoord to_radians(const ExactCoord &x);
/// Rationalizes each coordinate divided by pi.
ExactCoord to_exact(const CartanCoord &c);

/// pi/2 >= c1 >= c2 >= c3 >= 0, or pi >= c1 > pi/2 with pi - c1 >= c2 >= c3.
/// Equivalently c1 >= c2 >= c3 >= 0 and c1 + c2 <= pi.
bool in_chamber(const CartanCoord &c, double tol = 1e-12);
bool in_chamber(const ExactCoord &x);

/// Throws NotInChamber unless in_chamber(c, tol).
void require_chamber(const CartanCoord &c, double tol = 1e-9);

/// The other representative of a c3 = 0 class: (pi - c1, c2, 0).
CartanCoord twin(const CartanCoord &c);

/// min over the identification (c1,c2,0) ~ (pi-c1,c2,0) of the max
/// coordinate difference. The twin is only admitted when both points sit
/// within tol of the c3 = 0 face.
double class_distance(const CartanCoord &a, const CartanCoord &b, double tol = 1e-8);
bool class_equal(const CartanCoord &a, const CartanCoord &b, double tol = 1e-8);

std::string to_string(const CartanCoord &c);

}  // namespace weyl
