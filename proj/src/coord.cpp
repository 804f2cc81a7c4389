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

#include "weyl/coord.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "weyl/error.hpp"

namespace weyl {

using std::numbers::pi;

CartanCoord to_radians(const ExactCoord &x) {
  return {to_double(x.x1) * pi, to_double(x.x2) * pi, to_double(x.x3) * pi};
}

ExactCoord to_exact(const CartanCoord &c) {
  return {rationalize(c.c1 / pi), rationalize(c.c2 / pi), rationalize(c.c3 / pi)};
}

bool in_chamber(const CartanCoord &c, double tol) {
  return c.c1 + tol >= c.c2 && c.c2 + tol >= c.c3 && c.c3 >= -tol &&
         c.c1 + c.c2 <= pi + tol;
}

bool in_chamber(const ExactCoord &x) {
  return x.x1 >= x.x2 && x.x2 >= x.x3 && x.x3 >= 0 && x.x1 + x.x2 <= 1;
}

void require_chamber(const CartanCoord &c, double tol) {
  if (!in_chamber(c, tol)) {
    throw Error(ErrorCode::NotInChamber, to_string(c) + " is outside the Weyl chamber");
  }
}

CartanCoord twin(const CartanCoord &c) { return {pi - c.c1, c.c2, c.c3}; }

double class_distance(const CartanCoord &a, const CartanCoord &b, double tol) {
  auto dist = [](const CartanCoord &u, const CartanCoord &v) {
    return std::max({std::abs(u.c1 - v.c1), std::abs(u.c2 - v.c2), std::abs(u.c3 - v.c3)});
  };
  double d = dist(a, b);
  if (std::abs(a.c3) <= tol && std::abs(b.c3) <= tol) {
    d = std::min(d, dist(twin(a), b));
  }
  return d;
}

bool class_equal(const CartanCoord &a, const CartanCoord &b, double tol) {
  return class_distance(a, b, tol) <= tol;
}

std::string to_string(const CartanCoord &c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.12g, %.12g, %.12g)", c.c1, c.c2, c.c3);
  return buf;
}

}  // namespace weyl
