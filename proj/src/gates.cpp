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

#include "weyl/gates.hpp"

#include <cmath>
#include <numbers>

#include "weyl/cartan.hpp"

namespace weyl::gates {

Mat4 identity() { return Mat4::Identity(); }

Mat4 cnot() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

Mat4 cnot_reversed() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(2, 2) = m(1, 3) = m(3, 1) = 1;
  return m;
}

Mat4 cz() {
  Mat4 m = Mat4::Identity();
  m(3, 3) = -1;
  return m;
}

Mat4 swap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

// The square root of SWAP whose class is (pi/4, pi/4, pi/4); the other
// common choice, with (1+i)/2 on the diagonal, is its inverse.
Mat4 sqrt_swap() {
  const Complex p{0.5, -0.5}, n{0.5, 0.5};
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(3, 3) = 1;
  m(1, 1) = m(2, 2) = p;
  m(1, 2) = m(2, 1) = n;
  return m;
}

Mat4 iswap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(3, 3) = 1;
  m(1, 2) = m(2, 1) = kI;
  return m;
}

Mat4 dcnot() { return cnot() * cnot_reversed(); }

Mat4 b_gate() { return canonical_gate({std::numbers::pi / 2, std::numbers::pi / 4, 0.0}); }

}  // namespace weyl::gates
