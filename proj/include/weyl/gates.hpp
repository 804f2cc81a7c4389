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

#include "weyl/numerics.hpp"

namespace weyl::gates {

Mat4 identity();
/// Control on the first (most significant) qubit.
Mat4 cnot();
/// Control on the second qubit.
Mat4 cnot_reversed();
Mat4 cz();
Mat4 swap();
Mat4 sqrt_swap();
Mat4 iswap();
/// CNOT followed by the reversed CNOT.
Mat4 dcnot();
/// The canonical representative of the B class, exp(iH(pi/2, pi/4, 0)/2).
Mat4 b_gate();

}  // namespace weyl::gates
