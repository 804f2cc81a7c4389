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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/coord.hpp"
#include "weyl/error.hpp"
#include "weyl/numerics.hpp"

namespace weyl::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kNotReachable = 3,
  kNumerical = 4,
};

/// Exit code for a library error.
int exit_code_for(ErrorCode code);

/// A gate named on the command line. `exact` is the class in pi units when
/// the source pins it exactly (coord:...), otherwise the rationalized
/// numerical class.
struct GateSource {
  std::string label;
  Mat4 unitary;
  ExactCoord exact;
};

/// Builtins (identity, cnot, cz, swap, sqrt_swap, b, dcnot, iswap),
/// "fsim:THETA,PHI", "coord:C1,C2,C3" (angle literals such as 2pi/7), or a
/// path to a matrix file: four lines of eight reals (re, im pairs), '#'
/// starts a comment. Throws ParseError or NotUnitary.
GateSource parse_gate(std::string_view spec, double unitarity_tol = 1e-9);

/// Three comma-separated angle literals, in pi units.
ExactCoord parse_coord_list(std::string_view text);

/// Reads a 4x4 complex matrix in the file format above.
Mat4 read_matrix_file(const std::string &path);

/// Runs the `weyl` command line. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace weyl::cli
