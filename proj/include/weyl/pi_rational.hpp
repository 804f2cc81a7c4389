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

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weyl {

/// Exact rationals. Angles handled exactly are always stored as multiples
/// of pi, so 2pi/7 is the rational 2/7.
using Rational = mpq_class;

/// Best rational approximation of x from its continued fraction, stopping
/// at the first convergent within tol.
Rational rationalize(double x, double tol = 1e-12);

double to_double(const Rational &q);

/// Parses an angle literal and returns it in units of pi.
///
/// Accepted: "0", "pi", "-pi", "pi/4", "2pi/7", "3*pi/14", "-2pi/3" (exact),
/// or a plain decimal in radians such as "0.7853981" (rationalized).
/// Throws ParseError.
Rational parse_angle(std::string_view text);

/// True when text is one of the exact pi forms (no rationalization).
bool is_exact_angle_literal(std::string_view text);

/// Renders q (pi units) back as an angle literal: "0", "pi", "-pi/4",
/// "2pi/7".
std::string format_pi(const Rational &q);

}  // namespace weyl
