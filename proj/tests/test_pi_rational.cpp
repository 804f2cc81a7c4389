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

#include <catch_amalgamated.hpp>

#include <numbers>

#include "weyl/coord.hpp"
#include "weyl/error.hpp"
#include "weyl/pi_rational.hpp"

using namespace weyl;

TEST_CASE("angle literals", "[pi_rational]") {
  CHECK(parse_angle("2pi/7") == Rational(2, 7));
  CHECK(parse_angle("pi/4") == Rational(1, 4));
  CHECK(parse_angle("-pi/4") == Rational(-1, 4));
  CHECK(parse_angle("pi") == 1);
  CHECK(parse_angle("0") == 0);
  CHECK(parse_angle("3*pi/14") == Rational(3, 14));
  CHECK(parse_angle(" 3pi / 14 ") == Rational(3, 14));
  CHECK(parse_angle("0.5") == rationalize(0.5 / std::numbers::pi));
  CHECK(is_exact_angle_literal("2pi/7"));
  CHECK_FALSE(is_exact_angle_literal("0.5"));
  for (const char *bad : {"", "pi/0", "2pi/x", "abc", "1.2.3", "pi pi"}) {
    CAPTURE(bad);
    try {
      parse_angle(bad);
      FAIL("expected ParseError");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("formatting round trips", "[pi_rational]") {
  for (const char *s : {"0", "pi", "-pi/4", "2pi/7", "3pi/14", "-5pi/3"}) {
    CHECK(format_pi(parse_angle(s)) == s);
  }
}

TEST_CASE("rationalize", "[pi_rational]") {
  CHECK(rationalize(0.5) == Rational(1, 2));
  CHECK(rationalize(-0.25) == Rational(-1, 4));
  CHECK(rationalize(1.0 / 3.0) == Rational(1, 3));
  CHECK(rationalize(2.0 / 7.0) == Rational(2, 7));
  const double x = 0.123456789012345;
  CHECK(std::abs(to_double(rationalize(x)) - x) <= 1e-12);
}

TEST_CASE("chamber and class equality", "[coord]") {
  using std::numbers::pi;
  CHECK(in_chamber(CartanCoord{pi / 2, pi / 4, 0}));
  CHECK(in_chamber(CartanCoord{3 * pi / 4, pi / 4, pi / 4}));
  CHECK_FALSE(in_chamber(CartanCoord{3 * pi / 4, 3 * pi / 8, 0}));
  CHECK_FALSE(in_chamber(CartanCoord{0.1, 0.2, 0}));
  CHECK(in_chamber(ExactCoord{Rational(1), 0, 0}));
  CHECK_FALSE(in_chamber(ExactCoord{Rational(3, 4), Rational(3, 8), 0}));
  CHECK(class_equal({pi / 4, pi / 8, 0}, {3 * pi / 4, pi / 8, 0}));
  CHECK_FALSE(class_equal({pi / 4, pi / 8, 0.1}, {3 * pi / 4, pi / 8, 0.1}));
  CHECK(class_distance({0.1, 0.05, 0}, {0.1 + 1e-10, 0.05, 0}) < 1e-9);
}
