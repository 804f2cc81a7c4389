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

#include "oracles.hpp"
#include "weyl/cartan.hpp"
#include "weyl/error.hpp"
#include "weyl/families.hpp"
#include "weyl/gates.hpp"
#include "weyl/symmetry.hpp"

using namespace weyl;
using std::numbers::pi;

namespace {

Mat4 fsim_oracle(double th, double ph) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1;
  m(1, 1) = m(2, 2) = std::cos(th);
  m(1, 2) = m(2, 1) = Complex(0, -std::sin(th));
  m(3, 3) = std::polar(1.0, -ph);
  return m;
}

// G1 exactly as printed in the closed form.
Complex printed_g1(double th, double ph) {
  return 0.25 * Complex(2 * std::cos(2 * th) + (3 + std::cos(4 * th)) * std::cos(ph) / 2,
                        std::pow(std::sin(2 * th), 2) * std::sin(ph));
}

template <typename F>
void expect_code(ErrorCode code, F &&f) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("family registry and examples", "[families]") {
  CHECK(family_registry().size() == 5);
  const FamilySpec b = family_spec("b_alpha");
  CHECK(b.lo == 0);
  CHECK(b.hi == Rational(1, 2));
  CHECK(class_distance(family_coord(b, pi / 2), {pi / 2, pi / 4, 0}) < 1e-15);
  CHECK(class_distance(b_alpha(1.0), {pi / 2, pi / 4, 0}) < 1e-15);
  CHECK(class_distance(b_alpha(0.0), {0, 0, 0}) < 1e-15);
  const FamilySpec spe = family_spec("spe_to_b");
  const ExactCoord s = family_coord(spe, Rational(1, 4));
  CHECK(s.x1 == Rational(1, 4));
  CHECK(s.x2 == Rational(1, 4));
  CHECK(s.x3 == Rational(1, 4));
  const FamilySpec th = family_spec("plane_theta_line", Rational(0));
  const ExactCoord c = family_coord(th, Rational(0));
  CHECK(c.x1 == Rational(1, 2));
  CHECK(c.x2 == 0);
  CHECK(c.x3 == 0);

  expect_code(ErrorCode::ParseError, [] { family_spec("nope"); });
  expect_code(ErrorCode::OutOfRange, [] { family_spec("b_alpha", Rational(1, 8)); });
  expect_code(ErrorCode::OutOfRange, [] { family_spec("plane_theta_line", Rational(1, 2)); });
  expect_code(ErrorCode::OutOfRange, [] { family_spec("spe_to_b", std::nullopt, true); });
  expect_code(ErrorCode::OutOfRange, [&] { family_coord(b, Rational(3, 4)); });

  const auto grid = family_grid(spe, 11);
  REQUIRE(grid.size() == 11);
  CHECK(grid.front() == Rational(1, 4));
  CHECK(grid.back() == Rational(1, 2));
  CHECK(grid[1] - grid[0] == Rational(1, 40));
}

TEST_CASE("family points are chamber-valid and symmetric where claimed", "[families]") {
  Rng rng(10);
  for (const auto &base : family_registry()) {
    for (bool mirrored : {false, true}) {
      if (mirrored && (base.id == FamilyId::BAlpha || base.id == FamilyId::SpeToB)) continue;
      const FamilySpec f = family_spec(base.name, std::nullopt, mirrored);
      std::uniform_real_distribution<double> u(to_double(f.lo) * pi, to_double(f.hi) * pi);
      for (int t = 0; t < 100; ++t) {
        const CartanCoord c = family_coord(f, u(rng));
        CHECK(in_chamber(c, 1e-12));
        if (f.id == FamilyId::BAlpha) CHECK(is_inverse_invariant(c));
        if (f.id == FamilyId::SpeToB) CHECK(is_mirrored_inverse_invariant(c));
      }
      for (const auto &t : family_grid(f, 11)) CHECK(in_chamber(family_coord(f, t)));
    }
  }
  // Theta-line endpoints on the diagonal branch.
  for (const Rational s : {Rational(0), Rational(1, 12), Rational(1, 8)}) {
    const FamilySpec f = family_spec("plane_theta_line", s);
    CHECK(is_mirrored_inverse_invariant(to_radians(family_coord(f, Rational(1, 4)))));
  }
}

TEST_CASE("fSim matrices", "[families]") {
  CHECK(max_abs(fsim(0, 0) - Mat4::Identity()) == 0.0);
  Rng rng(1);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int t = 0; t < 50; ++t) {
    const double a = u(rng), b = u(rng);
    CHECK(max_abs(fsim(a, b) - fsim_oracle(a, b)) < 1e-15);
    CHECK(unitarity_residual(fsim(a, b)) < 1e-14);
  }
  const Mat4 f = fsim(pi / 2, 0);
  CHECK(std::abs(f(1, 2) - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(f(1, 1)) < 1e-15);
  const Mat4 cp = fsim(0, 0.7);
  CHECK(std::abs(cp(3, 3) - std::polar(1.0, -0.7)) < 1e-15);
  CHECK(class_distance(cartan_coordinates(fsim(0, pi)), {pi / 2, 0, 0}) < 1e-12);
}

TEST_CASE("fSim closed-form invariants", "[families]") {
  const auto id = fsim_invariants(0, 0);
  CHECK(std::abs(id.g1 - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(id.g2 - 3) < 1e-15);
  Rng rng(100);
  std::uniform_real_distribution<double> u(-pi, pi);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const double a = u(rng), b = u(rng);
    const auto closed = fsim_invariants(a, b);
    const auto [g1, g2] = oracle::raw_invariants(fsim_oracle(a, b));
    worst = std::max({worst, std::abs(closed.g1 - g1), std::abs(closed.g2 - g2)});
    CHECK(std::abs(closed.g2 - (2 * std::cos(2 * a) + std::cos(b))) < 1e-12);
    // The printed G1 is the invariant of fSim(-theta, -phi), i.e. the conjugate.
    const auto [m1, m2] = oracle::raw_invariants(fsim_oracle(-a, -b));
    CHECK(std::abs(printed_g1(a, b) - m1) < 1e-10);
    CHECK(std::abs(printed_g1(a, b) - std::conj(closed.g1)) < 1e-12);
    CHECK(std::abs(m2 - closed.g2) < 1e-10);
  }
  CHECK(worst <= 1e-10);
  const auto t0 = fsim_invariants(0.4, 0);
  CHECK(std::abs(t0.g2 - (2 * std::cos(0.8) + 1)) < 1e-15);
}

TEST_CASE("fSim parameters on the two planes", "[families]") {
  const auto round_trip = [](const CartanCoord &c) {
    const FsimParams p = fsim_cartan_params(c);
    CAPTURE(to_string(c), p.theta, p.phi);
    CHECK(class_distance(cartan_coordinates(fsim(p.theta, p.phi)), c) <= 1e-8);
  };
  round_trip({pi / 4, pi / 4, pi / 4});
  round_trip({pi / 2, 0, 0});
  round_trip({pi / 2, pi / 2, 0});
  round_trip({pi / 3, pi / 5, pi / 5});
  round_trip({pi / 3, pi / 3, pi / 5});
  // The brown lines.
  for (int i = 0; i <= 20; ++i) {
    const double c1 = pi / 4 + (pi / 4) * i / 20;
    round_trip({c1, pi / 2 - c1, pi / 2 - c1});
    round_trip({c1, c1, pi / 2 - c1});
    round_trip({c1, pi / 4, pi / 4});
    round_trip({pi / 4, pi / 4, pi / 2 - c1});
  }
  // c2 = c3 branch reads theta from c3 and phi from c1.
  const FsimParams p = fsim_cartan_params({pi / 3, pi / 5, pi / 5});
  CHECK(std::abs(std::abs(p.theta) - pi / 5) < 1e-12);
  CHECK(std::abs(std::abs(p.phi) - 2 * pi / 3) < 1e-12);
  expect_code(ErrorCode::NotOnFsimPlane, [] { fsim_cartan_params({pi / 2, pi / 4, 0.1}); });
}

TEST_CASE("Hamiltonian family gate", "[families]") {
  CHECK(max_abs(hamiltonian_family_gate(0) - Mat4::Identity()) < 1e-15);
  CHECK(class_distance(cartan_coordinates(hamiltonian_family_gate(pi / 8)), {pi / 2, pi / 4, 0}) < 1e-10);
  for (int i = 0; i <= 10; ++i) {
    const double gt = pi / 8 * i / 10;
    const Mat4 h = 2 * oracle::kron2(oracle::sx(), oracle::sx()) + oracle::kron2(oracle::sy(), oracle::sy());
    const Mat4 u = (Complex(0, gt) * h).exp();
    CHECK(max_abs(hamiltonian_family_gate(gt) - u) < 1e-12);
    CHECK(class_distance(cartan_coordinates(u), {4 * gt, 2 * gt, 0}) < 1e-9);
  }
}

TEST_CASE("B-alpha circuit calibration", "[families]") {
  const BAlphaCircuit lo = b_alpha_circuit(0);
  CHECK(class_distance(lo.coord, {0, 0, 0}) < 1e-8);
  const BAlphaCircuit hi = b_alpha_circuit(pi / 2);
  CHECK(class_distance(hi.coord, {pi / 2, pi / 4, 0}) < 1e-8);
  double prev = -1;
  for (int i = 0; i <= 10; ++i) {
    const double th = pi / 2 * i / 10;
    const BAlphaCircuit c = b_alpha_circuit(th);
    CartanCoord got = cartan_coordinates(c.unitary);
    CHECK(class_distance(got, c.coord) < 1e-9);
    if (got.c1 > pi / 2) got = twin(got);
    CHECK(std::abs(got.c2 - got.c1 / 2) <= 1e-6);
    CHECK(std::abs(got.c3) <= 1e-6);
    CHECK(got.c1 >= prev - 1e-12);
    prev = got.c1;
    // The circuit is a CX sandwich around Rx(-theta) on the first qubit.
    const Mat4 mid = gates::cnot() * c.unitary * gates::cnot();
    const TensorFactors f = tensor_factor(mid);
    CHECK(f.residual < 1e-12);
  }
  expect_code(ErrorCode::OutOfRange, [] { b_alpha_circuit(2.0); });
}
