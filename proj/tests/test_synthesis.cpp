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
#include "weyl/synthesis.hpp"

using namespace weyl;
using std::numbers::pi;

namespace {

// Checks the returned circuit independently of the library's bookkeeping.
void check_circuit(const SynthesisResult &r, const Mat4 &u, const Mat4 &v, double target = 1 - 1e-6) {
  REQUIRE(r.ok());
  const Mat4 c = r.l1.matrix() * u * r.l2.matrix() * u * r.l3.matrix();
  CHECK(max_abs(c - r.circuit) < 1e-12);
  const double fid = std::abs((v.adjoint() * c).trace()) / 4;
  CHECK(fid >= target);
  CHECK(std::abs(fid - r.fidelity) < 1e-12);
  CHECK(max_abs(r.phase * c - v) < 1e-3);
  for (const LocalPair *p : {&r.l1, &r.l2, &r.l3}) {
    CHECK(unitarity_residual(p->first) < 1e-10);
    CHECK(unitarity_residual(p->second) < 1e-10);
  }
}

}  // namespace

TEST_CASE("B reaches SWAP and CNOT", "[synthesis]") {
  const Mat4 b = gates::b_gate();
  check_circuit(synthesize(b, gates::swap()), b, gates::swap());
  check_circuit(synthesize(b, gates::cnot()), b, gates::cnot());
  check_circuit(synthesize(b, Mat4::Identity()), b, Mat4::Identity());
}

TEST_CASE("B reaches Haar-random targets", "[synthesis]") {
  Rng rng(555);
  const Mat4 b = gates::b_gate();
  for (int t = 0; t < 5; ++t) {
    const Mat4 v = haar_unitary4(rng);
    check_circuit(synthesize(b, v), b, v);
  }
}

TEST_CASE("squares are reachable with any gate", "[synthesis]") {
  Rng rng(8);
  for (int t = 0; t < 5; ++t) {
    const Mat4 u = haar_unitary4(rng);
    const Mat4 v = oracle::random_local(rng) * u * u * oracle::random_local(rng);
    CHECK(reachable(cartan_coordinates(u), cartan_coordinates(v)));
    check_circuit(synthesize(u, v), u, v);
  }
}

TEST_CASE("unreachable targets are refused", "[synthesis]") {
  try {
    synthesize(gates::cnot(), gates::swap());
    FAIL("expected NotReachable");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotReachable);
  }
  CHECK_FALSE(reachable({pi / 4, pi / 4, pi / 4}, {pi / 2, pi / 4, 0}));
  CHECK(reachable({pi / 4, pi / 4, pi / 4}, {pi / 2, pi / 2, pi / 2}));
  Mat4 bad = Mat4::Identity();
  bad(0, 0) = 2;
  CHECK_THROWS_AS(synthesize(gates::b_gate(), bad), Error);
  SynthesisOptions o;
  o.restarts = 0;
  CHECK_THROWS_AS(synthesize(gates::b_gate(), gates::swap(), o), Error);
}

TEST_CASE("family-driven synthesis", "[synthesis]") {
  const FamilySpec f = family_spec("b_alpha");
  const SynthesisResult s = synthesize_with_family(f, gates::swap());
  REQUIRE(s.parameter);
  CHECK(*s.exact_parameter == Rational(1, 2));
  check_circuit(s, s.gate, gates::swap());

  const SynthesisResult c = synthesize_with_family(f, gates::cnot());
  CHECK(std::abs(*c.parameter - pi / 4) < 1e-5);
  check_circuit(c, c.gate, gates::cnot());

  const auto id = minimal_family_parameter(f, {0, 0, 0});
  REQUIRE(id);
  CHECK(*id == 0);

  // The first sqrt(SWAP)-side family member cannot produce B.
  const FamilySpec spe = family_spec("spe_to_b");
  const auto t = minimal_family_parameter(spe, {pi / 2, pi / 4, 0});
  REQUIRE(t);
  CHECK(*t > Rational(1, 4));
}

TEST_CASE("mirror gates reach the same targets", "[synthesis]") {
  Rng rng(77);
  const Mat4 sw = oracle::swap_matrix();
  for (int t = 0; t < 10; ++t) {
    const Mat4 u = haar_unitary4(rng);
    const Mat4 v = u * haar_su2_pair(rng) * u;
    const Mat4 m = sw * u;
    CHECK(class_distance(cartan_coordinates(m), mirror_map(cartan_coordinates(u))) < 1e-9);
    check_circuit(synthesize(m, v), m, v);
  }
}

TEST_CASE("results are deterministic", "[synthesis]") {
  Rng rng(1);
  const Mat4 v = haar_unitary4(rng);
  SynthesisOptions o;
  o.seed = 42;
  const SynthesisResult a = synthesize(gates::b_gate(), v, o);
  const SynthesisResult b = synthesize(gates::b_gate(), v, o);
  CHECK(a.restart == b.restart);
  CHECK(a.evaluations == b.evaluations);
  CHECK(max_abs(a.circuit - b.circuit) == 0.0);
  CHECK(a.fidelity == b.fidelity);
}
