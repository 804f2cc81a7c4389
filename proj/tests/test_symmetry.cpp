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
#include "weyl/symmetry.hpp"

using namespace weyl;
using std::numbers::pi;

namespace {

bool same(const CartanCoord &a, const CartanCoord &b, double tol = 1e-12) {
  return std::abs(a.c1 - b.c1) <= tol && std::abs(a.c2 - b.c2) <= tol && std::abs(a.c3 - b.c3) <= tol;
}

}  // namespace

TEST_CASE("canonicalize examples", "[symmetry]") {
  CHECK(same(canonicalize({pi / 2, 0, 0}), {pi / 2, 0, 0}));
  CHECK(same(canonicalize({0, pi / 2, 0}), {pi / 2, 0, 0}));
  CHECK(same(canonicalize({-pi / 4, 0, 0}), {pi / 4, 0, 0}));
  // Both of these are invariant-equal to their canonical forms.
  for (const CartanCoord raw : {CartanCoord{0, pi / 2, 0}, CartanCoord{-pi / 4, 0, 0},
                                CartanCoord{2.5, -1.2, 4.0}, CartanCoord{-7, 3, 0.2}}) {
    const CartanCoord c = canonicalize(raw);
    CHECK(in_chamber(c, 1e-12));
    const auto [g1, g2] = oracle::closed_form_invariants(raw.c1, raw.c2, raw.c3);
    const auto [h1, h2] = oracle::closed_form_invariants(c.c1, c.c2, c.c3);
    CHECK(std::abs(g1 - h1) < 1e-12);
    CHECK(std::abs(g2 - h2) < 1e-12);
  }
}

TEST_CASE("canonicalize is idempotent and move-tracked", "[symmetry]") {
  Rng rng(17);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int t = 0; t < 500; ++t) {
    const CartanCoord raw{u(rng), u(rng), u(rng)};
    const Canonicalized cm = canonicalize_with_moves(raw);
    CHECK(in_chamber(cm.coord, 1e-12));
    CHECK(same(canonicalize(cm.coord), cm.coord, 1e-12));
    CHECK(same(apply_moves(raw, cm.moves), cm.coord, 1e-9));
    // Can(raw) = L Can(canonical) R.
    const MoveLocals l = move_locals(cm.moves);
    CHECK(max_abs(l.left * canonical_gate(cm.coord) * l.right - canonical_gate(raw)) < 1e-9);
    CHECK(tensor_factor(l.left).residual < 1e-12);
    CHECK(tensor_factor(l.right).residual < 1e-12);
  }
}

TEST_CASE("single moves are local equivalences", "[symmetry]") {
  Rng rng(21);
  const std::vector<WeylMove> moves = {
      WeylMove::shift(0, 1), WeylMove::shift(1, -1), WeylMove::shift(2, 3), WeylMove::swap(0, 1),
      WeylMove::swap(1, 2),  WeylMove::swap(0, 2),   WeylMove::flip(0, 1),  WeylMove::flip(1, 2),
      WeylMove::flip(0, 2)};
  for (int t = 0; t < 20; ++t) {
    const CartanCoord c = oracle::random_chamber_point(rng);
    for (const auto &m : moves) {
      const CartanCoord d = apply_move(c, m);
      const MoveLocals l = move_locals(m);
      CHECK(max_abs(l.left * canonical_gate(d) * l.right - canonical_gate(c)) < 1e-12);
    }
  }
}

TEST_CASE("alignment", "[symmetry]") {
  Rng rng(3);
  std::uniform_int_distribution<int> k(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const CartanCoord c = oracle::random_chamber_point(rng);
    const CartanCoord raw{c.c2 + k(rng) * pi, -c.c1 + k(rng) * pi, -c.c3};
    const Alignment a = align_moves(raw, c);
    CHECK(a.distance < 1e-12);
    CHECK(same(a.coord, c, 1e-12));
  }
}

TEST_CASE("map examples", "[symmetry]") {
  CHECK(same(inverse_map({pi / 2, 0, 0}), {pi / 2, 0, 0}));
  CHECK(same(inverse_map({pi / 4, pi / 8, 0}), {3 * pi / 4, pi / 8, 0}));
  CHECK(same(inverse_map({pi / 4, pi / 4, pi / 4}), {3 * pi / 4, pi / 4, pi / 4}));
  CHECK(same(mirror_map({0, 0, 0}), {pi / 2, pi / 2, pi / 2}));
  CHECK(same(mirror_map({pi / 2, pi / 4, 0}), {pi / 2, pi / 4, 0}));
  CHECK(same(mirror_map({pi / 2, 0, 0}), {pi / 2, pi / 2, 0}));
  CHECK(same(mirrored_inverse_map({pi / 2, pi / 4, 0}), {pi / 2, pi / 4, 0}));
  CHECK(same(mirrored_inverse_map({pi / 4, pi / 4, pi / 4}), {pi / 4, pi / 4, pi / 4}));
  for (double th : {0.0, 0.1, pi / 8, pi / 4}) {
    for (double frac : {0.0, 0.3, 0.7, 1.0}) {
      const double c2 = th + frac * (pi / 4 - th);
      const CartanCoord spe{pi / 2 + th - c2, c2, c2 - th};
      const CartanCoord expect{pi / 2 + th - c2, pi / 2 - c2, c2 - th};
      CHECK(class_distance(mirrored_inverse_map(spe), canonicalize(expect)) < 1e-12);
    }
  }
}

TEST_CASE("maps are involutions", "[symmetry]") {
  Rng rng(6);
  for (int t = 0; t < 1000; ++t) {
    const CartanCoord c = oracle::random_chamber_point(rng);
    CHECK(class_distance(inverse_map(inverse_map(c)), c) < 1e-12);
    CHECK(class_distance(mirror_map(mirror_map(c)), c) < 1e-12);
    CHECK(class_distance(mirrored_inverse_map(mirrored_inverse_map(c)), c) < 1e-12);
  }
}

TEST_CASE("matrix-level consistency of the maps", "[symmetry]") {
  Rng rng(2024);
  const Mat4 sw = oracle::swap_matrix();
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const Mat4 u = haar_unitary4(rng);
    const CartanCoord c = cartan_coordinates(u);
    worst = std::max(worst, class_distance(cartan_coordinates(u.adjoint()), inverse_map(c)));
    worst = std::max(worst, class_distance(cartan_coordinates(sw * u), mirror_map(c)));
    worst = std::max(worst, class_distance(cartan_coordinates(u * sw), mirror_map(c)));
    worst = std::max(worst, class_distance(cartan_coordinates(sw * u.adjoint()), mirrored_inverse_map(c)));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("fixed-point predicates", "[symmetry]") {
  CHECK(is_inverse_invariant({pi / 2, 0.3, 0.1}));
  CHECK(is_mirrored_inverse_invariant({pi / 3, pi / 4, pi / 6}));
  CHECK(is_inverse_invariant({pi / 2, pi / 4, 0}));
  CHECK(is_mirror_invariant({pi / 2, pi / 4, 0}));
  CHECK(is_mirrored_inverse_invariant({pi / 2, pi / 4, 0}));
  CHECK_FALSE(is_mirror_invariant({pi / 4, pi / 4, pi / 4}));
  CHECK(is_inverse_invariant({pi / 3, pi / 5, 0}));  // c3 = 0 plane
}

TEST_CASE("B is the unique triple-invariant grid point", "[symmetry]") {
  const int n = 200;  // resolution pi/200
  int hits = 0;
  CartanCoord found{};
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= i && i + j <= n; ++j)
      for (int k = 0; k <= j; ++k) {
        const CartanCoord c{pi * i / n, pi * j / n, pi * k / n};
        if (is_inverse_invariant(c) && is_mirror_invariant(c) && is_mirrored_inverse_invariant(c)) {
          ++hits;
          found = c;
        }
      }
  CHECK(hits == 1);
  CHECK(class_distance(found, {pi / 2, pi / 4, 0}) < 1e-12);
}
