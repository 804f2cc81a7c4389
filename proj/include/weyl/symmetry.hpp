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

#include <vector>

#include "weyl/coord.hpp"
#include "weyl/numerics.hpp"

namespace weyl {

/// One generator of the group acting on raw Cartan triples by local
/// equivalence.
///
///   Shift(i, n):    c_i -> c_i + n*pi
///   Swap(i, j):     exchange c_i and c_j
///   FlipPair(i, j): c_i -> -c_i, c_j -> -c_j
struct WeylMove {
  enum class Kind { Shift, Swap, FlipPair };
  Kind kind = Kind::Shift;
  int i = 0;
  int j = 0;
  int n = 0;

  static WeylMove shift(int i, int n) { return {Kind::Shift, i, i, n}; }
  static WeylMove swap(int i, int j) { return {Kind::Swap, i, j, 0}; }
  static WeylMove flip(int i, int j) { return {Kind::FlipPair, i, j, 0}; }
};

CartanCoord apply_move(const CartanCoord &c, const WeylMove &m);
CartanCoord apply_moves(CartanCoord c, const std::vector<WeylMove> &moves);

/// Local gates realizing a move: exp(iH(c)/2) = left * exp(iH(c')/2) * right
/// where c' = apply_move(c, m). Both are tensor products up to phase.
struct MoveLocals {
  Mat4 left;
  Mat4 right;
};
MoveLocals move_locals(const WeylMove &m);
/// Composition over a sequence, in the same sense.
MoveLocals move_locals(const std::vector<WeylMove> &moves);

struct Canonicalized {
  CartanCoord coord;
  std::vector<WeylMove> moves;  // raw -> coord
};

/// Folds any real triple into the chamber and records how. Throws
/// ConvergenceFailure if the fold does not land in the chamber (a bug).
Canonicalized canonicalize_with_moves(const CartanCoord &raw);
CartanCoord canonicalize(const CartanCoord &raw);

/// Moves taking `from` as close as possible to `to`, searching signed
/// permutations with an even number of sign changes and then shifting
/// each coordinate by the nearest multiple of pi. The result records the
/// remaining max-coordinate distance in `coord` compared to `to`.
struct Alignment {
  CartanCoord coord;
  std::vector<WeylMove> moves;
  double distance = 0.0;
};
Alignment align_moves(const CartanCoord &from, const CartanCoord &to);

/// Class of U^dagger: (pi - c1, c2, c3).
CartanCoord inverse_map(const CartanCoord &c);
/// Class of SWAP.U: (pi/2 + s c3, pi/2 - c2, s (pi/2 - c1)),
/// s = sgn(pi/2 - c1) with sgn(0) = +1.
CartanCoord mirror_map(const CartanCoord &c);
/// Class of SWAP.U^dagger: (pi/2 - s c3, pi/2 - c2, s (pi/2 - c1)).
CartanCoord mirrored_inverse_map(const CartanCoord &c);

bool is_inverse_invariant(const CartanCoord &c, double tol = 1e-8);
bool is_mirror_invariant(const CartanCoord &c, double tol = 1e-8);
bool is_mirrored_inverse_invariant(const CartanCoord &c, double tol = 1e-8);

}  // namespace weyl
