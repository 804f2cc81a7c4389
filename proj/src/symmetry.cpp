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

#include "weyl/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "weyl/error.hpp"

namespace weyl {

using std::numbers::pi;

namespace {

Mat2 pauli_of(int axis) {
  switch (axis) {
    case 0: return pauli::x();
    case 1: return pauli::y();
    default: return pauli::z();
  }
}

// The axis not in {i, j}.
int third(int i, int j) { return 3 - i - j; }

// Snap near-boundary values left over from the floating fold.
constexpr double kSnap = 1e-13;

}  // namespace

CartanCoord apply_move(const CartanCoord &c, const WeylMove &m) {
  CartanCoord out = c;
  switch (m.kind) {
    case WeylMove::Kind::Shift:
      out[m.i] += m.n * pi;
      break;
    case WeylMove::Kind::Swap:
      std::swap(out[m.i], out[m.j]);
      break;
    case WeylMove::Kind::FlipPair:
      out[m.i] = -out[m.i];
      out[m.j] = -out[m.j];
      break;
  }
  return out;
}

CartanCoord apply_moves(CartanCoord c, const std::vector<WeylMove> &moves) {
  for (const auto &m : moves) c = apply_move(c, m);
  return c;
}

MoveLocals move_locals(const WeylMove &m) {
  const Mat4 id = Mat4::Identity();
  switch (m.kind) {
    case WeylMove::Kind::Shift: {
      // exp(i(c + n pi) P/2) = exp(icP/2) (iP)^n, so the original gate is the
      // shifted one times (-iP)^n.
      const Mat2 s = pauli_of(m.i);
      const Mat4 p = kron(s, s);
      const int n = m.n;
      const int odd = ((n % 2) + 2) % 2;
      const int quarter = ((n % 4) + 4) % 4;
      static const Complex powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
      return {id, powers[quarter] * (odd ? p : id)};
    }
    case WeylMove::Kind::Swap: {
      // P H(c) P^dagger = H(c'); so exp(iH(c)/2) = P^dagger exp(iH(c')/2) P.
      Mat2 s;
      const int a = std::min(m.i, m.j), b = std::max(m.i, m.j);
      if (a == 0 && b == 1) {
        s << 1, 0, 0, kI;
      } else if (a == 1 && b == 2) {
        s = rx(pi / 2);
      } else {
        s = ry(pi / 2);
      }
      const Mat4 p = kron(s, s);
      return {p.adjoint(), p};
    }
    case WeylMove::Kind::FlipPair: {
      const Mat4 p = kron(pauli_of(third(m.i, m.j)), pauli::identity());
      return {p, p};
    }
  }
  return {id, id};
}

MoveLocals move_locals(const std::vector<WeylMove> &moves) {
  MoveLocals acc{Mat4::Identity(), Mat4::Identity()};
  for (const auto &m : moves) {
    const MoveLocals l = move_locals(m);
    acc.left = acc.left * l.left;
    acc.right = l.right * acc.right;
  }
  return acc;
}

Canonicalized canonicalize_with_moves(const CartanCoord &raw) {
  Canonicalized out;
  CartanCoord c = raw;
  auto push = [&](const WeylMove &m) {
    out.moves.push_back(m);
    c = apply_move(c, m);
  };

  // A negative entry next to a zero one is fixed by a pair flip, which keeps
  // (-a, 0, 0) at (a, 0, 0) instead of its twin (pi - a, 0, 0).
  for (int i = 0; i < 3; ++i) {
    if (!(c[i] < -kSnap) || c[i] <= -pi / 2) continue;
    for (int j = 0; j < 3; ++j) {
      if (j != i && std::abs(c[j]) < kSnap) {
        push(WeylMove::flip(std::min(i, j), std::max(i, j)));
        c[j] = 0.0;
        break;
      }
    }
  }

  // Reduce each coordinate into [0, pi).
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(c[i]) || std::abs(c[i]) > 1e12) {
      throw Error(ErrorCode::ConvergenceFailure, "non-finite or huge Cartan coordinate");
    }
    int n = -static_cast<int>(std::floor(c[i] / pi));
    if (c[i] + n * pi >= pi - kSnap) n -= 1;
    if (n != 0) push(WeylMove::shift(i, n));
    if (c[i] < 0) c[i] = 0.0;
  }

  // Fold pairs above pi/2 down: (a, b) -> (pi - a, pi - b).
  auto fold = [&](int i, int j) {
    push(WeylMove::flip(i, j));
    push(WeylMove::shift(i, 1));
    push(WeylMove::shift(j, 1));
  };
  for (;;) {
    std::array<int, 3> big{};
    int count = 0;
    for (int i = 0; i < 3; ++i)
      if (c[i] > pi / 2) big[count++] = i;
    if (count < 2) break;
    fold(big[0], big[1]);
  }

  auto sort_desc = [&]() {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < 2; ++i)
        if (c[i] < c[i + 1]) push(WeylMove::swap(i, i + 1));
  };
  sort_desc();
  if (c.c1 + c.c2 > pi) {
    fold(0, 1);
    sort_desc();
  }

  for (int i = 0; i < 3; ++i)
    if (std::abs(c[i]) < kSnap) c[i] = 0.0;
  if (!in_chamber(c, 1e-12)) {
    throw Error(ErrorCode::ConvergenceFailure,
                "canonicalization left the chamber: " + to_string(c));
  }
  out.coord = c;
  return out;
}

CartanCoord canonicalize(const CartanCoord &raw) { return canonicalize_with_moves(raw).coord; }

Alignment align_moves(const CartanCoord &from, const CartanCoord &to) {
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static const std::array<std::pair<int, int>, 4> flips = {
      {{-1, -1}, {0, 1}, {1, 2}, {0, 2}}};

  Alignment best;
  best.distance = std::numeric_limits<double>::infinity();
  for (const auto &flip : flips) {
    for (const auto &perm : perms) {
      std::vector<WeylMove> moves;
      CartanCoord c = from;
      auto push = [&](const WeylMove &m) {
        moves.push_back(m);
        c = apply_move(c, m);
      };
      if (flip.first >= 0) push(WeylMove::flip(flip.first, flip.second));
      // Bring the entry originally at perm[k] to slot k by swaps.
      std::array<int, 3> where = {0, 1, 2};  // where[slot] = original index
      for (int k = 0; k < 3; ++k) {
        int at = k;
        while (where[at] != perm[k]) ++at;
        if (at != k) {
          push(WeylMove::swap(k, at));
          std::swap(where[k], where[at]);
        }
      }
      for (int k = 0; k < 3; ++k) {
        const int n = static_cast<int>(std::lround((to[k] - c[k]) / pi));
        if (n != 0) push(WeylMove::shift(k, n));
      }
      const double d = std::max({std::abs(c.c1 - to.c1), std::abs(c.c2 - to.c2),
                                 std::abs(c.c3 - to.c3)});
      if (d < best.distance) {
        best.distance = d;
        best.coord = c;
        best.moves = std::move(moves);
      }
    }
  }
  return best;
}

namespace {

double sgn(double x) { return x >= 0 ? 1.0 : -1.0; }

}  // namespace

CartanCoord inverse_map(const CartanCoord &c) {
  return canonicalize({pi - c.c1, c.c2, c.c3});
}

CartanCoord mirror_map(const CartanCoord &c) {
  const double s = sgn(pi / 2 - c.c1);
  return canonicalize({pi / 2 + s * c.c3, pi / 2 - c.c2, s * (pi / 2 - c.c1)});
}

CartanCoord mirrored_inverse_map(const CartanCoord &c) {
  const double s = sgn(pi / 2 - c.c1);
  return canonicalize({pi / 2 - s * c.c3, pi / 2 - c.c2, s * (pi / 2 - c.c1)});
}

bool is_inverse_invariant(const CartanCoord &c, double tol) {
  return class_equal(c, inverse_map(c), tol);
}

bool is_mirror_invariant(const CartanCoord &c, double tol) {
  return class_equal(c, mirror_map(c), tol);
}

bool is_mirrored_inverse_invariant(const CartanCoord &c, double tol) {
  return class_equal(c, mirrored_inverse_map(c), tol);
}

}  // namespace weyl
