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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weyl/cartan.hpp"
#include "weyl/coord.hpp"
#include "weyl/numerics.hpp"
#include "weyl/pi_rational.hpp"
#include "weyl/qlr.hpp"

namespace weyl {

/// Exact point or direction in (c1, c2, c3) space, in units of pi.
using Vec3q = std::array<Rational, 3>;

/// normal . x <= offset, x in units of pi.
struct Halfspace {
  Vec3q normal;
  Rational offset;
};

struct HalfspaceSystem {
  std::vector<Halfspace> rows;
  /// Set when a row reduced to 0 <= negative.
  bool trivially_infeasible = false;
};

/// c1 >= c2 >= c3 >= 0, c1 + c2 <= pi.
HalfspaceSystem chamber_halfspaces();

/// Normalizes each row (first nonzero normal entry has magnitude one),
/// keeps the tightest offset per normal and drops 0 <= nonnegative rows.
HalfspaceSystem simplify(const HalfspaceSystem &hs);

HalfspaceSystem intersect(const HalfspaceSystem &a, const HalfspaceSystem &b);

/// One inequality per tuple,
///   d - sum_j b_{k+j-alpha_j} - sum_j e_{k+j-beta_j} + sum_j f_{k+j-delta_j} >= 0,
/// with f the content of the unknown point, rewritten in coordinates; then
/// the ordering constraints on f and the chamber. Throws InvalidContent.
HalfspaceSystem build_halfspaces(const ExactContent &b, const ExactContent &e,
                                 const std::vector<QlrTuple> &tuples);

/// The linear map x -> content(x) as rows: f_i = row_i . x.
const std::array<Vec3q, 4> &content_rows();

struct AffineHull {
  int dim = -1;  // -1 for the empty set
  Vec3q point{};
  std::vector<Vec3q> directions;
  /// Equations eq.normal . x = eq.offset cutting out the hull.
  std::vector<Halfspace> equations;
};

AffineHull affine_hull(const std::vector<Vec3q> &points);

struct ConvexRegion {
  HalfspaceSystem halfspaces;  // simplified
  std::vector<Vec3q> vertices;  // sorted, unique
  int dim = -1;                  // -1 when empty
  AffineHull hull;

  bool empty() const { return dim < 0; }
  bool contains(const Vec3q &x) const;
  /// Rows tight on at least one vertex.
  std::vector<Halfspace> active_halfspaces() const;
};

/// Bit budget for vertex coordinates (numerator plus denominator).
inline constexpr std::size_t kDefaultMaxBits = 4096;

/// Exact vertex enumeration over all triples of rows. Throws NumericOverflow
/// if a vertex needs more than max_bits.
ConvexRegion solve_region(const HalfspaceSystem &hs, std::size_t max_bits = kDefaultMaxBits);

/// Exact volume in units of pi^3; zero unless dim == 3.
Rational region_volume(const ConvexRegion &region);

/// pi^3 / 24 in units of pi^3.
Rational chamber_volume();

struct SignPair {
  bool negate_first = false;
  bool negate_second = false;
  std::string label() const;
};

struct CoverageRegion {
  ExactCoord source1;
  ExactCoord source2;
  std::array<SignPair, 4> signs;
  std::array<ConvexRegion, 4> regions;
  /// Double copies of the rows for fast float membership.
  std::array<std::vector<std::array<double, 4>>, 4> float_rows;

  /// Dimension of the union as a set: the largest piece.
  int union_dim() const;
  /// Affine hull of every piece's vertices, in coordinate space (so the two
  /// representatives of a c3 = 0 class both count).
  AffineHull union_hull() const;
};

CoverageRegion coverage_region(const ExactCoord &u1, const ExactCoord &u2,
                               const std::vector<QlrTuple> &tuples);
CoverageRegion coverage_region(const ExactCoord &u1, const ExactCoord &u2);
/// Rationalizes both coordinates first.
CoverageRegion coverage_region(const CartanCoord &u1, const CartanCoord &u2);

/// Exact membership, testing both representatives of a c3 = 0 class.
bool contains(const CoverageRegion &region, const ExactCoord &x);
/// Float membership with slack tol (radians) on every row.
bool contains(const CoverageRegion &region, const CartanCoord &c, double tol = 1e-8);

/// Exact volume of the union (inclusion-exclusion over the sign pairs)
/// divided by the chamber volume.
Rational exact_fractional_volume(const CoverageRegion &region);
double fractional_volume(const CoverageRegion &region);

struct McEstimate {
  double fraction = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
};

/// Uniform chamber sampling; hits are tested with zero slack. Throws
/// OutOfRange when samples < 1000.
McEstimate mc_volume(const CoverageRegion &region, std::uint64_t samples, Rng &rng);

/// Uniform sample from the chamber tetrahedron.
CartanCoord sample_chamber(Rng &rng);

std::string format_vec(const Vec3q &v);

}  // namespace weyl
