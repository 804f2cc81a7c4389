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

#include "weyl/coverage.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "weyl/error.hpp"

namespace weyl {

using std::numbers::pi;

namespace {

Rational dot(const Vec3q &a, const Vec3q &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3q sub(const Vec3q &a, const Vec3q &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3q cross(const Vec3q &a, const Vec3q &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Vec3q &a, const Vec3q &b, const Vec3q &c) { return dot(a, cross(b, c)); }

bool is_zero(const Vec3q &v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

bool less_vec(const Vec3q &a, const Vec3q &b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

bool equal_vec(const Vec3q &a, const Vec3q &b) { return a[0] == b[0] && a[1] == b[1] && a[2] == b[2]; }

// Independent subset of vs, found by keeping a reduced row echelon form
// of what has been picked so far.
std::vector<Vec3q> basis_of(const std::vector<Vec3q> &vs) {
  std::vector<std::pair<int, Vec3q>> echelon;  // (pivot, row), pivot entry 1
  std::vector<Vec3q> picked;
  for (const auto &v : vs) {
    Vec3q w = v;
    for (const auto &[p, r] : echelon) {
      if (w[p] == 0) continue;
      const Rational f = w[p];
      for (int i = 0; i < 3; ++i) w[i] -= f * r[i];
    }
    int p = 0;
    while (p < 3 && w[p] == 0) ++p;
    if (p == 3) continue;
    const Rational s = w[p];
    for (auto &x : w) x /= s;
    for (auto &[q, r] : echelon) {
      if (r[p] == 0) continue;
      const Rational f = r[p];
      for (int i = 0; i < 3; ++i) r[i] -= f * w[i];
    }
    echelon.emplace_back(p, w);
    picked.push_back(v);
    if (picked.size() == 3) break;
  }
  return picked;
}

int rank_of(const std::vector<Vec3q> &vs) { return static_cast<int>(basis_of(vs).size()); }

std::size_t bits(const Rational &q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Halfspace row(Rational a, Rational b, Rational c, Rational off) {
  return {{std::move(a), std::move(b), std::move(c)}, std::move(off)};
}

}  // namespace

std::string format_vec(const Vec3q &v) {
  return "(" + format_pi(v[0]) + ", " + format_pi(v[1]) + ", " + format_pi(v[2]) + ")";
}

HalfspaceSystem chamber_halfspaces() {
  HalfspaceSystem hs;
  hs.rows.push_back(row(-1, 1, 0, 0));  // c1 >= c2
  hs.rows.push_back(row(0, -1, 1, 0));  // c2 >= c3
  hs.rows.push_back(row(0, 0, -1, 0));  // c3 >= 0
  hs.rows.push_back(row(1, 1, 0, 1));   // c1 + c2 <= pi
  return hs;
}

HalfspaceSystem simplify(const HalfspaceSystem &hs) {
  HalfspaceSystem out;
  out.trivially_infeasible = hs.trivially_infeasible;
  std::map<Vec3q, Rational, decltype(&less_vec)> best(&less_vec);
  for (const auto &h : hs.rows) {
    int p = 0;
    while (p < 3 && h.normal[p] == 0) ++p;
    if (p == 3) {
      if (h.offset < 0) out.trivially_infeasible = true;
      continue;
    }
    const Rational s = abs(h.normal[p]);
    Vec3q n = {h.normal[0] / s, h.normal[1] / s, h.normal[2] / s};
    const Rational off = h.offset / s;
    auto it = best.find(n);
    if (it == best.end()) {
      best.emplace(std::move(n), off);
    } else if (off < it->second) {
      it->second = off;
    }
  }
  for (auto &[n, off] : best) out.rows.push_back({n, off});
  return out;
}

HalfspaceSystem intersect(const HalfspaceSystem &a, const HalfspaceSystem &b) {
  HalfspaceSystem out = a;
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  out.trivially_infeasible = a.trivially_infeasible || b.trivially_infeasible;
  return simplify(out);
}

const std::array<Vec3q, 4> &content_rows() {
  static const std::array<Vec3q, 4> rows = [] {
    const Rational h(1, 2);
    return std::array<Vec3q, 4>{{{h, h, -h}, {h, -h, h}, {-h, h, h}, {-h, -h, -h}}};
  }();
  return rows;
}

HalfspaceSystem build_halfspaces(const ExactContent &b, const ExactContent &e,
                                 const std::vector<QlrTuple> &tuples) {
  if (!valid_content(b) || !valid_content(e)) {
    throw Error(ErrorCode::InvalidContent, "nonlocal content violates ordering or sum rules");
  }
  const auto &cm = content_rows();
  HalfspaceSystem hs;
  for (const auto &t : tuples) {
    Rational constant = t.d;
    Vec3q coef = {0, 0, 0};
    for (int j = 1; j <= t.r; ++j) {
      const int ib = t.k + j - t.alpha[j - 1] - 1;
      const int ie = t.k + j - t.beta[j - 1] - 1;
      const int idl = t.k + j - t.delta[j - 1] - 1;
      if (ib < 0 || ib > 3 || ie < 0 || ie > 3 || idl < 0 || idl > 3) {
        throw Error(ErrorCode::InvalidContent, "tuple index outside the content vector");
      }
      constant -= b[ib];
      constant -= e[ie];
      for (int i = 0; i < 3; ++i) coef[i] += cm[idl][i];
    }
    // constant + coef . x >= 0
    hs.rows.push_back({{-coef[0], -coef[1], -coef[2]}, constant});
  }
  // Ordering of f and f1 - f4 <= 1.
  for (int i = 0; i < 3; ++i) {
    const Vec3q d = sub(cm[i + 1], cm[i]);
    hs.rows.push_back({d, 0});
  }
  hs.rows.push_back({sub(cm[0], cm[3]), 1});
  const HalfspaceSystem ch = chamber_halfspaces();
  hs.rows.insert(hs.rows.end(), ch.rows.begin(), ch.rows.end());
  return simplify(hs);
}

AffineHull affine_hull(const std::vector<Vec3q> &points) {
  AffineHull h;
  if (points.empty()) return h;
  h.point = points.front();
  std::vector<Vec3q> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], h.point));
  h.directions = basis_of(diffs);
  h.dim = static_cast<int>(h.directions.size());
  // Orthogonal complement of the directions.
  std::vector<Vec3q> normals;
  if (h.dim == 0) {
    normals = {Vec3q{1, 0, 0}, Vec3q{0, 1, 0}, Vec3q{0, 0, 1}};
  } else if (h.dim == 1) {
    const Vec3q &d = h.directions[0];
    for (const Vec3q &ax : {Vec3q{1, 0, 0}, Vec3q{0, 1, 0}, Vec3q{0, 0, 1}}) {
      const Vec3q n = cross(d, ax);
      if (!is_zero(n)) normals.push_back(n);
    }
    normals = basis_of(normals);
  } else if (h.dim == 2) {
    normals.push_back(cross(h.directions[0], h.directions[1]));
  }
  for (auto &n : normals) {
    int p = 0;
    while (n[p] == 0) ++p;
    const Rational s = n[p];
    for (auto &v : n) v /= s;
    h.equations.push_back({n, dot(n, h.point)});
  }
  return h;
}

bool ConvexRegion::contains(const Vec3q &x) const {
  if (empty()) return false;
  for (const auto &h : halfspaces.rows)
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

std::vector<Halfspace> ConvexRegion::active_halfspaces() const {
  std::vector<Halfspace> out;
  for (const auto &h : halfspaces.rows) {
    for (const auto &v : vertices) {
      if (dot(h.normal, v) == h.offset) {
        out.push_back(h);
        break;
      }
    }
  }
  return out;
}

ConvexRegion solve_region(const HalfspaceSystem &input, std::size_t max_bits) {
  ConvexRegion region;
  region.halfspaces = simplify(input);
  if (region.halfspaces.trivially_infeasible) return region;
  const auto &rows = region.halfspaces.rows;
  const std::size_t m = rows.size();
  std::vector<Vec3q> verts;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec3q ab = cross(rows[a].normal, rows[b].normal);
      if (is_zero(ab)) continue;
      for (std::size_t c = b + 1; c < m; ++c) {
        const Rational det = dot(rows[c].normal, ab);
        if (det == 0) continue;
        // Cramer: x = (oa (nb x nc) + ob (nc x na) + oc (na x nb)) / det.
        const Vec3q bc = cross(rows[b].normal, rows[c].normal);
        const Vec3q ca = cross(rows[c].normal, rows[a].normal);
        Vec3q x;
        for (int i = 0; i < 3; ++i)
          x[i] = (rows[a].offset * bc[i] + rows[b].offset * ca[i] + rows[c].offset * ab[i]) / det;
        bool feasible = true;
        for (const auto &h : rows) {
          if (dot(h.normal, x) > h.offset) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        for (const auto &v : x) {
          if (bits(v) > max_bits) {
            throw Error(ErrorCode::NumericOverflow, "vertex coordinate exceeds the bit budget");
          }
        }
        verts.push_back(std::move(x));
      }
    }
  }
  std::sort(verts.begin(), verts.end(), less_vec);
  verts.erase(std::unique(verts.begin(), verts.end(), equal_vec), verts.end());
  region.vertices = std::move(verts);
  region.hull = affine_hull(region.vertices);
  region.dim = region.hull.dim;
  return region;
}

Rational region_volume(const ConvexRegion &region) {
  if (region.dim < 3) return 0;
  const auto &rows = region.halfspaces.rows;
  const auto &vs = region.vertices;
  // tight[v] = rows tight at vertex v.
  std::vector<std::vector<std::size_t>> tight(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v)
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (dot(rows[i].normal, vs[v]) == rows[i].offset) tight[v].push_back(i);

  auto is_edge = [&](std::size_t u, std::size_t w) {
    std::vector<Vec3q> common;
    for (std::size_t i : tight[u])
      if (std::binary_search(tight[w].begin(), tight[w].end(), i)) common.push_back(rows[i].normal);
    return rank_of(common) == 2;
  };

  // Pulling triangulation from vertex 0: every facet away from it, fanned
  // from one of its own vertices.
  const Vec3q &apex = vs.front();
  Rational six_vol = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::size_t> face;
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (std::binary_search(tight[v].begin(), tight[v].end(), i)) face.push_back(v);
    if (face.size() < 3 || face.front() == 0) continue;
    std::vector<Vec3q> pts;
    for (std::size_t v : face) pts.push_back(vs[v]);
    if (affine_hull(pts).dim != 2) continue;
    const std::size_t w0 = face.front();
    for (std::size_t p = 1; p < face.size(); ++p) {
      for (std::size_t q = p + 1; q < face.size(); ++q) {
        if (!is_edge(face[p], face[q])) continue;
        const Rational d =
            det3(sub(vs[w0], apex), sub(vs[face[p]], apex), sub(vs[face[q]], apex));
        six_vol += abs(d);
      }
    }
  }
  return six_vol / 6;
}

Rational chamber_volume() { return Rational(1, 24); }

std::string SignPair::label() const {
  return std::string(negate_first ? "-" : "+") + (negate_second ? "-" : "+");
}

int CoverageRegion::union_dim() const {
  int d = -1;
  for (const auto &r : regions) d = std::max(d, r.dim);
  return d;
}

AffineHull CoverageRegion::union_hull() const {
  std::vector<Vec3q> all;
  for (const auto &r : regions) all.insert(all.end(), r.vertices.begin(), r.vertices.end());
  return affine_hull(all);
}

CoverageRegion coverage_region(const ExactCoord &u1, const ExactCoord &u2,
                               const std::vector<QlrTuple> &tuples) {
  CoverageRegion out;
  out.source1 = u1;
  out.source2 = u2;
  // Callers may hand in unreduced fractions such as 8/24; GMP needs them reduced.
  for (int i = 0; i < 3; ++i) {
    out.source1[i].canonicalize();
    out.source2[i].canonicalize();
  }
  const ExactContent b = nonlocal_content(out.source1);
  const ExactContent e = nonlocal_content(out.source2);
  const ExactContent nb = negate_content(b);
  const ExactContent ne = negate_content(e);
  for (int s = 0; s < 4; ++s) {
    SignPair sp{(s & 2) != 0, (s & 1) != 0};
    out.signs[s] = sp;
    out.regions[s] =
        solve_region(build_halfspaces(sp.negate_first ? nb : b, sp.negate_second ? ne : e, tuples));
    for (const auto &h : out.regions[s].halfspaces.rows) {
      out.float_rows[s].push_back({to_double(h.normal[0]), to_double(h.normal[1]),
                                   to_double(h.normal[2]), to_double(h.offset)});
    }
  }
  return out;
}

CoverageRegion coverage_region(const ExactCoord &u1, const ExactCoord &u2) {
  static const std::vector<QlrTuple> tuples = enumerate_inequality_tuples();
  return coverage_region(u1, u2, tuples);
}

CoverageRegion coverage_region(const CartanCoord &u1, const CartanCoord &u2) {
  return coverage_region(to_exact(u1), to_exact(u2));
}

bool contains(const CoverageRegion &region, const ExactCoord &x) {
  std::vector<Vec3q> cands = {{x.x1, x.x2, x.x3}};
  if (x.x3 == 0) cands.push_back({1 - x.x1, x.x2, x.x3});
  for (const auto &r : region.regions)
    for (const auto &c : cands)
      if (r.contains(c)) return true;
  return false;
}

bool contains(const CoverageRegion &region, const CartanCoord &c, double tol) {
  std::vector<std::array<double, 3>> cands = {{c.c1 / pi, c.c2 / pi, c.c3 / pi}};
  if (std::abs(c.c3) <= tol) cands.push_back({1 - c.c1 / pi, c.c2 / pi, c.c3 / pi});
  const double slack = tol / pi;
  for (std::size_t s = 0; s < 4; ++s) {
    if (region.regions[s].empty()) continue;
    for (const auto &x : cands) {
      bool inside = true;
      for (const auto &h : region.float_rows[s]) {
        // Rows are scaled so their largest coefficient is O(1).
        if (h[0] * x[0] + h[1] * x[1] + h[2] * x[2] > h[3] + slack) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
  }
  return false;
}

Rational exact_fractional_volume(const CoverageRegion &region) {
  // Distinct full-dimensional pieces; lower-dimensional ones have measure zero.
  std::vector<const ConvexRegion *> pieces;
  for (const auto &r : region.regions) {
    if (r.dim != 3) continue;
    bool dup = false;
    for (const auto *p : pieces) {
      if (p->vertices.size() == r.vertices.size() &&
          std::equal(p->vertices.begin(), p->vertices.end(), r.vertices.begin(), equal_vec)) {
        dup = true;
        break;
      }
    }
    if (!dup) pieces.push_back(&r);
  }
  const std::size_t n = pieces.size();
  Rational total = 0;
  // Volumes of subset intersections; a subset whose sub-intersection is
  // already lower-dimensional contributes nothing.
  std::vector<bool> flat(std::size_t{1} << n, false);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    bool skip = false;
    for (std::size_t i = 0; i < n && !skip; ++i) {
      const std::size_t sub_mask = mask & ~(std::size_t{1} << i);
      if ((mask >> i & 1) && sub_mask && flat[sub_mask]) skip = true;
    }
    Rational v = 0;
    if (skip) {
      flat[mask] = true;
    } else if (std::popcount(mask) == 1) {
      v = region_volume(*pieces[static_cast<std::size_t>(std::countr_zero(mask))]);
    } else {
      HalfspaceSystem hs;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) hs = intersect(hs, pieces[i]->halfspaces);
      const ConvexRegion r = solve_region(hs);
      v = region_volume(r);
      if (r.dim < 3) flat[mask] = true;
    }
    total += (std::popcount(mask) % 2 == 1) ? v : Rational(-v);
  }
  return total / chamber_volume();
}

double fractional_volume(const CoverageRegion &region) {
  return to_double(exact_fractional_volume(region));
}

CartanCoord sample_chamber(Rng &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const CartanCoord c{pi * u(rng), pi / 2 * u(rng), pi / 2 * u(rng)};
    if (c.c1 >= c.c2 && c.c2 >= c.c3 && c.c1 + c.c2 <= pi) return c;
  }
}

McEstimate mc_volume(const CoverageRegion &region, std::uint64_t samples, Rng &rng) {
  if (samples < 1000) {
    throw Error(ErrorCode::OutOfRange, "Monte Carlo volume needs at least 1000 samples");
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i)
    if (contains(region, sample_chamber(rng), 0.0)) ++hits;
  McEstimate est;
  est.samples = samples;
  est.fraction = static_cast<double>(hits) / static_cast<double>(samples);
  est.stderr_ = std::sqrt(est.fraction * (1 - est.fraction) / static_cast<double>(samples));
  return est;
}

}  // namespace weyl
