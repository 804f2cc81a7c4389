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

#include "weyl/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "weyl/coverage.hpp"
#include "weyl/error.hpp"
#include "weyl/symmetry.hpp"

namespace weyl {

using std::numbers::pi;

bool reachable(const CartanCoord &u, const CartanCoord &v, double slack) {
  return contains(coverage_region(u, u), v, slack);
}

namespace {

using Angles = std::array<double, 6>;

Mat2 zyz(double a, double b, double c) { return rz(a) * ry(b) * rz(c); }

LocalPair middle_local(const Angles &x) {
  return {zyz(x[0], x[1], x[2]), zyz(x[3], x[4], x[5])};
}

class Objective {
 public:
  Objective(const Mat4 &u, const LocalInvariants &target) : u_(u), target_(target) {}

  // (Re dG1, Im dG1, dG2); the mismatch is its squared norm.
  Eigen::Vector3d residual(const Angles &x) {
    ++evaluations;
    const Mat4 w = u_ * middle_local(x).matrix() * u_;
    // Products of unitaries stay unitary to rounding; skip the check.
    const Mat4 m = makhlin_matrix(w);
    const Complex det = w.determinant();
    const Complex tr = m.trace();
    const Complex tr2 = (m * m).trace();
    const Complex g1 = tr * tr / (16.0 * det);
    const double g2 = ((tr * tr - tr2) / (4.0 * det)).real();
    return {g1.real() - target_.g1.real(), g1.imag() - target_.g1.imag(), g2 - target_.g2};
  }

  double operator()(const Angles &x) { return residual(x).squaredNorm(); }

  std::uint64_t evaluations = 0;

 private:
  Mat4 u_;
  LocalInvariants target_;
};

struct Minimum {
  Angles x{};
  double f = 0.0;
};

// Nelder-Mead with the standard coefficients.
Minimum nelder_mead(Objective &f, const Angles &start, double step, std::uint64_t max_evals) {
  constexpr int n = 6;
  std::array<Angles, n + 1> pts;
  std::array<double, n + 1> vals{};
  pts[0] = start;
  for (int i = 0; i < n; ++i) {
    pts[i + 1] = start;
    pts[i + 1][i] += step;
  }
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::array<int, n + 1> order{};
  while (f.evaluations < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];
    if (vals[best] < 1e-26) break;
    double diameter = 0.0;
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < n; ++k) diameter = std::max(diameter, std::abs(pts[i][k] - pts[best][k]));
    if (diameter < 1e-12) break;

    Angles centroid{};
    for (int i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (int k = 0; k < n; ++k) centroid[k] += pts[i][k] / n;
    }
    auto along = [&](double t) {
      Angles p;
      for (int k = 0; k < n; ++k) p[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
      return p;
    };
    const Angles xr = along(-1.0);
    const double fr = f(xr);
    if (fr < vals[best]) {
      const Angles xe = along(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const Angles xc = along(outside ? -0.5 : 0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (int k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      vals[i] = f(pts[i]);
    }
  }
  const int best = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  return {pts[best], vals[best]};
}

// Levenberg-Marquardt on the residual vector with a finite-difference
// Jacobian. Plain gradient steps crawl when the target sits on a chamber
// wall, where the mismatch grows only quartically.
Minimum polish(Objective &f, Minimum m, std::uint64_t max_evals) {
  constexpr double h = 1e-7;
  double lambda = 1e-3;
  Eigen::Vector3d r = f.residual(m.x);
  m.f = r.squaredNorm();
  while (f.evaluations + 8 < max_evals && m.f > 1e-30) {
    Eigen::Matrix<double, 3, 6> jac;
    for (int k = 0; k < 6; ++k) {
      Angles xp = m.x;
      xp[k] += h;
      jac.col(k) = (f.residual(xp) - r) / h;
    }
    const Eigen::Matrix<double, 6, 6> jtj = jac.transpose() * jac;
    const Eigen::Matrix<double, 6, 1> g = jac.transpose() * r;
    bool moved = false;
    while (lambda < 1e12 && f.evaluations < max_evals) {
      Eigen::Matrix<double, 6, 6> a = jtj;
      a.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
      const Eigen::Matrix<double, 6, 1> step = a.ldlt().solve(-g);
      Angles x = m.x;
      for (int k = 0; k < 6; ++k) x[k] += step(k);
      const Eigen::Vector3d rx = f.residual(x);
      const double fx = rx.squaredNorm();
      if (fx < m.f) {
        m = {x, fx};
        r = rx;
        lambda = std::max(lambda / 3, 1e-12);
        moved = true;
        break;
      }
      lambda *= 4;
    }
    if (!moved) break;
  }
  return m;
}

struct Assembly {
  LocalPair l1, l3;
  Complex phase;
  Mat4 circuit;
  double fidelity = 0.0;
  CartanCoord achieved;
};

LocalPair to_pair(const Mat4 &local) {
  // The phase drops out; fidelity and the reported phase are taken from
  // the reassembled circuit.
  const LocalFactors f = su2_factor(local);
  return {f.first, f.second};
}

// Recovers L1, L3 from the KAK forms of W = U L2 U and V.
Assembly assemble(const Mat4 &u, const LocalPair &l2, const Mat4 &v) {
  const Mat4 w = u * l2.matrix() * u;
  const KakDecomposition kw = kak_decompose(w, 1e-8);
  const KakDecomposition kv = kak_decompose(v, 1e-8);
  // Can(c_W) = A Can(g c_W) B with g c_W ~ c_V.
  const Alignment al = align_moves(kw.coord, kv.coord);
  const MoveLocals ab = move_locals(al.moves);
  const Mat4 l1 = kv.left() * (kw.left() * ab.left).adjoint();
  const Mat4 l3 = (ab.right * kw.right()).adjoint() * kv.right();

  Assembly out;
  out.l1 = to_pair(l1);
  out.l3 = to_pair(l3);
  out.circuit = out.l1.matrix() * w * out.l3.matrix();
  const Complex overlap = (v.adjoint() * out.circuit).trace() / 4.0;
  out.fidelity = std::min(1.0, std::abs(overlap));
  out.phase = std::abs(overlap) > 0 ? std::conj(overlap) / std::abs(overlap) : Complex{1, 0};
  out.achieved = kw.coord;
  return out;
}

}  // namespace

SynthesisResult synthesize(const Mat4 &u, const Mat4 &v, const SynthesisOptions &opts) {
  require_unitary(u, opts.unitarity_tol, "gate");
  require_unitary(v, opts.unitarity_tol, "target");
  if (opts.restarts < 1 || opts.budget < 100) {
    throw Error(ErrorCode::OutOfRange, "need at least one restart and a budget of 100");
  }
  const CartanCoord cu = cartan_coordinates(u, opts.unitarity_tol);
  const CartanCoord cv = cartan_coordinates(v, opts.unitarity_tol);
  if (!reachable(cu, cv, opts.reach_slack)) {
    throw Error(ErrorCode::NotReachable,
                "target class " + to_string(cv) + " is outside the two-application coverage of " +
                    to_string(cu));
  }
  const LocalInvariants target = local_invariants(v, opts.unitarity_tol);

  SynthesisResult best;
  best.gate = u;
  best.target_class = cv;
  best.fidelity = -1.0;
  std::uint64_t total_evals = 0;

  // Restarts are independent: restart i depends only on (seed, i). They run
  // in index order and the first success wins, which is the same answer a
  // parallel run picking the lowest successful index would give.
  for (int r = 0; r < opts.restarts; ++r) {
    Angles start{};
    if (r > 0) {
      Rng rng(opts.seed + static_cast<std::uint64_t>(r));
      std::uniform_real_distribution<double> ang(-pi, pi);
      for (double &a : start) a = ang(rng);
    }
    Objective f(u, target);
    const auto budget = static_cast<std::uint64_t>(opts.budget);
    Minimum m = nelder_mead(f, start, 0.6, budget * 7 / 10);
    m = polish(f, m, budget);
    total_evals += f.evaluations;

    SynthesisResult cand;
    cand.gate = u;
    cand.target_class = cv;
    cand.l2 = middle_local(m.x);
    cand.mismatch = m.f;
    cand.restart = r;
    try {
      const Assembly as = assemble(u, cand.l2, v);
      cand.l1 = as.l1;
      cand.l3 = as.l3;
      cand.circuit = as.circuit;
      cand.fidelity = as.fidelity;
      cand.phase = as.phase;
      cand.achieved_class = as.achieved;
    } catch (const Error &) {
      continue;
    }
    if (cand.fidelity > best.fidelity) best = cand;
    if (cand.fidelity >= opts.fidelity_target) {
      best.status = SynthesisStatus::Success;
      break;
    }
  }
  best.evaluations = total_evals;
  if (best.fidelity < 0) {
    throw Error(ErrorCode::ConvergenceFailure, "no restart produced a decomposable circuit");
  }
  return best;
}

std::optional<Rational> minimal_family_parameter(const FamilySpec &spec, const CartanCoord &v,
                                                 double slack, int grid, int bisection_steps) {
  auto reach = [&](const Rational &t) {
    return contains(coverage_region(family_coord(spec, t), family_coord(spec, t)), v, slack);
  };
  const std::vector<Rational> ts = family_grid(spec, grid);
  std::size_t first = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (reach(ts[i])) {
      first = i;
      break;
    }
  }
  if (first == ts.size()) return std::nullopt;
  if (first == 0) return ts[0];
  Rational lo = ts[first - 1], hi = ts[first];
  for (int s = 0; s < bisection_steps; ++s) {
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    (reach(mid) ? hi : lo) = mid;
  }
  return hi;
}

SynthesisResult synthesize_with_family(const FamilySpec &spec, const Mat4 &v,
                                       const SynthesisOptions &opts) {
  require_unitary(v, opts.unitarity_tol, "target");
  const CartanCoord cv = cartan_coordinates(v, opts.unitarity_tol);
  const auto t = minimal_family_parameter(spec, cv, opts.reach_slack);
  if (!t) {
    throw Error(ErrorCode::NotReachableByFamily,
                "no member of " + spec.name + " reaches " + to_string(cv) + " in two applications");
  }
  // At the minimal parameter the target sits on the region boundary, often
  // at a vertex, where the optimizer can stall short of the fidelity target.
  // Then step the parameter up by shrinking fractions of what is left.
  Rational use = *t;
  SynthesisResult res;
  for (int attempt = 0;; ++attempt) {
    const Mat4 u = canonical_gate(to_radians(family_coord(spec, use)));
    res = synthesize(u, v, opts);
    if (res.ok() || use == spec.hi || attempt == 6) break;
    Rational next = use + (spec.hi - use) / 64 * (Rational(1) << attempt);
    next.canonicalize();
    use = std::min<Rational>(next, spec.hi);
  }
  res.exact_parameter = use;
  res.parameter = to_double(use) * pi;
  return res;
}

}  // namespace weyl
