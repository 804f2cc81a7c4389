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

#include <cstdint>
#include <optional>

#include "weyl/cartan.hpp"
#include "weyl/coord.hpp"
#include "weyl/families.hpp"
#include "weyl/numerics.hpp"

namespace weyl {

struct SynthesisOptions {
  std::uint64_t seed = 20240611;
  int restarts = 8;
  /// Objective evaluations allowed per restart (simplex plus polish).
  int budget = 6000;
  double fidelity_target = 1.0 - 1e-6;
  double coord_tol = 1e-8;
  /// Outward slack for the reachability test.
  double reach_slack = 1e-7;
  double unitarity_tol = 1e-9;
};

/// A single-qubit pair a (x) b.
struct LocalPair {
  Mat2 first = Mat2::Identity();
  Mat2 second = Mat2::Identity();
  Mat4 matrix() const { return kron(first, second); }
};

enum class SynthesisStatus { Success, BudgetExhausted };

/// The circuit L1 . U . L2 . U . L3, equal to the target up to a global
/// phase when status == Success.
struct SynthesisResult {
  SynthesisStatus status = SynthesisStatus::BudgetExhausted;
  LocalPair l1, l2, l3;
  Complex phase{1.0, 0.0};  // target ~= phase * circuit
  Mat4 gate;                // the U that was used
  Mat4 circuit;             // L1 U L2 U L3
  double fidelity = 0.0;    // |tr(V^dagger circuit)| / 4
  double mismatch = 0.0;    // invariant mismatch of U L2 U vs the target
  CartanCoord target_class;
  CartanCoord achieved_class;
  int restart = -1;  // index of the restart that produced the result
  std::uint64_t evaluations = 0;
  /// Set by synthesize_with_family: the chosen family parameter (radians)
  /// and its exact value in units of pi.
  std::optional<double> parameter;
  std::optional<Rational> exact_parameter;

  bool ok() const { return status == SynthesisStatus::Success; }
};

/// Whether v is in the two-application coverage of u (with outward slack).
bool reachable(const CartanCoord &u, const CartanCoord &v, double slack = 1e-7);

/// Finds L1, L2, L3 with L1 U L2 U L3 = V up to phase. Throws NotReachable
/// when the target class is outside the coverage region; returns the best
/// attempt flagged BudgetExhausted when no restart hits the fidelity target.
SynthesisResult synthesize(const Mat4 &u, const Mat4 &v, const SynthesisOptions &opts = {});

/// Picks the smallest family parameter whose gate reaches V (grid, then
/// exact bisection), then synthesizes with that gate. Throws
/// NotReachableByFamily.
SynthesisResult synthesize_with_family(const FamilySpec &spec, const Mat4 &v,
                                       const SynthesisOptions &opts = {});

/// The smallest parameter on the family (to bisection precision) whose
/// coverage contains v; nullopt when even the top of the range fails.
std::optional<Rational> minimal_family_parameter(const FamilySpec &spec, const CartanCoord &v,
                                                 double slack = 1e-7, int grid = 11,
                                                 int bisection_steps = 16);

}  // namespace weyl
