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

#include <string>
#include <vector>

#include <json.hpp>

#include "weyl/coverage.hpp"

namespace weyl {

/// {"exact_pi": ["pi/2", ...], "radians": [...]}
nlohmann::json coord_json(const ExactCoord &x);
nlohmann::json coord_json(const CartanCoord &c);
nlohmann::json vec_json(const Vec3q &v);
nlohmann::json halfspace_json(const Halfspace &h);
nlohmann::json hull_json(const AffineHull &h);

/// Region export: source coordinates, one entry per sign pair (dim,
/// vertices, tight halfspaces, affine hull) and the union's dimension,
/// hull and exact volume fraction.
nlohmann::json region_json(const CoverageRegion &region);

struct SweepRow {
  std::string family_id;
  double parameter = 0.0;  // radians
  Rational exact_parameter;
  Rational exact_fraction;
  double mc_fraction = 0.0;
  double mc_stderr = 0.0;
};

/// CSV with header family_id,parameter,fraction,mc_fraction,mc_stderr.
std::string sweep_csv(const std::vector<SweepRow> &rows);
nlohmann::json sweep_json(const std::vector<SweepRow> &rows);

}  // namespace weyl
