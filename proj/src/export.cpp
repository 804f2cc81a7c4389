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

#include "weyl/export.hpp"

#include <cstdio>

namespace weyl {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json coord_json(const ExactCoord &x) {
  const CartanCoord c = to_radians(x);
  return {{"exact_pi", {format_pi(x.x1), format_pi(x.x2), format_pi(x.x3)}},
          {"radians", {c.c1, c.c2, c.c3}}};
}

json coord_json(const CartanCoord &c) { return {{"radians", {c.c1, c.c2, c.c3}}}; }

json vec_json(const Vec3q &v) { return coord_json(ExactCoord{v[0], v[1], v[2]}); }

json halfspace_json(const Halfspace &h) {
  // normal . x <= offset with x in units of pi; the offset is printed as a
  // multiple of pi so the row reads in radians.
  return {{"normal", {h.normal[0].get_str(), h.normal[1].get_str(), h.normal[2].get_str()}},
          {"offset_pi", format_pi(h.offset)}};
}

json hull_json(const AffineHull &h) {
  json eqs = json::array();
  for (const auto &e : h.equations) {
    eqs.push_back({{"normal", {e.normal[0].get_str(), e.normal[1].get_str(), e.normal[2].get_str()}},
                   {"value_pi", format_pi(e.offset)}});
  }
  json dirs = json::array();
  for (const auto &d : h.directions) {
    dirs.push_back({d[0].get_str(), d[1].get_str(), d[2].get_str()});
  }
  json out = {{"dim", h.dim}, {"equations", eqs}, {"directions", dirs}};
  if (h.dim >= 0) out["point"] = vec_json(h.point);
  return out;
}

json region_json(const CoverageRegion &region) {
  json pieces = json::array();
  for (std::size_t s = 0; s < region.regions.size(); ++s) {
    const auto &r = region.regions[s];
    json verts = json::array();
    for (const auto &v : r.vertices) verts.push_back(vec_json(v));
    json rows = json::array();
    for (const auto &h : r.active_halfspaces()) rows.push_back(halfspace_json(h));
    pieces.push_back({{"signs", region.signs[s].label()},
                      {"dim", r.dim},
                      {"vertices", verts},
                      {"halfspaces", rows},
                      {"affine_hull", hull_json(r.hull)}});
  }
  const Rational frac = exact_fractional_volume(region);
  return {{"source_coords", {coord_json(region.source1), coord_json(region.source2)}},
          {"regions", pieces},
          {"union", {{"dim", region.union_dim()}, {"affine_hull", hull_json(region.union_hull())}}},
          {"union_volume_fraction", {{"exact", frac.get_str()}, {"float", to_double(frac)}}}};
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
  std::string out = "family_id,parameter,fraction,mc_fraction,mc_stderr\n";
  for (const auto &r : rows) {
    out += r.family_id + "," + num(r.parameter) + "," + num(to_double(r.exact_fraction)) + "," +
           num(r.mc_fraction) + "," + num(r.mc_stderr) + "\n";
  }
  return out;
}

json sweep_json(const std::vector<SweepRow> &rows) {
  json arr = json::array();
  for (const auto &r : rows) {
    arr.push_back({{"family_id", r.family_id},
                   {"parameter", r.parameter},
                   {"parameter_exact_pi", format_pi(r.exact_parameter)},
                   {"fraction", to_double(r.exact_fraction)},
                   {"fraction_exact", r.exact_fraction.get_str()},
                   {"mc_fraction", r.mc_fraction},
                   {"mc_stderr", r.mc_stderr}});
  }
  return arr;
}

}  // namespace weyl
