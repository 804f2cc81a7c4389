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

#include "weyl_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "weyl/cartan.hpp"
#include "weyl/coverage.hpp"
#include "weyl/export.hpp"
#include "weyl/families.hpp"
#include "weyl/gates.hpp"
#include "weyl/qlr.hpp"
#include "weyl/symmetry.hpp"
#include "weyl/synthesis.hpp"

namespace weyl::cli {

using nlohmann::json;
using std::numbers::pi;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotReachable:
    case ErrorCode::NotReachableByFamily:
      return kNotReachable;
    case ErrorCode::NotSymmetric:
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::NumericOverflow:
    case ErrorCode::CalibrationFailure:
    case ErrorCode::BudgetExhausted:
      return kNumerical;
    default:
      return kValidation;
  }
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const std::map<std::string, Mat4 (*)()> &builtins() {
  static const std::map<std::string, Mat4 (*)()> table = {
      {"identity", gates::identity}, {"cnot", gates::cnot},   {"cz", gates::cz},
      {"swap", gates::swap},         {"sqrt_swap", gates::sqrt_swap},
      {"b", gates::b_gate},          {"dcnot", gates::dcnot}, {"iswap", gates::iswap},
  };
  return table;
}

}  // namespace

ExactCoord parse_coord_list(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw Error(ErrorCode::ParseError, "expected three comma-separated angles, got '" +
                                           std::string(text) + "'");
  }
  return {parse_angle(parts[0]), parse_angle(parts[1]), parse_angle(parts[2])};
}

Mat4 read_matrix_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open matrix file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<double> vals;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != tok.size()) {
        throw Error(ErrorCode::ParseError, "bad number '" + tok + "' in " + path);
      }
      vals.push_back(v);
    }
    if (vals.empty()) continue;
    if (vals.size() != 8) {
      throw Error(ErrorCode::ParseError, "matrix rows need 8 reals (re im pairs) in " + path);
    }
    rows.push_back(std::move(vals));
  }
  if (rows.size() != 4) throw Error(ErrorCode::ParseError, "matrix file needs 4 rows: " + path);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(rows[i][2 * j], rows[i][2 * j + 1]);
  return m;
}

GateSource parse_gate(std::string_view spec, double unitarity_tol) {
  GateSource g;
  g.label = std::string(spec);
  const std::string s(spec);
  if (auto it = builtins().find(s); it != builtins().end()) {
    g.unitary = it->second();
  } else if (s.rfind("fsim:", 0) == 0) {
    const auto parts = split(s.substr(5), ',');
    if (parts.size() != 2) throw Error(ErrorCode::ParseError, "fsim needs THETA,PHI");
    g.unitary = fsim(to_double(parse_angle(parts[0])) * pi, to_double(parse_angle(parts[1])) * pi);
  } else if (s.rfind("coord:", 0) == 0) {
    const ExactCoord x = parse_coord_list(s.substr(6));
    if (!in_chamber(x)) {
      throw Error(ErrorCode::NotInChamber, "coordinate " + s.substr(6) + " is outside the chamber");
    }
    g.unitary = canonical_gate(to_radians(x));
    g.exact = x;
    return g;
  } else {
    g.unitary = read_matrix_file(s);
  }
  require_unitary(g.unitary, unitarity_tol, g.label.c_str());
  g.exact = to_exact(cartan_coordinates(g.unitary, unitarity_tol));
  return g;
}

namespace {

struct Common {
  std::uint64_t seed = TolerancePolicy{}.rng_seed;
  std::uint64_t mc_samples = TolerancePolicy{}.volume_mc_samples;
  double tol = TolerancePolicy{}.coord_tol;
  std::string out;
  std::string format;
};

void emit(const Common &c, std::ostream &out, const std::string &text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + c.out + "'");
  f << text;
}

void require_format(const Common &c, std::initializer_list<const char *> allowed) {
  if (c.format.empty()) return;
  for (const char *a : allowed)
    if (c.format == a) return;
  throw Error(ErrorCode::ParseError, "format '" + c.format + "' is not supported here");
}

json mat2_json(const Mat2 &m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

json pair_json(const LocalPair &p) {
  return {{"first", mat2_json(p.first)}, {"second", mat2_json(p.second)}};
}

GateSource gate_or_coord(const std::string &gate, const std::string &coord) {
  if (!coord.empty() && !gate.empty()) {
    throw Error(ErrorCode::ParseError, "give either a gate or --coord, not both");
  }
  if (!coord.empty()) return parse_gate("coord:" + coord);
  if (gate.empty()) throw Error(ErrorCode::ParseError, "a gate or --coord is required");
  return parse_gate(gate);
}

int cmd_analyze(const Common &c, const std::string &gate, const std::string &coord,
                std::ostream &out) {
  require_format(c, {"json"});
  const GateSource g = gate_or_coord(gate, coord);
  const KakDecomposition kak = kak_decompose(g.unitary, 1e-9);
  const LocalInvariants inv = local_invariants(g.unitary, 1e-9);
  const NonlocalContent content = nonlocal_content(kak.coord);
  json doc = {{"gate", g.label},
              {"cartan", coord_json(kak.coord)},
              {"class_exact_pi", coord_json(g.exact)["exact_pi"]},
              {"g1", {inv.g1.real(), inv.g1.imag()}},
              {"g2", inv.g2},
              {"nonlocal_content", {content[0], content[1], content[2], content[3]}},
              {"kak_residual", kak.residual},
              {"symmetry",
               {{"inverse_invariant", is_inverse_invariant(kak.coord, c.tol)},
                {"mirror_invariant", is_mirror_invariant(kak.coord, c.tol)},
                {"mirrored_inverse_invariant", is_mirrored_inverse_invariant(kak.coord, c.tol)}}}};
  emit(c, out, doc.dump(2) + "\n");
  if (!c.out.empty()) out << "wrote " << c.out << "\n";
  return kOk;
}

int cmd_coverage(const Common &c, const std::string &gate, const std::string &coord,
                 std::ostream &out) {
  require_format(c, {"json"});
  const GateSource g = gate_or_coord(gate, coord);
  const CoverageRegion region = coverage_region(g.exact, g.exact);
  const Rational frac = exact_fractional_volume(region);
  json doc = region_json(region);
  std::ostringstream summary;
  summary << "fraction exact=" << frac.get_str() << " float=" << std::setprecision(12)
          << to_double(frac) << " dim=" << region.union_dim();
  if (c.mc_samples > 0) {
    Rng rng(c.seed);
    const McEstimate mc = mc_volume(region, c.mc_samples, rng);
    doc["mc"] = {{"fraction", mc.fraction}, {"stderr", mc.stderr_}, {"samples", mc.samples}, {"seed", c.seed}};
    summary << " mc=" << mc.fraction << " +- " << mc.stderr_;
  }
  summary << " hull_dim=" << region.union_hull().dim << "\n";
  if (c.out.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    emit(c, out, doc.dump(2) + "\n");
  }
  out << summary.str();
  return kOk;
}

int cmd_sweep(const Common &c, const std::string &family, int points,
              const std::string &secondary, bool mirrored, std::ostream &out) {
  require_format(c, {"csv", "json"});
  std::optional<Rational> sec;
  if (!secondary.empty()) sec = parse_angle(secondary);
  const FamilySpec spec = family_spec(family, sec, mirrored);
  const std::vector<Rational> ts = family_grid(spec, points);

  std::vector<std::future<SweepRow>> jobs;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      SweepRow row;
      row.family_id = spec.name;
      row.exact_parameter = ts[i];
      row.parameter = to_double(ts[i]) * pi;
      const ExactCoord x = family_coord(spec, ts[i]);
      const CoverageRegion region = coverage_region(x, x);
      row.exact_fraction = exact_fractional_volume(region);
      if (c.mc_samples > 0) {
        Rng rng(c.seed + i);
        const McEstimate mc = mc_volume(region, c.mc_samples, rng);
        row.mc_fraction = mc.fraction;
        row.mc_stderr = mc.stderr_;
      } else {
        row.mc_fraction = row.mc_stderr = std::nan("");
      }
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  for (auto &j : jobs) rows.push_back(j.get());
  const std::string text = c.format == "json" ? sweep_json(rows).dump(2) + "\n" : sweep_csv(rows);
  emit(c, out, text);
  if (!c.out.empty()) out << "wrote " << rows.size() << " rows to " << c.out << "\n";
  return kOk;
}

int cmd_qlr(const Common &c, std::ostream &out) {
  const auto tuples = enumerate_inequality_tuples();
  for (const auto &t : tuples) {
    if (quantum_lr(t.r, t.k, t.alpha, t.beta, t.delta, t.d) != 1) {
      throw Error(ErrorCode::ConstraintViolation, "tuple failed its coefficient recheck");
    }
  }
  const std::string text = format_tuples(tuples);
  if (c.out.empty()) {
    out << text;
  } else {
    emit(c, out, text);
  }
  out << "count " << tuples.size() << "\n";
  return kOk;
}

bool is_family(const std::string &name) {
  for (const auto &f : family_registry())
    if (f.name == name) return true;
  return false;
}

int cmd_synth(const Common &c, const std::string &source, const std::string &target, int budget,
              int restarts, const std::string &secondary, bool mirrored, std::ostream &out) {
  require_format(c, {"json"});
  SynthesisOptions opts;
  opts.seed = c.seed;
  opts.budget = budget;
  opts.restarts = restarts;
  opts.coord_tol = c.tol;
  const GateSource v = parse_gate(target);
  SynthesisResult res;
  json doc;
  if (is_family(source)) {
    std::optional<Rational> sec;
    if (!secondary.empty()) sec = parse_angle(secondary);
    const FamilySpec spec = family_spec(source, sec, mirrored);
    res = synthesize_with_family(spec, v.unitary, opts);
    doc["family"] = spec.name;
    doc["parameter"] = {{"radians", *res.parameter}, {"exact_pi", format_pi(*res.exact_parameter)}};
  } else {
    const GateSource u = parse_gate(source);
    res = synthesize(u.unitary, v.unitary, opts);
    doc["gate"] = u.label;
  }
  doc["target"] = v.label;
  doc["status"] = res.ok() ? "success" : "budget_exhausted";
  doc["fidelity"] = res.fidelity;
  doc["restart"] = res.restart;
  doc["evaluations"] = res.evaluations;
  doc["gate_class"] = coord_json(cartan_coordinates(res.gate, 1e-9));
  doc["target_class"] = coord_json(res.target_class);
  doc["achieved_class"] = coord_json(res.achieved_class);
  doc["phase"] = {res.phase.real(), res.phase.imag()};
  doc["locals"] = {{"l1", pair_json(res.l1)}, {"l2", pair_json(res.l2)}, {"l3", pair_json(res.l3)}};
  emit(c, out, doc.dump(2) + "\n");
  out << "fidelity " << std::setprecision(15) << res.fidelity << "\n";
  return res.ok() ? kOk : kNumerical;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Two-qubit gate classes, two-application coverage and synthesis", "weyl"};
  app.fallthrough();
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "Seed for every random choice");
  app.add_option("--mc-samples", c.mc_samples, "Monte Carlo samples (0 skips the estimate)");
  app.add_option("--tol", c.tol, "Coordinate tolerance (radians)")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "Output file (stdout when omitted)");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string gate, coord, family, secondary, source, target;
  int points = 11, budget = SynthesisOptions{}.budget, restarts = SynthesisOptions{}.restarts;
  bool mirrored = false;

  auto *analyze = app.add_subcommand("analyze", "Cartan coordinates, invariants and symmetry flags");
  analyze->add_option("gate", gate, "Gate spec");
  analyze->add_option("--coord", coord, "Class as three angles, e.g. 2pi/7,pi/4,3pi/14");

  auto *coverage = app.add_subcommand("coverage", "Region reached by two applications");
  coverage->add_option("gate", gate, "Gate spec");
  coverage->add_option("--coord", coord, "Class as three angles");

  auto *sweep = app.add_subcommand("sweep", "Covered volume fraction along a family");
  sweep->add_option("family", family, "Family id")->required();
  sweep->add_option("--points", points, "Parameter points")->check(CLI::Range(2, 1000));
  sweep->add_option("--secondary", secondary, "Secondary family parameter (angle)");
  sweep->add_flag("--mirrored", mirrored, "Use the mirrored branch");

  auto *qlr = app.add_subcommand("qlr", "Write the inequality tuple list");

  auto *synth = app.add_subcommand("synth", "Two-application circuit for a target");
  synth->add_option("source", source, "Gate spec or family id")->required();
  synth->add_option("target", target, "Target gate spec")->required();
  synth->add_option("--budget", budget, "Objective evaluations per restart")->check(CLI::Range(100, 10000000));
  synth->add_option("--restarts", restarts, "Random restarts")->check(CLI::Range(1, 1000));
  synth->add_option("--secondary", secondary, "Secondary family parameter (angle)");
  synth->add_flag("--mirrored", mirrored, "Use the mirrored family branch");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*analyze) return cmd_analyze(c, gate, coord, out);
    if (*coverage) return cmd_coverage(c, gate, coord, out);
    if (*sweep) return cmd_sweep(c, family, points, secondary, mirrored, out);
    if (*qlr) return cmd_qlr(c, out);
    if (*synth) return cmd_synth(c, source, target, budget, restarts, secondary, mirrored, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kValidation;
}

}  // namespace weyl::cli
