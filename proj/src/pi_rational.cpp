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

#include "weyl/pi_rational.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "weyl/error.hpp"

namespace weyl {

Rational rationalize(double x, double tol) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::NumericOverflow, "cannot rationalize a non-finite value");
  }
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    const mpz_class ai(a);
    mpz_class h_next = ai * h_prev + h;
    mpz_class k_next = ai * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    Rational q(h_prev, k_prev);
    q.canonicalize();
    if (std::abs(q.get_d() - x) <= tol) return q;
    const double frac = rest - a;
    if (frac <= 0.0) return q;
    rest = 1.0 / frac;
  }
  Rational q(h_prev, k_prev);
  q.canonicalize();
  return q;
}

double to_double(const Rational &q) { return q.get_d(); }

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Parses [-][N][*]pi[/D] or an integer 0. Returns false if not that shape.
bool parse_pi_form(const std::string &s, Rational &out) {
  std::string_view v = s;
  bool neg = false;
  if (!v.empty() && (v.front() == '-' || v.front() == '+')) {
    neg = v.front() == '-';
    v.remove_prefix(1);
  }
  if (v == "0") {
    out = 0;
    return true;
  }
  const auto pos = v.find("pi");
  if (pos == std::string_view::npos) return false;
  std::string_view num = v.substr(0, pos);
  std::string_view tail = v.substr(pos + 2);
  if (!num.empty() && num.back() == '*') num.remove_suffix(1);
  mpz_class n = 1, d = 1;
  if (!num.empty()) {
    if (!all_digits(num)) return false;
    n = mpz_class(std::string(num));
  }
  if (!tail.empty()) {
    if (tail.front() != '/') return false;
    tail.remove_prefix(1);
    if (!all_digits(tail)) return false;
    d = mpz_class(std::string(tail));
    if (d == 0) return false;
  }
  out = Rational(neg ? mpz_class(-n) : n, d);
  out.canonicalize();
  return true;
}

}  // namespace

bool is_exact_angle_literal(std::string_view text) {
  Rational q;
  return parse_pi_form(strip_spaces(text), q);
}

Rational parse_angle(std::string_view text) {
  const std::string s = strip_spaces(text);
  Rational q;
  if (parse_pi_form(s, q)) return q;
  std::size_t used = 0;
  double radians = 0.0;
  try {
    radians = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(radians)) {
    throw Error(ErrorCode::ParseError, "bad angle literal '" + std::string(text) + "'");
  }
  return rationalize(radians / std::numbers::pi);
}

std::string format_pi(const Rational &q) {
  if (q == 0) return "0";
  const mpz_class num = q.get_num();
  const mpz_class den = q.get_den();
  std::string out;
  if (num < 0) out += "-";
  const mpz_class mag = abs(num);
  if (mag != 1) out += mag.get_str();
  out += "pi";
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace weyl
