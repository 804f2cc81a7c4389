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

#include "weyl/qlr.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "weyl/error.hpp"

namespace weyl {

namespace {

constexpr int kN = 4;  // r + k
constexpr const char *kArtifactVersion = "weyl-qlr-tuples v1";

}  // namespace

int weight(const Partition &p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition trim(const Partition &p) {
  Partition out = p;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Partition pad(const Partition &p, int rows) {
  Partition out = trim(p);
  out.resize(static_cast<std::size_t>(std::max(rows, static_cast<int>(out.size()))), 0);
  return out;
}

bool is_partition(const Partition &p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool fits_box(const Partition &p, int r, int k) {
  if (!is_partition(p)) return false;
  const Partition t = trim(p);
  if (static_cast<int>(t.size()) > r) return false;
  return t.empty() || t.front() <= k;
}

std::vector<Partition> box_partitions(int r, int k) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int cap) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(k);
  return out;
}

long classical_lr(const Partition &alpha_in, const Partition &beta_in,
                  const Partition &delta_in) {
  const Partition outer = trim(delta_in);
  Partition inner = trim(alpha_in);
  const Partition content = trim(beta_in);
  if (inner.size() > outer.size()) return 0;
  inner.resize(outer.size(), 0);
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (inner[i] > outer[i]) return 0;
  if (weight(outer) - weight(inner) != weight(content)) return 0;

  // Reading order: rows top to bottom, each right to left. A filling is
  // an LR tableau when rows weakly increase, columns strictly increase and
  // the reading word is a lattice word.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(outer.size()); ++i)
    for (int j = outer[i] - 1; j >= inner[i]; --j) cells.emplace_back(i, j);

  const int rows = static_cast<int>(outer.size());
  const int cols = outer.empty() ? 0 : outer.front();
  std::vector<int> tab(static_cast<std::size_t>(rows * cols), -1);
  auto at = [&](int i, int j) -> int & { return tab[static_cast<std::size_t>(i * cols + j)]; };
  const int letters = static_cast<int>(content.size());
  std::vector<int> used(static_cast<std::size_t>(letters), 0);

  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[idx];
    for (int v = 0; v < letters; ++v) {
      if (used[v] >= content[v]) continue;
      if (v > 0 && used[v] + 1 > used[v - 1]) continue;
      if (j + 1 < outer[i] && at(i, j + 1) >= 0 && at(i, j + 1) < v) continue;
      if (i > 0 && j < outer[i - 1] && at(i - 1, j) >= 0 && at(i - 1, j) >= v) continue;
      at(i, j) = v;
      ++used[v];
      rec(idx + 1);
      --used[v];
      at(i, j) = -1;
    }
  };
  rec(0);
  return count;
}

namespace {

// Partitions of n with at most `rows` parts.
void partitions_of(int n, int cap, int rows, Partition &cur, std::vector<Partition> &out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (rows == 0) return;
  for (int p = std::min(n, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, rows - 1, cur, out);
    cur.pop_back();
  }
}

struct RimHookReduction {
  Partition lambda;
  int d = 0;
  int sign = 1;
};

// Removes rim hooks of size n = 4 from nu (at most r rows) through its beta
// numbers beta_i = nu_i + r - 1 - i: the hooks come off as the beta numbers
// drop to their residues mod n. The heights add up to the number of
// inversions in the residues, and each hook carries an extra (r - 1).
bool reduce_rim_hooks(const Partition &nu_in, int r, RimHookReduction &out) {
  const Partition nu = pad(nu_in, r);
  std::vector<int> res(static_cast<std::size_t>(r));
  int d = 0;
  for (int i = 0; i < r; ++i) {
    const int b = nu[i] + r - 1 - i;
    res[i] = b % kN;
    d += b / kN;
  }
  std::vector<int> sorted = res;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  int inversions = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (res[i] < res[j]) ++inversions;
  out.lambda.assign(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) out.lambda[i] = sorted[i] - (r - 1 - i);
  out.d = d;
  out.sign = ((inversions + d * (r - 1)) % 2 == 0) ? 1 : -1;
  return true;
}

void require_box(int r, int k, const Partition &p, const char *what) {
  if (r < 0 || k < 0 || r + k != kN) {
    throw Error(ErrorCode::BoxViolation, "Grassmannian must have r + k = 4");
  }
  if (!fits_box(p, r, k)) {
    throw Error(ErrorCode::BoxViolation, std::string(what) + " does not fit the r x k box");
  }
}

}  // namespace

std::map<std::pair<Partition, int>, long> quantum_product(const Partition &alpha,
                                                          const Partition &beta, int r, int k) {
  require_box(r, k, alpha, "alpha");
  require_box(r, k, beta, "beta");
  std::map<std::pair<Partition, int>, long> out;
  if (r == 0) {
    out[{Partition{}, 0}] = 1;
    return out;
  }
  std::vector<Partition> nus;
  Partition cur;
  const int n = weight(alpha) + weight(beta);
  partitions_of(n, n, r, cur, nus);
  for (const auto &nu : nus) {
    const long c = classical_lr(alpha, beta, nu);
    if (c == 0) continue;
    RimHookReduction red;
    if (!reduce_rim_hooks(nu, r, red)) continue;
    out[{red.lambda, red.d}] += red.sign * c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

long quantum_lr(int r, int k, const Partition &alpha, const Partition &beta,
                const Partition &delta, int d) {
  require_box(r, k, delta, "delta");
  if (d < 0) return 0;
  if (weight(alpha) + weight(beta) != weight(delta) + kN * d) {
    require_box(r, k, alpha, "alpha");
    require_box(r, k, beta, "beta");
    return 0;
  }
  const auto prod = quantum_product(alpha, beta, r, k);
  const auto it = prod.find({pad(delta, r), d});
  return it == prod.end() ? 0 : it->second;
}

std::vector<QlrTuple> enumerate_inequality_tuples() {
  std::vector<QlrTuple> out;
  for (int r = 0; r <= kN; ++r) {
    const int k = kN - r;
    const auto box = box_partitions(r, k);
    for (const auto &a : box) {
      for (const auto &b : box) {
        for (const auto &[key, coeff] : quantum_product(a, b, r, k)) {
          if (coeff < 0) {
            throw Error(ErrorCode::ConstraintViolation,
                        "negative quantum Littlewood-Richardson coefficient");
          }
          if (coeff == 1) out.push_back({r, k, key.second, a, b, key.first});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const QlrTuple &x, const QlrTuple &y) {
    return std::tie(x.r, x.d, x.alpha, x.beta, x.delta) <
           std::tie(y.r, y.d, y.alpha, y.beta, y.delta);
  });
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string format_partition(const Partition &p) {
  if (p.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(const std::string &field) {
  std::istringstream in(field);
  std::string tok;
  Partition p;
  while (in >> tok) {
    if (tok == "-") continue;
    p.push_back(std::stoi(tok));
  }
  return p;
}

std::string format_body(const std::vector<QlrTuple> &tuples) {
  std::string body;
  for (const auto &t : tuples) {
    body += std::to_string(t.r) + " " + std::to_string(t.k) + " " + std::to_string(t.d) +
            " | " + format_partition(t.alpha) + " | " + format_partition(t.beta) + " | " +
            format_partition(t.delta) + "\n";
  }
  return body;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string format_tuples(const std::vector<QlrTuple> &tuples) {
  const std::string body = format_body(tuples);
  std::string out;
  out += std::string("# ") + kArtifactVersion + "\n";
  out += "# columns: r k d | alpha | beta | delta\n";
  out += "# count " + std::to_string(tuples.size()) + "\n";
  out += "# fnv1a64 " + hex64(fnv1a64(body)) + "\n";
  return out + body;
}

std::vector<QlrTuple> parse_tuples(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t count = 0;
  std::string checksum;
  bool saw_version = false;
  std::vector<QlrTuple> out;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (line[0] == '#') {
        if (line == std::string("# ") + kArtifactVersion) saw_version = true;
        if (line.rfind("# count ", 0) == 0) count = std::stoul(line.substr(8));
        if (line.rfind("# fnv1a64 ", 0) == 0) checksum = line.substr(10);
        continue;
      }
      std::vector<std::string> fields;
      std::size_t start = 0;
      for (;;) {
        const auto bar = line.find('|', start);
        fields.push_back(line.substr(start, bar == std::string::npos ? bar : bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (fields.size() != 4) throw Error(ErrorCode::ParseError, "bad tuple line: " + line);
      std::istringstream head(fields[0]);
      QlrTuple t;
      if (!(head >> t.r >> t.k >> t.d)) throw Error(ErrorCode::ParseError, "bad header fields");
      t.alpha = parse_partition(fields[1]);
      t.beta = parse_partition(fields[2]);
      t.delta = parse_partition(fields[3]);
      out.push_back(std::move(t));
    }
  } catch (const std::invalid_argument &) {
    throw Error(ErrorCode::ParseError, "non-numeric field in tuple artifact");
  } catch (const std::out_of_range &) {
    throw Error(ErrorCode::ParseError, "numeric field out of range in tuple artifact");
  }
  if (!saw_version) throw Error(ErrorCode::ParseError, "missing or unknown artifact version");
  if (count != out.size()) throw Error(ErrorCode::ParseError, "tuple count mismatch");
  if (checksum != hex64(fnv1a64(format_body(out)))) {
    throw Error(ErrorCode::ParseError, "tuple artifact checksum mismatch");
  }
  return out;
}

}  // namespace weyl
