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

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "weyl/error.hpp"
#include "weyl/numerics.hpp"
#include "weyl/qlr.hpp"

using namespace weyl;

namespace {

using Poly = std::map<std::pair<Partition, int>, long>;

Poly multiply(const Poly &a, const Poly &b, int r, int k) {
  Poly out;
  for (const auto &[ka, ca] : a)
    for (const auto &[kb, cb] : b)
      for (const auto &[kc, cc] : quantum_product(ka.first, kb.first, r, k)) {
        out[{kc.first, kc.second + ka.second + kb.second}] += ca * cb * cc;
      }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly single(const Partition &p, int r) { return {{{pad(p, r), 0}, 1}}; }

Partition conjugate(const Partition &p, int len) {
  Partition out(static_cast<std::size_t>(len), 0);
  for (int v : p)
    for (int j = 0; j < v; ++j) ++out[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

TEST_CASE("partitions in a box", "[qlr]") {
  CHECK(box_partitions(2, 2).size() == 6);
  CHECK(box_partitions(1, 3).size() == 4);
  CHECK(box_partitions(0, 4).size() == 1);
  CHECK(box_partitions(2, 2).front() == Partition{2, 2});
  CHECK(fits_box({2, 1}, 2, 2));
  CHECK_FALSE(fits_box({3}, 2, 2));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK(trim({2, 0, 0}) == Partition{2});
  CHECK(weight({3, 1, 1}) == 5);
}

TEST_CASE("classical Littlewood-Richardson", "[qlr]") {
  CHECK(classical_lr({}, {2, 1}, {2, 1}) == 1);
  CHECK(classical_lr({1}, {1}, {2}) == 1);
  CHECK(classical_lr({1}, {1}, {1, 1}) == 1);
  CHECK(classical_lr({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(classical_lr({2, 1}, {2, 1}, {4, 2}) == 1);
  CHECK(classical_lr({2, 1}, {2, 1}, {2, 2, 2}) == 1);
  CHECK(classical_lr({1}, {1}, {3}) == 0);
}

TEST_CASE("Pieri rule oracle", "[qlr]") {
  // Multiplying by a single row of length m adds a horizontal strip.
  const auto horizontal_strip = [](const Partition &lam, const Partition &mu) {
    const std::size_t n = std::max(lam.size(), mu.size()) + 1;
    Partition l = lam, m = mu;
    l.resize(n, 0);
    m.resize(n, 0);
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (m[i] < l[i]) return false;
      if (i + 1 < l.size() && l[i] < m[i + 1]) return false;
    }
    return true;
  };
  for (int r = 1; r <= 4; ++r)
    for (const auto &lam : box_partitions(r, 3))
      for (int m = 0; m <= 3; ++m)
        for (const auto &mu : box_partitions(r, 3 + m)) {
          if (weight(mu) != weight(lam) + m) continue;
          const long expect = horizontal_strip(trim(lam), trim(mu)) ? 1 : 0;
          const Partition row = m == 0 ? Partition{} : Partition{m};
          CAPTURE(lam, mu, m);
          CHECK(classical_lr(lam, row, mu) == expect);
        }
}

TEST_CASE("classical coefficients are symmetric under conjugation", "[qlr]") {
  for (const auto &a : box_partitions(3, 3))
    for (const auto &b : box_partitions(3, 3))
      for (const auto &c : box_partitions(3, 3)) {
        if (weight(c) != weight(a) + weight(b)) continue;
        CHECK(classical_lr(a, b, c) == classical_lr(conjugate(a, 3), conjugate(b, 3), conjugate(c, 3)));
        CHECK(classical_lr(a, b, c) == classical_lr(b, a, c));
      }
}

TEST_CASE("projective space quantum ring", "[qlr]") {
  // Gr(1,4): sigma_a sigma_b = q^{floor((a+b)/4)} sigma_{(a+b) mod 4}.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const int s = a + b;
      const Partition want = s % 4 == 0 ? Partition{0} : Partition{s % 4};
      const auto p = quantum_product({a}, {b}, 1, 3);
      REQUIRE(p.size() == 1);
      CHECK(p.begin()->first.first == want);
      CHECK(p.begin()->first.second == s / 4);
      CHECK(p.begin()->second == 1);
      // Dual picture in Gr(3,4) with column partitions.
      const auto col = [](int n) { return pad(Partition(static_cast<std::size_t>(n), 1), 3); };
      CHECK(quantum_lr(3, 1, col(a), col(b), col(s % 4), s / 4) == 1);
    }
}

TEST_CASE("Gr(2,4) quantum values", "[qlr]") {
  const int r = 2, k = 2;
  // Quantum Pieri for sigma_1.
  CHECK(quantum_lr(r, k, {1}, {2, 1}, {2, 2}, 0) == 1);
  CHECK(quantum_lr(r, k, {1}, {2, 1}, {}, 1) == 1);
  CHECK(quantum_lr(r, k, {1}, {2, 2}, {1}, 1) == 1);
  CHECK(quantum_lr(r, k, {1}, {2}, {2, 1}, 0) == 1);
  CHECK(quantum_lr(r, k, {1}, {2}, {}, 1) == 0);
  // sigma_1^4 = 2 sigma_22 + 2 q.
  Poly s1 = single({1}, r);
  Poly p = s1;
  for (int i = 0; i < 3; ++i) p = multiply(p, s1, r, k);
  const Poly want = {{{Partition{2, 2}, 0}, 2}, {{Partition{0, 0}, 1}, 2}};
  CHECK(p == want);
  // Degree mismatch and box violations.
  CHECK(quantum_lr(r, k, {1}, {1}, {1}, 0) == 0);
  CHECK(quantum_lr(r, k, {}, {}, {}, 0) == 1);
  try {
    quantum_lr(r, k, {3}, {}, {3}, 0);
    FAIL("expected BoxViolation");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BoxViolation);
  }
}

TEST_CASE("quantum ring axioms", "[qlr]") {
  Rng rng(12);
  for (int r = 1; r <= 3; ++r) {
    const int k = 4 - r;
    const auto box = box_partitions(r, k);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (const auto &a : box)
      for (const auto &b : box) {
        const auto ab = quantum_product(a, b, r, k);
        CHECK(ab == quantum_product(b, a, r, k));
        for (const auto &[key, c] : ab) {
          CHECK(c > 0);
          if (key.second == 0) CHECK(c == classical_lr(a, b, key.first));
        }
        // d = 0 coefficients equal classical ones restricted to the box.
        for (const auto &dl : box) {
          if (weight(dl) != weight(a) + weight(b)) continue;
          CHECK(quantum_lr(r, k, a, b, dl, 0) == classical_lr(a, b, dl));
        }
        // Conjugation swaps r and k.
        for (const auto &[key, c] : ab) {
          CHECK(quantum_lr(k, r, conjugate(a, k), conjugate(b, k), conjugate(key.first, k), key.second) == c);
        }
      }
    for (int t = 0; t < 50; ++t) {
      const Poly a = single(box[pick(rng)], r), b = single(box[pick(rng)], r), c = single(box[pick(rng)], r);
      CHECK(multiply(multiply(a, b, r, k), c, r, k) == multiply(a, multiply(b, c, r, k), r, k));
    }
  }
}

TEST_CASE("inequality tuples", "[qlr]") {
  const auto tuples = enumerate_inequality_tuples();
  CHECK(tuples.size() == 74);
  std::map<int, int> per_r;
  for (const auto &t : tuples) {
    ++per_r[t.r];
    CHECK(t.k == 4 - t.r);
    CHECK(quantum_lr(t.r, t.k, t.alpha, t.beta, t.delta, t.d) == 1);
  }
  // Non-degenerate Grassmannians give 16 + 40 + 16; the two degenerate ones
  // each add only the empty tuple.
  CHECK(per_r[1] == 16);
  CHECK(per_r[2] == 40);
  CHECK(per_r[3] == 16);
  CHECK(per_r[0] == 1);
  CHECK(per_r[4] == 1);
  const QlrTuple trivial{1, 3, 0, {0}, {0}, {0}};
  CHECK(std::find(tuples.begin(), tuples.end(), trivial) != tuples.end());
  CHECK(std::is_sorted(tuples.begin(), tuples.end(), [](const QlrTuple &x, const QlrTuple &y) {
    return std::tie(x.r, x.d, x.alpha, x.beta, x.delta) < std::tie(y.r, y.d, y.alpha, y.beta, y.delta);
  }));
}

TEST_CASE("tuple artifact", "[qlr]") {
  const auto tuples = enumerate_inequality_tuples();
  const std::string text = format_tuples(tuples);
  CHECK(text == format_tuples(enumerate_inequality_tuples()));
  CHECK(parse_tuples(text) == tuples);
  CHECK(text.rfind("# weyl-qlr-tuples v1\n", 0) == 0);

  std::ifstream in(std::string(WEYL_SOURCE_DIR) + "/data/qlr_tuples.txt", std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text);

  // A flipped byte in the body trips the checksum.
  std::string bad = text;
  bad[bad.size() - 3] = bad[bad.size() - 3] == '1' ? '2' : '1';
  try {
    parse_tuples(bad);
    FAIL("expected ParseError");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
