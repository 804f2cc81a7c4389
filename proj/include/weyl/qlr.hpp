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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weyl {

/// Weakly decreasing, non-negative parts. Trailing zeros are allowed and
/// ignored by the combinatorics; box partitions carry exactly r parts.
using Partition = std::vector<int>;

int weight(const Partition &p);
/// Drops trailing zeros.
Partition trim(const Partition &p);
/// Pads with zeros (or trims zeros) to exactly `rows` parts.
Partition pad(const Partition &p, int rows);
bool is_partition(const Partition &p);
/// k >= p_1 >= ... >= p_r >= 0 with at most r nonzero parts.
bool fits_box(const Partition &p, int r, int k);

/// All partitions in the r x k box, each padded to r parts, in decreasing
/// lexicographic order.
std::vector<Partition> box_partitions(int r, int k);

/// Littlewood-Richardson coefficient c_{alpha beta}^{delta}: the number of
/// LR tableaux of skew shape delta/alpha with content beta.
long classical_lr(const Partition &alpha, const Partition &beta, const Partition &delta);

/// Structure constants of sigma_alpha * sigma_beta in QH*(Gr(r, 4)),
/// keyed by (delta padded to r parts, d). Zero coefficients are omitted.
std::map<std::pair<Partition, int>, long> quantum_product(const Partition &alpha,
                                                          const Partition &beta, int r, int k);

/// N_{alpha beta}^{delta, d} for Gr(r, r + k) with r + k = 4.
/// Throws BoxViolation when r + k != 4 or a partition leaves the box.
long quantum_lr(int r, int k, const Partition &alpha, const Partition &beta,
                const Partition &delta, int d);

struct QlrTuple {
  int r = 0;
  int k = 0;
  int d = 0;
  Partition alpha;
  Partition beta;
  Partition delta;

  friend bool operator==(const QlrTuple &, const QlrTuple &) = default;
};

/// Every tuple with N = 1, over r = 0..4, ordered by (r, d, alpha, beta,
/// delta). The r = 0 and r = 4 boxes each contribute only the empty tuple.
std::vector<QlrTuple> enumerate_inequality_tuples();

std::uint64_t fnv1a64(std::string_view bytes);

/// Versioned text artifact: a header (version, count, checksum of the body)
/// followed by one "r k d | alpha | beta | delta" line per tuple.
std::string format_tuples(const std::vector<QlrTuple> &tuples);

/// Inverse of format_tuples. Verifies count and checksum; throws ParseError.
std::vector<QlrTuple> parse_tuples(std::string_view text);

}  // namespace weyl
