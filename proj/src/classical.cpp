// Copyright 2026 The dimwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimwit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "dimwit/error.hpp"
#include "dimwit/quantum.hpp"

namespace dimwit {

namespace {

void require_strategy_args(int n, int d) {
  if (n < 2 || d < 1) {
    fail(ErrorCode::BadArgument, "classical strategies need N >= 2 and d >= 1, got N=" +
                                     std::to_string(n) + " d=" + std::to_string(d));
  }
}

// Witness value of the optimally decoded strategy for an encoding, computed
// without materializing the table.
double encoding_value(WitnessKind kind, const std::vector<int> &encoding, int d) {
  const std::size_t n = encoding.size();
  if (kind == WitnessKind::Guessing) {
    std::vector<bool> used(std::size_t(d) + 1, false);
    int distinct = 0;
    for (int s : encoding) {
      if (!used[std::size_t(s)]) {
        used[std::size_t(s)] = true;
        ++distinct;
      }
    }
    return double(distinct) / double(n);
  }
  // Each distinguished pair contributes exactly 1 to both W_N and V_N.
  int distinct_pairs = 0;
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t x_prime = 0; x_prime < x; ++x_prime) {
      if (encoding[x] != encoding[x_prime]) ++distinct_pairs;
    }
  }
  return double(distinct_pairs);
}

}  // namespace

ProbabilityTable strategy_table(const DeterministicStrategy &s, WitnessKind kind) {
  require_strategy_args(s.n, s.d);
  const std::size_t n = std::size_t(s.n);
  if (s.encoding.size() != n) {
    fail(ErrorCode::BadArgument, "encoding has " + std::to_string(s.encoding.size()) +
                                     " symbols, expected " + std::to_string(n));
  }
  for (int symbol : s.encoding) {
    if (symbol < 1 || symbol > s.d) {
      fail(ErrorCode::BadArgument, "encoding symbol " + std::to_string(symbol) + " outside 1.." +
                                       std::to_string(s.d));
    }
  }
  const TableShape shape = shape_for(kind, n);
  if (s.decoding.size() != shape.measurements) {
    fail(ErrorCode::IncompleteDecoding, "decoding covers " + std::to_string(s.decoding.size()) +
                                            " measurements, expected " +
                                            std::to_string(shape.measurements));
  }
  for (std::size_t y = 0; y < shape.measurements; ++y) {
    if (s.decoding[y].size() != std::size_t(s.d)) {
      fail(ErrorCode::IncompleteDecoding,
           "decoding for measurement " + std::to_string(y + 1) + " does not cover all symbols");
    }
    for (int b : s.decoding[y]) {
      if (b < 1 || std::size_t(b) > shape.outcomes) {
        fail(ErrorCode::IncompleteDecoding, "decoding outcome " + std::to_string(b) + " out of range");
      }
    }
  }

  std::vector<double> p(n * shape.measurements * shape.outcomes, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < shape.measurements; ++y) {
      const int b = s.decoding[y][std::size_t(s.encoding[x] - 1)];
      p[(x * shape.measurements + y) * shape.outcomes + std::size_t(b - 1)] = 1.0;
    }
  }
  return ProbabilityTable(n, shape.measurements, shape.outcomes, std::move(p));
}

DeterministicStrategy optimal_decoding(WitnessKind kind, int n, int d, std::vector<int> encoding) {
  require_strategy_args(n, d);
  DeterministicStrategy s{n, d, std::move(encoding), {}};
  if (kind == WitnessKind::Guessing) {
    // Every preparation with a given symbol is equally likely to be the
    // sender's; guess the first one carrying that symbol.
    std::vector<int> guess(std::size_t(d), 1);
    std::vector<bool> seen(std::size_t(d), false);
    for (int x = 1; x <= n; ++x) {
      const std::size_t symbol = std::size_t(s.encoding[std::size_t(x - 1)] - 1);
      if (!seen[symbol]) {
        seen[symbol] = true;
        guess[symbol] = x;
      }
    }
    s.decoding.push_back(std::move(guess));
    return s;
  }
  // Measurement (x, x') fires b = 1 exactly on x's message; when x and x'
  // share a message the pair cannot be separated and b = 2 is output.
  for (std::size_t i = 0; i < pair_count(std::size_t(n)); ++i) {
    const auto [x, x_prime] = pair_at(i);
    const int mx = s.encoding[x - 1];
    const int mxp = s.encoding[x_prime - 1];
    std::vector<int> rule(std::size_t(d), 2);
    if (mx != mxp) rule[std::size_t(mx - 1)] = 1;
    s.decoding.push_back(std::move(rule));
  }
  return s;
}

ClassicalOptimum enumerate_max(WitnessKind kind, int n, int d) {
  require_strategy_args(n, d);
  const double count = canonical_encoding_count(n, d);
  if (count > double(kEnumerationLimit)) {
    char message[160];
    std::snprintf(message, sizeof message,
                  "N=%d d=%d needs %.4g canonical encodings, above the enumeration limit of %llu",
                  n, d, count, static_cast<unsigned long long>(kEnumerationLimit));
    fail(ErrorCode::TooLarge, message);
  }
  const std::size_t len = std::size_t(n);

  // Restricted growth strings: encoding[0] = 1 and encoding[i] <= 1 + max(prefix),
  // visited in lexicographic order.
  std::vector<int> encoding(len, 1);
  std::vector<int> prefix_max(len, 1);
  std::vector<int> best_encoding = encoding;
  double best = encoding_value(kind, encoding, d);

  while (true) {
    std::size_t i = len - 1;
    while (i > 0 && (encoding[i] == d || encoding[i] > prefix_max[i - 1])) --i;
    if (i == 0) break;
    ++encoding[i];
    prefix_max[i] = std::max(prefix_max[i - 1], encoding[i]);
    for (std::size_t j = i + 1; j < len; ++j) {
      encoding[j] = 1;
      prefix_max[j] = prefix_max[i];
    }
    const double v = encoding_value(kind, encoding, d);
    if (v > best) {
      best = v;
      best_encoding = encoding;
    }
  }
  return {best, optimal_decoding(kind, n, d, std::move(best_encoding))};
}

double canonical_encoding_count(int n, int d) {
  require_strategy_args(n, d);
  const std::size_t blocks = std::size_t(std::min(n, d));
  // stirling[k] = S(i, k) after processing i items.
  std::vector<double> stirling(blocks + 1, 0.0);
  stirling[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    for (std::size_t k = std::min<std::size_t>(std::size_t(i), blocks); k >= 1; --k) {
      stirling[k] = double(k) * stirling[k] + stirling[k - 1];
    }
    stirling[0] = 0.0;
  }
  double total = 0.0;
  for (std::size_t k = 1; k <= blocks; ++k) total += stirling[k];
  return total;
}

double balanced_partition_value(int n, int d) {
  require_strategy_args(n, d);
  const double nn = double(n);
  const double dd = double(d);
  const double q = double(n / d);
  return 0.5 * nn * (nn - 1.0) - q * (nn - 0.5 * dd * (q + 1.0));
}

}  // namespace dimwit
