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

#ifndef DIMWIT_CLASSICAL_HPP
#define DIMWIT_CLASSICAL_HPP

#include <cstdint>
#include <vector>

#include "dimwit/witnesses.hpp"

namespace dimwit {

/// A d-valued message per preparation plus an outcome rule per measurement.
/// Shared randomness is not modelled: by convexity the witnesses are
/// maximized on deterministic strategies.
struct DeterministicStrategy {
  int n = 0;
  int d = 0;
  std::vector<int> encoding;               // encoding[x-1] in 1..d
  std::vector<std::vector<int>> decoding;  // decoding[y-1][symbol-1] = outcome b (1-based)
};

/// Deterministic 0/1 table P(b|x,y) = [decoding(y, encoding(x)) = b].
ProbabilityTable strategy_table(const DeterministicStrategy &s, WitnessKind kind);

/// Best decoding for a fixed encoding, chosen in closed form per measurement.
DeterministicStrategy optimal_decoding(WitnessKind kind, int n, int d, std::vector<int> encoding);

struct ClassicalOptimum {
  double value;
  DeterministicStrategy strategy;
};

/// Largest number of canonical encodings enumerate_max will visit.
inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// Number of canonical encodings of N preparations into at most d messages,
/// i.e. sum_{k <= d} S(N, k) with S the Stirling numbers of the second kind.
double canonical_encoding_count(int n, int d);

/// Exact maximum over deterministic strategies. Encodings are canonical
/// (first occurrences of symbols in increasing order); ties resolve to the
/// lexicographically smallest encoding. Throws Error(TooLarge) when
/// canonical_encoding_count(N, d) exceeds kEnumerationLimit.
ClassicalOptimum enumerate_max(WitnessKind kind, int n, int d);

/// Closed-form number of distinguished pairs under the most balanced
/// partition of N preparations into d messages.
double balanced_partition_value(int n, int d);

}  // namespace dimwit

#endif  // DIMWIT_CLASSICAL_HPP
