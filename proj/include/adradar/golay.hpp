#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adradar/types.hpp"

namespace adradar {

/// A complementary pair of bipolar sequences: the aperiodic autocorrelations
/// of `a` and `b` sum to 2N at lag zero and cancel exactly everywhere else.
struct GolayPair {
  IVec a;
  IVec b;

  int length() const { return static_cast<int>(a.size()); }
};

/// Delay/weight parameters for the recursive pair construction. For length
/// 2^k the delays are a permutation of {1, 2, 4, ..., 2^(k-1)} and the
/// weights are +/-1.
struct GolaySeed {
  std::vector<int> delays;
  std::vector<int> weights;
};

/// Natural-order delays, all-ones weights.
GolaySeed default_golay_seed(int n);

/// Deterministically scrambled seed (delay permutation + weight signs drawn
/// from `seed`); distinct seeds give distinct but equally valid pairs.
GolaySeed make_golay_seed(int n, std::uint64_t seed);

/// Recursive construction of a length-n complementary pair.
/// Throws std::invalid_argument if n is not a power of two or the seed
/// parameters are malformed.
GolayPair generate_golay_pair(int n, const GolaySeed& seed);

/// Sum of the two aperiodic autocorrelations over lags [-(N-1), N-1],
/// computed in integer arithmetic. Entry N-1 is the zero lag.
Eigen::VectorXi autocorrelation_sum(const GolayPair& pair);

/// True iff autocorrelation_sum is exactly 2N*delta.
bool is_complementary(const GolayPair& pair);

}  // namespace adradar
