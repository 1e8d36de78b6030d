#include "adradar/golay.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "adradar/dsp.hpp"

namespace adradar {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

GolaySeed default_golay_seed(int n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("golay: length must be a power of two");
  const int k = log2_exact(n);
  GolaySeed seed;
  seed.delays.resize(k);
  seed.weights.assign(k, 1);
  for (int i = 0; i < k; ++i) seed.delays[i] = 1 << i;
  return seed;
}

GolaySeed make_golay_seed(int n, std::uint64_t seed) {
  GolaySeed out = default_golay_seed(n);
  std::mt19937_64 rng(seed);
  std::shuffle(out.delays.begin(), out.delays.end(), rng);
  for (auto& w : out.weights) w = (rng() & 1) ? 1 : -1;
  return out;
}

GolayPair generate_golay_pair(int n, const GolaySeed& seed) {
  if (!is_power_of_two(n)) throw std::invalid_argument("golay: length must be a power of two");
  const int k = log2_exact(n);
  if (static_cast<int>(seed.delays.size()) != k || static_cast<int>(seed.weights.size()) != k)
    throw std::invalid_argument("golay: seed needs log2(n) delays and weights");

  // Delays must be a permutation of {1, 2, ..., 2^(k-1)}.
  std::vector<int> sorted = seed.delays;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i) {
    if (sorted[i] != (1 << i)) throw std::invalid_argument("golay: delays must permute powers of two");
    if (seed.weights[i] != 1 && seed.weights[i] != -1)
      throw std::invalid_argument("golay: weights must be +/-1");
  }

  // a' = a + w * shift(b, d);  b' = a - w * shift(b, d), on zero-padded
  // length-n buffers: the support after each step is 1 + sum of the delays
  // used so far, which reaches n only after the last step.
  IVec a = IVec::Zero(n);
  IVec b = IVec::Zero(n);
  a[0] = 1;
  b[0] = 1;
  for (int step = 0; step < k; ++step) {
    const int d = seed.delays[step];
    const int w = seed.weights[step];
    IVec na = a;
    IVec nb = a;
    na.segment(d, n - d) += w * b.segment(0, n - d);
    nb.segment(d, n - d) -= w * b.segment(0, n - d);
    a = std::move(na);
    b = std::move(nb);
  }
  return GolayPair{std::move(a), std::move(b)};
}

Eigen::VectorXi autocorrelation_sum(const GolayPair& pair) {
  const Eigen::Index n = pair.a.size();
  if (n == 0 || pair.b.size() != n)
    throw std::invalid_argument("golay: pair members must have equal nonzero length");
  IVec ra = correlate(pair.a, pair.a, -(n - 1), n - 1);
  IVec rb = correlate(pair.b, pair.b, -(n - 1), n - 1);
  return ra + rb;
}

bool is_complementary(const GolayPair& pair) {
  const Eigen::Index n = pair.a.size();
  IVec s = autocorrelation_sum(pair);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const int expected = (i == n - 1) ? static_cast<int>(2 * n) : 0;
    if (s[i] != expected) return false;
  }
  return true;
}

}  // namespace adradar
