#pragma once

#include <Eigen/Dense>

#include "adradar/types.hpp"

namespace adradar {

/// Cross-correlation r[k] = sum_m x[m] * y[m - k] for k in [lag_min, lag_max].
/// No conjugation is applied; references used here are real bipolar sequences.
template <typename XScalar, typename YScalar>
auto correlate(const Eigen::Matrix<XScalar, Eigen::Dynamic, 1>& x,
               const Eigen::Matrix<YScalar, Eigen::Dynamic, 1>& y, Eigen::Index lag_min,
               Eigen::Index lag_max) {
  using Out = decltype(XScalar{} * YScalar{});
  if (lag_max < lag_min) throw std::invalid_argument("correlate: empty lag range");
  Eigen::Matrix<Out, Eigen::Dynamic, 1> r(lag_max - lag_min + 1);
  const Eigen::Index nx = x.size();
  const Eigen::Index ny = y.size();
  for (Eigen::Index k = lag_min; k <= lag_max; ++k) {
    // overlap: m in [max(0, k), min(nx, ny + k))
    const Eigen::Index lo = std::max<Eigen::Index>(0, k);
    const Eigen::Index hi = std::min(nx, ny + k);
    Out acc{};
    for (Eigen::Index m = lo; m < hi; ++m) acc += x[m] * static_cast<Out>(y[m - k]);
    r[k - lag_min] = acc;
  }
  return r;
}

/// Full linear convolution, output length x.size() + y.size() - 1.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> convolve(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(x.size() + y.size() - 1);
  for (Eigen::Index i = 0; i < x.size(); ++i) out.segment(i, y.size()) += x[i] * y;
  return out;
}

/// Convolution of a complex signal with a real FIR.
CVec convolve_real_fir(const CVec& x, const RVec& taps);

}  // namespace adradar
