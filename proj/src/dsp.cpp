#include "adradar/dsp.hpp"

namespace adradar {

CVec convolve_real_fir(const CVec& x, const RVec& taps) {
  CVec out = CVec::Zero(x.size() + taps.size() - 1);
  for (Eigen::Index i = 0; i < taps.size(); ++i) {
    if (taps[i] != 0.0) out.segment(i, x.size()) += taps[i] * x;
  }
  return out;
}

}  // namespace adradar
