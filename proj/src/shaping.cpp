#include "adradar/shaping.hpp"

#include <cmath>

#include "adradar/dsp.hpp"

namespace adradar {

ShapingFilter design_rrc(double rolloff, int oversample, int span) {
  if (!(rolloff > 0.0 && rolloff <= 1.0)) throw std::invalid_argument("rrc: rolloff must be in (0,1]");
  if (oversample < 2) throw std::invalid_argument("rrc: oversample must be >= 2");
  if (span < 8) throw std::invalid_argument("rrc: span must be >= 8 chips");

  const int ntaps = span * oversample + 1;
  const int mid = ntaps / 2;
  RVec taps(ntaps);
  for (int i = 0; i < ntaps; ++i) {
    // t in chip periods
    const double t = static_cast<double>(i - mid) / oversample;
    double v;
    const double four_bt = 4.0 * rolloff * t;
    if (std::abs(t) < 1e-12) {
      v = 1.0 - rolloff + 4.0 * rolloff / pi;
    } else if (std::abs(std::abs(four_bt) - 1.0) < 1e-9) {
      v = rolloff / std::sqrt(2.0) *
          ((1.0 + 2.0 / pi) * std::sin(pi / (4.0 * rolloff)) +
           (1.0 - 2.0 / pi) * std::cos(pi / (4.0 * rolloff)));
    } else {
      v = (std::sin(pi * t * (1.0 - rolloff)) + four_bt * std::cos(pi * t * (1.0 + rolloff))) /
          (pi * t * (1.0 - four_bt * four_bt));
    }
    taps[i] = v;
  }
  taps /= taps.norm();
  return ShapingFilter{std::move(taps), rolloff, oversample, span};
}

CVec shape(const ChipSequence& seq, const ShapingFilter& filt) {
  if (seq.size() == 0) throw std::invalid_argument("shape: empty input");
  const int os = filt.oversample;
  CVec up = CVec::Zero(seq.size() * os);
  for (Eigen::Index i = 0; i < seq.size(); ++i) up[i * os] = seq.samples[i];
  return convolve_real_fir(up, filt.taps);
}

ChipSequence matched_filter_decimate(const CVec& rx, const ShapingFilter& filt) {
  if (rx.size() == 0) throw std::invalid_argument("matched_filter_decimate: empty input");
  CVec filtered = convolve_real_fir(rx, filt.taps);
  // Two cascaded FIRs of length L each delay the signal by L-1 samples total.
  const Eigen::Index delay = filt.taps.size() - 1;
  const Eigen::Index chips = (filtered.size() - delay + filt.oversample - 1) / filt.oversample;
  CVec out(chips);
  Eigen::Index n = 0;
  for (Eigen::Index i = delay; i < filtered.size() && n < chips; i += filt.oversample)
    out[n++] = filtered[i];
  out.conservativeResize(n);
  return ChipSequence{std::move(out)};
}

}  // namespace adradar
