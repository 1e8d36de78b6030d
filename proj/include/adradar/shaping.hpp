#pragma once

#include "adradar/preamble.hpp"
#include "adradar/types.hpp"

namespace adradar {

/// Root-raised-cosine FIR. Cascading the filter with itself yields a raised
/// cosine, which is Nyquist at chip spacing: the transmit/receive pair adds
/// no ISI at the decimated sample instants.
struct ShapingFilter {
  RVec taps;       // unit energy, odd length, symmetric
  double rolloff;  // in (0, 1]
  int oversample;  // samples per chip, >= 2
  int span;        // filter length in chips (taps = span * oversample + 1)
};

ShapingFilter design_rrc(double rolloff, int oversample, int span);

/// Upsample by filt.oversample (zero stuffing) and filter. Output length is
/// oversample * n + taps - 1.
CVec shape(const ChipSequence& seq, const ShapingFilter& filt);

/// Receive matched filter followed by chip-rate decimation. Compensates the
/// combined group delay of the tx/rx pair, so sample k corresponds to chip k
/// of the original sequence.
ChipSequence matched_filter_decimate(const CVec& rx, const ShapingFilter& filt);

}  // namespace adradar
