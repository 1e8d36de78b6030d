#pragma once

#include <vector>

#include "adradar/echo.hpp"
#include "adradar/golay.hpp"
#include "adradar/preamble.hpp"
#include "adradar/types.hpp"

namespace adradar {

/// Per-pulse radar channel estimate over the configured delay window.
/// Bin n corresponds to range n * c * T_c / 2.
struct ChannelEstimate {
  CVec h;
  int pulse_index = 0;
};

/// Recovers the chip-spaced channel from one received pulse containing a CEF
/// echo. The first stage is Golay matched filtering: each 256-chip section
/// of the CEF is correlated against the pulse at its own offset and the four
/// branches are summed, giving the u-pair and v-pair estimates whose average
/// is the matched output. Because the sections are transmitted back to back,
/// the matched output carries deterministic cross-section leakage; the final
/// estimate removes it by solving the normal equations with the precomputed
/// Gram matrix of the transmit sequence, which is exact for any chip-grid
/// delay profile inside the window.
class CefChannelEstimator {
 public:
  CefChannelEstimator(const GolayPair& pair_u, const GolayPair& pair_v, int range_bins);

  /// Matched-filter branch for one Golay section: correlation of the pulse
  /// with `sequence` at lags [offset, offset + range_bins).
  CVec matched_partial(const CVec& pulse, const IVec& sequence, int offset) const;

  /// u-pair estimate: (x (*) au[-n] + delayed x (*) bu[-n]) / 512.
  CVec estimate_u(const CVec& pulse) const;
  /// v-pair estimate from the second 512-chip block.
  CVec estimate_v(const CVec& pulse) const;
  /// Average of the two pair estimates (matched filter only).
  CVec estimate_matched(const CVec& pulse) const;

  /// Gram-corrected estimate; exact for on-grid delays, noise-optimal in the
  /// least-squares sense otherwise.
  CVec estimate(const CVec& pulse) const;

  /// All pulses of a train.
  std::vector<ChannelEstimate> estimate_train(const PulseTrain& train) const;

  int range_bins() const { return range_bins_; }
  const ChipSequence& cef() const { return cef_; }

 private:
  GolayPair pair_u_;
  GolayPair pair_v_;
  ChipSequence cef_;
  IVec guard_;
  int range_bins_;
  Eigen::LLT<RMat> gram_llt_;  // Toeplitz Gram of the CEF, factored once
};

/// Magnitude of the slow-time DFT per delay bin.
struct DelayDopplerMap {
  RMat magnitude;               // range_bins x fft_len
  double range_bin_m = 0.0;     // c * T_c / 2
  double velocity_bin_mps = 0;  // DFT bin spacing mapped through the Doppler convention
  double pri_s = 0.0;
  DopplerConvention convention = DopplerConvention::one_way;

  int delay_bins() const { return static_cast<int>(magnitude.rows()); }
  int doppler_bins() const { return static_cast<int>(magnitude.cols()); }
};

/// Unitary (1/sqrt(fft_len)) DFT across pulses for each delay bin;
/// fft_len >= P, zero padded. Requires at least two estimates.
DelayDopplerMap build_ddm(const std::vector<ChannelEstimate>& estimates, int fft_len,
                          double pri_s, DopplerConvention conv);

struct Detection {
  int delay_bin = 0;
  int doppler_bin = 0;
  double range_m = 0.0;
  double velocity_mps = 0.0;
  double magnitude = 0.0;
  double snr_est_db = 0.0;
};

struct CfarConfig {
  double pfa = 1e-3;
  int guard_cells = 2;   // per axis, each side
  int train_cells = 8;   // per axis, each side
  int max_targets = 16;
};

/// 2-D cell-averaging CFAR on the squared map. The Doppler axis wraps
/// (slow-time DFT is periodic); delay cells without a full training window
/// are not evaluated. Detections are sorted by magnitude, at most
/// max_targets returned.
std::vector<Detection> cfar_detect(const DelayDopplerMap& map, const CfarConfig& cfg);

/// Full chain: per-pulse channel estimation, slow-time DFT, CFAR.
std::vector<Detection> estimate_targets(const PulseTrain& train, const GolayPair& pair_u,
                                        const GolayPair& pair_v, int fft_len,
                                        const CfarConfig& cfar, DopplerConvention conv);

void dump_csv(const DelayDopplerMap& map, const std::string& path);

}  // namespace adradar
