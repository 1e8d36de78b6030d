#include "adradar/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "adradar/dsp.hpp"

namespace adradar {

namespace {

RVec cef_autocorrelation(const CVec& cef, int lags) {
  RVec r(lags);
  for (int k = 0; k < lags; ++k) {
    double acc = 0.0;
    for (Eigen::Index m = k; m < cef.size(); ++m) acc += cef[m].real() * cef[m - k].real();
    r[k] = acc;
  }
  return r;
}

}  // namespace

CefChannelEstimator::CefChannelEstimator(const GolayPair& pair_u, const GolayPair& pair_v,
                                         int range_bins)
    : pair_u_(pair_u), pair_v_(pair_v), cef_(build_cef(pair_u, pair_v)), range_bins_(range_bins) {
  if (range_bins < 1) throw std::invalid_argument("estimator: range_bins must be >= 1");
  guard_.resize(CefLayout::guard_len);
  for (int i = 0; i < CefLayout::guard_len; ++i)
    guard_[i] = static_cast<int>(cef_.samples[CefLayout::guard_offset + i].real());
  // Normal-equation matrix: symmetric Toeplitz in the CEF autocorrelation.
  RVec r = cef_autocorrelation(cef_.samples, range_bins);
  RMat gram(range_bins, range_bins);
  for (int i = 0; i < range_bins; ++i)
    for (int j = 0; j < range_bins; ++j) gram(i, j) = r[std::abs(i - j)];
  gram_llt_.compute(gram);
  if (gram_llt_.info() != Eigen::Success)
    throw std::runtime_error("estimator: Gram factorization failed");
}

CVec CefChannelEstimator::matched_partial(const CVec& pulse, const IVec& sequence,
                                          int offset) const {
  if (pulse.size() < cef_.size()) throw std::invalid_argument("estimator: pulse shorter than CEF");
  CVec out = CVec::Zero(range_bins_);
  const Eigen::Index len = sequence.size();
  for (int n = 0; n < range_bins_; ++n) {
    const Eigen::Index base = n + offset;
    if (base < 0 || base + len > pulse.size()) continue;
    Complex acc{};
    for (Eigen::Index m = 0; m < len; ++m)
      acc += pulse[base + m] * static_cast<double>(sequence[m]);
    out[n] = acc;
  }
  return out;
}

CVec CefChannelEstimator::estimate_u(const CVec& pulse) const {
  CVec ha = matched_partial(pulse, pair_u_.a, CefLayout::au_offset);
  CVec hb = matched_partial(pulse, pair_u_.b, CefLayout::bu_offset);
  return (ha + hb) / 512.0;
}

CVec CefChannelEstimator::estimate_v(const CVec& pulse) const {
  CVec ha = matched_partial(pulse, pair_v_.a, CefLayout::av_offset);
  CVec hb = matched_partial(pulse, pair_v_.b, CefLayout::bv_offset);
  return (ha + hb) / 512.0;
}

CVec CefChannelEstimator::estimate_matched(const CVec& pulse) const {
  return 0.5 * (estimate_u(pulse) + estimate_v(pulse));
}

CVec CefChannelEstimator::estimate(const CVec& pulse) const {
  // The Gram model assumes every lag sees a fully contained CEF copy.
  if (pulse.size() < range_bins_ + cef_.size())
    throw std::invalid_argument("estimator: pulse window shorter than range_bins + CEF");
  // Correlation with the full CEF at lags [0, range_bins) = the four Golay
  // branches plus the guard branch; then undo the known self-leakage.
  CVec rhs = 512.0 * (estimate_u(pulse) + estimate_v(pulse));
  rhs += matched_partial(pulse, guard_, CefLayout::guard_offset);

  CVec h(range_bins_);
  h.real() = gram_llt_.solve(rhs.real().eval());
  h.imag() = gram_llt_.solve(rhs.imag().eval());
  return h;
}

std::vector<ChannelEstimate> CefChannelEstimator::estimate_train(const PulseTrain& train) const {
  std::vector<ChannelEstimate> out;
  out.reserve(train.pulses.rows());
  for (Eigen::Index p = 0; p < train.pulses.rows(); ++p) {
    CVec pulse = train.pulses.row(p).transpose();
    out.push_back(ChannelEstimate{estimate(pulse), static_cast<int>(p)});
  }
  return out;
}

DelayDopplerMap build_ddm(const std::vector<ChannelEstimate>& estimates, int fft_len,
                          double pri_s, DopplerConvention conv) {
  if (estimates.size() < 2) throw std::invalid_argument("build_ddm: need at least 2 pulses");
  const int pulses = static_cast<int>(estimates.size());
  if (fft_len < pulses) throw std::invalid_argument("build_ddm: fft_len must be >= pulse count");
  const Eigen::Index bins = estimates.front().h.size();
  for (const auto& e : estimates)
    if (e.h.size() != bins) throw std::invalid_argument("build_ddm: inconsistent estimate lengths");

  CMat slow(pulses, bins);
  for (int p = 0; p < pulses; ++p) slow.row(p) = estimates[p].h.transpose();

  // Unitary DFT across the (zero-padded) slow-time axis. The kernel sign is
  // chosen so that the echo phase exp(-j 2 pi f_D p T_pr) of a positive
  // velocity concentrates at a positive Doppler bin.
  CMat dft(fft_len, pulses);
  const double scale = 1.0 / std::sqrt(static_cast<double>(fft_len));
  for (int k = 0; k < fft_len; ++k)
    for (int n = 0; n < pulses; ++n)
      dft(k, n) = scale * std::polar(1.0, 2.0 * pi * k * n / static_cast<double>(fft_len));

  CMat spec = dft * slow;  // fft_len x bins

  DelayDopplerMap map;
  map.magnitude = spec.cwiseAbs().transpose();  // bins x fft_len
  map.range_bin_m = bin_to_range_m(1);
  const double doppler_bin_hz = 1.0 / (static_cast<double>(fft_len) * pri_s);
  map.velocity_bin_mps = velocity_from_doppler_mps(doppler_bin_hz, conv);
  map.pri_s = pri_s;
  map.convention = conv;
  return map;
}

namespace {

double detection_velocity(const DelayDopplerMap& map, int doppler_bin) {
  const int fft_len = map.doppler_bins();
  if (map.convention == DopplerConvention::one_way) {
    // Axis spans [0, nu_u): bin k maps straight through.
    return doppler_bin * map.velocity_bin_mps;
  }
  // Centered axis: bins past the midpoint are negative velocities.
  const int k = (doppler_bin <= fft_len / 2) ? doppler_bin : doppler_bin - fft_len;
  return k * map.velocity_bin_mps;
}

}  // namespace

std::vector<Detection> cfar_detect(const DelayDopplerMap& map, const CfarConfig& cfg) {
  if (!(cfg.pfa > 0.0 && cfg.pfa < 1.0)) throw std::invalid_argument("cfar: pfa must be in (0,1)");
  const int rows = map.delay_bins();
  const int cols = map.doppler_bins();
  const int g = cfg.guard_cells;
  const int t = cfg.train_cells;
  const int w = g + t;
  if (rows < 2 * w + 1 || cols < 1)
    throw std::invalid_argument("cfar: map too small for the guard/train window");

  const RMat power = map.magnitude.array().square();

  // Training-cell count of the full window.
  const int n_train = (2 * w + 1) * (2 * w + 1) - (2 * g + 1) * (2 * g + 1);
  const double alpha =
      n_train * (std::pow(cfg.pfa, -1.0 / static_cast<double>(n_train)) - 1.0);

  auto wrapped = [&](int r, int c) -> double {
    c %= cols;
    if (c < 0) c += cols;
    return power(r, c);
  };

  // Absolute floor against numerical dust on (near-)noiseless maps.
  const double power_floor = 1e-12 * power.maxCoeff();

  std::vector<Detection> hits;
  for (int r = w; r < rows - w; ++r) {
    for (int c = 0; c < cols; ++c) {
      double sum_outer = 0.0;
      double sum_inner = 0.0;
      for (int dr = -w; dr <= w; ++dr)
        for (int dc = -w; dc <= w; ++dc) {
          const double v = wrapped(r + dr, c + dc);
          sum_outer += v;
          if (std::abs(dr) <= g && std::abs(dc) <= g) sum_inner += v;
        }
      const double noise = (sum_outer - sum_inner) / n_train;
      const double cut = power(r, c);
      if (cut > alpha * noise && cut > power_floor) {
        Detection d;
        d.delay_bin = r;
        d.doppler_bin = c;
        d.range_m = bin_to_range_m(r);
        d.velocity_mps = detection_velocity(map, c);
        d.magnitude = map.magnitude(r, c);
        d.snr_est_db = linear_to_db(cut / std::max(noise, power_floor));
        hits.push_back(d);
      }
    }
  }

  std::sort(hits.begin(), hits.end(),
            [](const Detection& a, const Detection& b) { return a.magnitude > b.magnitude; });
  if (static_cast<int>(hits.size()) > cfg.max_targets) hits.resize(cfg.max_targets);
  return hits;
}

std::vector<Detection> estimate_targets(const PulseTrain& train, const GolayPair& pair_u,
                                        const GolayPair& pair_v, int fft_len,
                                        const CfarConfig& cfar, DopplerConvention conv) {
  CefChannelEstimator estimator(pair_u, pair_v, train.range_bins);
  auto estimates = estimator.estimate_train(train);
  DelayDopplerMap map = build_ddm(estimates, fft_len, train.pri_s, conv);
  return cfar_detect(map, cfar);
}

void dump_csv(const DelayDopplerMap& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "delay_bin";
  for (int c = 0; c < map.doppler_bins(); ++c) out << ",doppler_" << c;
  out << '\n';
  for (int r = 0; r < map.delay_bins(); ++r) {
    out << r;
    for (int c = 0; c < map.doppler_bins(); ++c) out << ',' << map.magnitude(r, c);
    out << '\n';
  }
}

}  // namespace adradar
