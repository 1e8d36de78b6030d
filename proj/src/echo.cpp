#include "adradar/echo.hpp"

#include <cmath>
#include <fstream>
#include <random>

namespace adradar {

double doppler_hz(double velocity_mps, DopplerConvention conv) {
  const double k = (conv == DopplerConvention::one_way) ? 1.0 : 2.0;
  return k * velocity_mps / wavelength_m;
}

double velocity_from_doppler_mps(double f_d_hz, DopplerConvention conv) {
  const double k = (conv == DopplerConvention::one_way) ? 1.0 : 2.0;
  return f_d_hz * wavelength_m / k;
}

int delay_bin(double range_m) {
  return static_cast<int>(std::lround(2.0 * range_m / speed_of_light_mps / chip_period_s));
}

double bin_to_range_m(int bin) { return bin * speed_of_light_mps * chip_period_s / 2.0; }

PulseTrain simulate_echo(const ChipSequence& tx, std::span<const Target> targets,
                         const EchoConfig& cfg) {
  if (cfg.pulse_count < 1) throw std::invalid_argument("simulate_echo: pulse_count must be >= 1");
  if (cfg.noise_power < 0.0) throw std::invalid_argument("simulate_echo: negative noise power");
  if (cfg.range_bins < 1) throw std::invalid_argument("simulate_echo: range_bins must be >= 1");
  if (tx.size() == 0) throw std::invalid_argument("simulate_echo: empty transmit sequence");
  const double tx_duration = static_cast<double>(tx.size()) * chip_period_s;
  if (cfg.pri_s > 0.0 && cfg.pri_s < tx_duration)
    throw std::invalid_argument("simulate_echo: PRI shorter than the transmit sequence");

  const Eigen::Index pulse_len = cfg.range_bins + tx.size();
  CMat pulses = CMat::Zero(cfg.pulse_count, pulse_len);

  // Noise is generated first so that adding targets never perturbs the
  // stream: echoes are strictly additive on top of a fixed noise draw.
  if (cfg.noise_power > 0.0) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(cfg.noise_power / 2.0));
    for (int p = 0; p < cfg.pulse_count; ++p)
      for (Eigen::Index n = 0; n < pulse_len; ++n) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        pulses(p, n) = Complex(re, im);
      }
  }

  for (const Target& t : targets) {
    const int bin = delay_bin(t.range_m);
    if (bin < 0 || bin >= cfg.range_bins)
      throw std::invalid_argument("simulate_echo: target delay outside the pulse window");
    const double f_d = doppler_hz(t.radial_velocity_mps, cfg.convention);
    for (int p = 0; p < cfg.pulse_count; ++p) {
      const double phase = -2.0 * pi * f_d * static_cast<double>(p) * cfg.pri_s;
      const Complex rot = t.reflectivity * std::polar(1.0, phase);
      pulses.row(p).segment(bin, tx.size()) += rot * tx.samples.transpose();
    }
  }

  return PulseTrain{std::move(pulses), cfg.range_bins, cfg.pri_s, tx.chip_rate};
}

void dump_csv(const PulseTrain& train, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "pulse,sample,re,im\n";
  for (Eigen::Index p = 0; p < train.pulses.rows(); ++p)
    for (Eigen::Index n = 0; n < train.pulses.cols(); ++n)
      out << p << ',' << n << ',' << train.pulses(p, n).real() << ',' << train.pulses(p, n).imag()
          << '\n';
}

}  // namespace adradar
