#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adradar/preamble.hpp"
#include "adradar/types.hpp"

namespace adradar {

/// Point reflector on the road.
struct Target {
  double range_m = 0.0;
  double radial_velocity_mps = 0.0;
  Complex reflectivity{1.0, 0.0};
};

/// Doppler frequency mapping. one_way uses f_D = v / lambda, which keeps the
/// simulator consistent with the planner's ambiguity formula nu_u =
/// lambda / T_pr; two_way uses the round-trip f_D = 2 v / lambda.
enum class DopplerConvention { one_way, two_way };

double doppler_hz(double velocity_mps, DopplerConvention conv);
double velocity_from_doppler_mps(double f_d_hz, DopplerConvention conv);

/// Chip delay bin for a reflector at the given range.
int delay_bin(double range_m);
double bin_to_range_m(int bin);

struct EchoConfig {
  int pulse_count = 64;
  double pri_s = 0.0;          // pulse repetition interval
  double noise_power = 0.0;    // per complex sample, linear
  std::uint64_t seed = 1;
  DopplerConvention convention = DopplerConvention::one_way;
  int range_bins = 1024;       // delay window, chips
};

/// One coherent processing interval of received pulses, chip-rate sampled.
/// Row p holds pulse p; sample n of row p sits at absolute time
/// p * pri_s + n * T_c. Row length is range_bins + tx length.
struct PulseTrain {
  CMat pulses;
  int range_bins = 0;
  double pri_s = 0.0;
  double chip_rate = chip_rate_hz;
};

/// Multi-target echo of a P-pulse train: each target contributes the
/// transmit sequence delayed to its chip bin, scaled by its reflectivity and
/// a per-pulse constant Doppler phase exp(-j 2 pi f_D p T_pr), plus circular
/// white Gaussian noise. Delays are quantized to the chip grid.
PulseTrain simulate_echo(const ChipSequence& tx, std::span<const Target> targets,
                         const EchoConfig& cfg);

void dump_csv(const PulseTrain& train, const std::string& path);

}  // namespace adradar
