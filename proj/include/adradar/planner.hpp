#pragma once

#include <string>
#include <vector>

#include "adradar/preamble.hpp"
#include "adradar/types.hpp"

namespace adradar {

/// Coherent-processing timing of the preamble-train radar.
struct RadarTiming {
  FrameKind kind = FrameKind::cphy;
  double pri_s = 0.0;                     // >= preamble duration
  int packets = 1;                        // pulses per CPI
  double theta_radar_deg_per_cpi = 0.5;   // angular scan rate

  double cpi_s() const { return packets * pri_s; }
};

/// Radar sector placement relative to the coverage wedge. theta_start is
/// measured from the coverage edge; the road-projected sector length r
/// shrinks as the sector rotates toward broadside.
struct SectorGeometry {
  double bs_road_distance_m = 100.0;
  double coverage_deg = 120.0;  // full BS coverage angle
  double theta_start_deg = 0.0;
  double phi_sradar_deg = 5.0;

  double sector_length_m() const;
};

double min_pri_s(FrameKind kind);
double range_resolution_m();
double max_unambiguous_velocity_mps(double pri_s);
double doppler_resolution_mps(int packets, double pri_s);

/// Smallest packet count achieving the requested velocity resolution.
int packets_for_resolution(double target_dv_mps, double pri_s);

/// CPI length required for a velocity resolution.
double cpi_for_resolution_s(double target_dv_mps);

/// Time for a full sweep of the sector: one CPI per theta_radar step.
double scan_time_s(double phi_sradar_deg, double cpi_s, double theta_radar_deg_per_cpi = 0.5);

double sector_length_m(double bs_road_distance_m, double coverage_deg, double theta_start_deg,
                       double phi_sradar_deg);

/// Longest admissible interval between sweeps of the same sector: every
/// vehicle crossing the sector at up to v_max must be seen at least once.
double sweep_interval_s(double sector_length_m, double v_max_mps);

/// Complete sweep design: sector scan time, revisit interval and duty ratio.
struct SweepPlan {
  SectorGeometry geometry;
  double doppler_resolution_mps = 0.454;
  double v_max_mps = 30.0;
  double theta_radar_deg_per_cpi = 0.5;

  double cpi_s = 0.0;
  double t_radar_s = 0.0;   // full sector sweep
  double t_revisit_s = 0.0; // interval between sweeps
  double duty_ratio = 0.0;  // t_radar / t_revisit
  double sector_length_m = 0.0;
};

SweepPlan make_sweep_plan(const SectorGeometry& geometry, double doppler_resolution_mps,
                          double v_max_mps, double theta_radar_deg_per_cpi = 0.5);

/// Closed-form duty ratio phi * lambda * v_max / (dv * r); equals the
/// composed value when the scan rate is 0.5 deg/CPI and phi is a whole
/// number of scan steps.
double duty_ratio_closed_form(const SectorGeometry& geometry, double doppler_resolution_mps,
                              double v_max_mps);

/// Design constraints: the sector must be longer than k1 car lengths and a
/// vehicle may move at most k2 meters during one sweep. Returns a list of
/// human-readable violations, empty when the plan is feasible.
std::vector<std::string> validate_plan(const SweepPlan& plan, double w_car_m, double k1, double k2_m);

}  // namespace adradar
