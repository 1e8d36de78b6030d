#pragma once

#include <cstdint>
#include <vector>

#include "adradar/planner.hpp"
#include "adradar/types.hpp"

namespace adradar {

/// Beacon-interval timeline parameters. Frame durations are calibration
/// constants chosen so that the legacy header interval with 32 initiator
/// sectors, 32 responder sectors and 4 A-BFT slots lasts 10.72 ms; every
/// value is configurable.
struct MacConfig {
  double bi_s = 30e-3;
  double beacon_s = 267.51875e-6;
  double ssw_s = 15.8e-6;
  double feedback_s = 16e-6;
  double ack_s = 16e-6;
  double mbifs_s = 9e-6;
  double ati_s = 0.0;
  int initiator_sectors = 32;
  int responder_sectors = 32;
  int abft_slots = 4;
};

/// Communication sectors tiling the coverage wedge with a configurable
/// overlap between neighbors. Angles in degrees, measured from broadside
/// (the wedge spans [-coverage/2, +coverage/2]).
struct BeamSectorSet {
  double coverage_deg = 120.0;
  double theta_az_deg = 3.0;
  double overlap_ratio = 0.0;
  double stride_deg = 3.0;
  int count = 0;

  double start_deg(int i) const { return -0.5 * coverage_deg + i * stride_deg; }
  double center_deg(int i) const { return start_deg(i) + 0.5 * theta_az_deg; }
  bool contains(int i, double angle_deg) const {
    return angle_deg >= start_deg(i) && angle_deg <= start_deg(i) + theta_az_deg;
  }
  /// Sector whose center is closest to the given angle.
  int nearest(double angle_deg) const;
};

BeamSectorSet build_sectors(double coverage_deg, double theta_az_deg, double overlap_ratio);

/// Sector-level-sweep header interval of the legacy exchange: initiator
/// beacons, MBIFS, then per-slot responder sweeps with feedback and ACK.
double legacy_bhi_s(const MacConfig& cfg);

/// Radar-assisted header interval: the sector sweep doubles as beacon
/// transmission, then one assignment beacon plus a single-sector response
/// per detected vehicle, plus the announcement interval.
double radar_bhi_s(const MacConfig& cfg, const SweepPlan& plan, int vehicle_count);

double overhead_pct(double bhi_s, double repeat_interval_s);

struct VehicleSpec {
  double entry_position_m = 0.0;  // offset from the coverage entry edge
  double velocity_mps = 30.0;
  double w_car_m = 5.0;
};

struct Scenario {
  double bs_road_distance_m = 100.0;
  double coverage_deg = 120.0;
  double theta_az_deg = 3.0;
  double road_width_m = 10.0;
  double overlap_ratio = 0.7;
  SweepPlan plan;
  std::vector<VehicleSpec> vehicles;
  std::uint64_t seed = 1;
};

/// Cumulative misalignment probability along the road. position_m runs from
/// the coverage entry edge to the exit edge.
struct MisalignmentCdf {
  RVec position_m;
  RVec probability;

  double at_end() const { return probability.size() ? probability[probability.size() - 1] : 0.0; }
};

/// Monte Carlo over radar estimation errors: each trial draws a velocity
/// error uniform in +/- dv/2 and a position error uniform in +/- dr/2 at the
/// radar fix, dead-reckons the predicted position, activates the sector
/// nearest the prediction and records where the true vehicle first leaves
/// the active sector.
MisalignmentCdf simulate_misalignment(const Scenario& scenario, int n_trials, std::uint64_t seed,
                                      int grid_points = 240);

struct SimResult {
  MisalignmentCdf misalignment;
  double bhi_legacy_s = 0.0;
  double bhi_radar_s = 0.0;
  double overhead_legacy_pct = 0.0;
  double overhead_radar_pct = 0.0;
  double reduction_pct = 0.0;
  bool radar_included = true;  // false in legacy-only runs; radar fields are zero
};

SimResult run_comparison(const Scenario& scenario, const MacConfig& cfg, int n_trials,
                         bool include_radar = true);

}  // namespace adradar
