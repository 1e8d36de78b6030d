#pragma once

#include <optional>
#include <span>
#include <vector>

#include "adradar/types.hpp"

namespace adradar {

/// Link-budget constants (60 GHz V2I defaults).
struct LinkParams {
  double ptx_dbm = 10.0;
  double pl_exponent = 2.66;
  double c_att_db = 70.0;          // LOS link attenuation
  double a_att_db_per_km = 15.0;   // atmospheric
  double r_att_db_per_km = 25.0;   // rain
  double noise_floor_dbm = -174.0; // per Hz
  double bandwidth_hz = 2.16e9;
  double noise_figure_db = 6.0;
  double shadow_sigma_db = 5.8;    // lognormal shadowing std
  double carrier_hz = 60.0e9;
};

struct McsEntry {
  int index = 0;
  enum class Phy { control, single_carrier } phy = Phy::single_carrier;
  double rate_bps = 0.0;
  double min_snr_db = 0.0;
  int psdu_octets = 4096;
  double per_threshold = 0.01;
};

/// Rate ladder with monotone sensitivity defaults; all values are
/// configuration, replaceable per deployment.
std::vector<McsEntry> default_mcs_table();

double path_loss_db(double distance_m, const LinkParams& params, double shadow_db = 0.0);

/// Ideal flat-beam gain, beamwidths in degrees.
double antenna_gain_linear(double theta_el_deg, double theta_az_deg);

/// Elevation beamwidth that spans the road width at the BS distance.
double elevation_beamwidth_deg(double road_width_m, double bs_road_distance_m);

double noise_power_dbm(const LinkParams& params);

/// Tx power plus both antenna gains minus path loss minus noise power; the
/// same beamwidths apply at both ends.
double snr_db(double theta_az_deg, double theta_el_deg, double distance_m,
              const LinkParams& params, double shadow_db = 0.0);

/// Highest-rate entry whose SNR threshold is met (>= comparison); nullopt is
/// outage.
std::optional<McsEntry> select_mcs(double snr_db, std::span<const McsEntry> table);

/// Time a vehicle at speed v spends inside the coverage wedge.
double contact_time_s(double bs_road_distance_m, double coverage_deg, double velocity_mps);

struct PassGeometry {
  double bs_road_distance_m = 100.0;
  double coverage_deg = 120.0;
  double theta_az_deg = 3.0;
  double road_width_m = 10.0;
  double velocity_mps = 30.0;
};

struct RateStats {
  double average_bps = 0.0;
  double outage_fraction = 0.0;
  double contact_s = 0.0;
};

/// Average rate over one pass through the coverage area: midpoint-rule time
/// integration of the selected MCS rate along the trajectory, deterministic
/// (no shadowing draw).
RateStats average_rate(const PassGeometry& geometry, const LinkParams& params,
                       std::span<const McsEntry> table, double dt_s);

}  // namespace adradar
