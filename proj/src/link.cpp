#include "adradar/link.hpp"

#include <cmath>

namespace adradar {

std::vector<McsEntry> default_mcs_table() {
  using Phy = McsEntry::Phy;
  // Rates follow the 60 GHz control/single-carrier ladder; SNR thresholds
  // are sensitivity-derived defaults adjusted to be strictly monotone.
  return {
      {0, Phy::control, 27.5e6, -3.35, 256, 0.05},
      {1, Phy::single_carrier, 385.0e6, 6.65, 4096, 0.01},
      {2, Phy::single_carrier, 770.0e6, 8.65, 4096, 0.01},
      {3, Phy::single_carrier, 962.5e6, 9.65, 4096, 0.01},
      {4, Phy::single_carrier, 1155.0e6, 10.65, 4096, 0.01},
      {5, Phy::single_carrier, 1251.25e6, 11.65, 4096, 0.01},
      {6, Phy::single_carrier, 1540.0e6, 12.65, 4096, 0.01},
      {7, Phy::single_carrier, 1925.0e6, 13.65, 4096, 0.01},
      {8, Phy::single_carrier, 2310.0e6, 14.65, 4096, 0.01},
      {9, Phy::single_carrier, 2502.5e6, 15.65, 4096, 0.01},
      {10, Phy::single_carrier, 3080.0e6, 19.65, 4096, 0.01},
      {11, Phy::single_carrier, 3850.0e6, 20.65, 4096, 0.01},
      {12, Phy::single_carrier, 4620.0e6, 21.65, 4096, 0.01},
  };
}

double path_loss_db(double distance_m, const LinkParams& params, double shadow_db) {
  if (distance_m <= 0.0) throw std::invalid_argument("path_loss: distance must be positive");
  const double d_km = distance_m / 1000.0;
  return 10.0 * params.pl_exponent * std::log10(distance_m) + shadow_db + params.c_att_db +
         params.a_att_db_per_km * d_km + params.r_att_db_per_km * d_km;
}

double antenna_gain_linear(double theta_el_deg, double theta_az_deg) {
  if (theta_el_deg <= 0.0 || theta_az_deg <= 0.0 || theta_el_deg >= 180.0 + 1e-9 ||
      theta_az_deg >= 180.0 + 1e-9)
    throw std::invalid_argument("antenna_gain: beamwidths must be in (0, 180] degrees");
  return 4.0 * 180.0 * 180.0 / (theta_el_deg * theta_az_deg * pi);
}

double elevation_beamwidth_deg(double road_width_m, double bs_road_distance_m) {
  if (road_width_m <= 0.0 || bs_road_distance_m <= 0.0)
    throw std::invalid_argument("elevation_beamwidth: arguments must be positive");
  return 2.0 * rad_to_deg(std::atan(0.5 * road_width_m / bs_road_distance_m));
}

double noise_power_dbm(const LinkParams& params) {
  return params.noise_floor_dbm + 10.0 * std::log10(params.bandwidth_hz) + params.noise_figure_db;
}

double snr_db(double theta_az_deg, double theta_el_deg, double distance_m,
              const LinkParams& params, double shadow_db) {
  const double gain_db = linear_to_db(antenna_gain_linear(theta_el_deg, theta_az_deg));
  return params.ptx_dbm + 2.0 * gain_db - path_loss_db(distance_m, params, shadow_db) -
         noise_power_dbm(params);
}

std::optional<McsEntry> select_mcs(double snr_db, std::span<const McsEntry> table) {
  std::optional<McsEntry> best;
  for (const McsEntry& e : table) {
    if (snr_db >= e.min_snr_db && (!best || e.rate_bps > best->rate_bps)) best = e;
  }
  return best;
}

double contact_time_s(double bs_road_distance_m, double coverage_deg, double velocity_mps) {
  if (velocity_mps <= 0.0) throw std::invalid_argument("contact_time: velocity must be positive");
  return 2.0 * bs_road_distance_m * std::tan(deg_to_rad(0.5 * coverage_deg)) / velocity_mps;
}

RateStats average_rate(const PassGeometry& geometry, const LinkParams& params,
                       std::span<const McsEntry> table, double dt_s) {
  if (dt_s <= 0.0) throw std::invalid_argument("average_rate: dt must be positive");

  const double t_c = contact_time_s(geometry.bs_road_distance_m, geometry.coverage_deg,
                                    geometry.velocity_mps);
  const double theta_el =
      elevation_beamwidth_deg(geometry.road_width_m, geometry.bs_road_distance_m);
  const double half_span =
      geometry.bs_road_distance_m * std::tan(deg_to_rad(0.5 * geometry.coverage_deg));

  double rate_integral = 0.0;
  double outage_time = 0.0;
  const int steps = std::max(1, static_cast<int>(std::ceil(t_c / dt_s)));
  const double step = t_c / steps;
  for (int i = 0; i < steps; ++i) {
    const double t = (i + 0.5) * step;
    const double y = -half_span + geometry.velocity_mps * t;
    const double d_v = std::hypot(geometry.bs_road_distance_m, y);
    const double snr = snr_db(geometry.theta_az_deg, theta_el, d_v, params);
    const auto mcs = select_mcs(snr, table);
    if (mcs)
      rate_integral += mcs->rate_bps * step;
    else
      outage_time += step;
  }

  RateStats stats;
  stats.average_bps = rate_integral / t_c;
  stats.outage_fraction = outage_time / t_c;
  stats.contact_s = t_c;
  return stats;
}

}  // namespace adradar
