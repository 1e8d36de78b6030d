#include "adradar/planner.hpp"

#include <cmath>

namespace adradar {

double min_pri_s(FrameKind kind) { return preamble_length(kind) * chip_period_s; }

double range_resolution_m() { return speed_of_light_mps * chip_period_s / 2.0; }

double max_unambiguous_velocity_mps(double pri_s) {
  if (pri_s <= 0.0) throw std::invalid_argument("planner: PRI must be positive");
  return wavelength_m / pri_s;
}

double doppler_resolution_mps(int packets, double pri_s) {
  if (packets < 1 || pri_s <= 0.0) throw std::invalid_argument("planner: invalid CPI parameters");
  return wavelength_m / (2.0 * packets * pri_s);
}

int packets_for_resolution(double target_dv_mps, double pri_s) {
  if (target_dv_mps <= 0.0 || pri_s <= 0.0)
    throw std::invalid_argument("planner: resolution and PRI must be positive");
  return static_cast<int>(std::ceil(wavelength_m / (2.0 * target_dv_mps * pri_s)));
}

double cpi_for_resolution_s(double target_dv_mps) {
  if (target_dv_mps <= 0.0) throw std::invalid_argument("planner: resolution must be positive");
  return wavelength_m / (2.0 * target_dv_mps);
}

double scan_time_s(double phi_sradar_deg, double cpi_s, double theta_radar_deg_per_cpi) {
  if (cpi_s <= 0.0 || theta_radar_deg_per_cpi <= 0.0)
    throw std::invalid_argument("planner: CPI and scan rate must be positive");
  return cpi_s * std::floor(phi_sradar_deg / theta_radar_deg_per_cpi);
}

double sector_length_m(double bs_road_distance_m, double coverage_deg, double theta_start_deg,
                       double phi_sradar_deg) {
  if (bs_road_distance_m <= 0.0) throw std::invalid_argument("planner: BS-road distance must be positive");
  if (theta_start_deg < 0.0 || phi_sradar_deg < 0.0 ||
      theta_start_deg + phi_sradar_deg > coverage_deg)
    throw std::invalid_argument("planner: sector outside the coverage wedge");
  const double half = 0.5 * coverage_deg;
  return bs_road_distance_m * (std::tan(deg_to_rad(half - theta_start_deg)) -
                               std::tan(deg_to_rad(half - theta_start_deg - phi_sradar_deg)));
}

double SectorGeometry::sector_length_m() const {
  return adradar::sector_length_m(bs_road_distance_m, coverage_deg, theta_start_deg,
                                  phi_sradar_deg);
}

double sweep_interval_s(double sector_length_m, double v_max_mps) {
  if (v_max_mps <= 0.0) throw std::invalid_argument("planner: v_max must be positive");
  return sector_length_m / v_max_mps;
}

SweepPlan make_sweep_plan(const SectorGeometry& geometry, double doppler_resolution_mps,
                          double v_max_mps, double theta_radar_deg_per_cpi) {
  SweepPlan plan;
  plan.geometry = geometry;
  plan.doppler_resolution_mps = doppler_resolution_mps;
  plan.v_max_mps = v_max_mps;
  plan.theta_radar_deg_per_cpi = theta_radar_deg_per_cpi;
  plan.cpi_s = cpi_for_resolution_s(doppler_resolution_mps);
  plan.t_radar_s = scan_time_s(geometry.phi_sradar_deg, plan.cpi_s, theta_radar_deg_per_cpi);
  plan.sector_length_m = geometry.sector_length_m();
  plan.t_revisit_s = sweep_interval_s(plan.sector_length_m, v_max_mps);
  plan.duty_ratio = plan.t_radar_s / plan.t_revisit_s;
  return plan;
}

double duty_ratio_closed_form(const SectorGeometry& geometry, double doppler_resolution_mps,
                              double v_max_mps) {
  return geometry.phi_sradar_deg * wavelength_m * v_max_mps /
         (doppler_resolution_mps * geometry.sector_length_m());
}

std::vector<std::string> validate_plan(const SweepPlan& plan, double w_car_m, double k1,
                                       double k2_m) {
  std::vector<std::string> violations;
  if (plan.t_radar_s <= 0.0)
    violations.push_back("degenerate plan: sector narrower than one scan step");
  if (!(plan.sector_length_m > k1 * w_car_m))
    violations.push_back("sector length " + std::to_string(plan.sector_length_m) +
                         " m does not exceed " + std::to_string(k1) + " car lengths");
  const double moved = plan.v_max_mps * plan.t_radar_s;
  if (!(moved < k2_m))
    violations.push_back("vehicle moves " + std::to_string(moved) + " m during one sweep, limit " +
                         std::to_string(k2_m) + " m");
  return violations;
}

}  // namespace adradar
