#include "adradar/mac.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace adradar {

int BeamSectorSet::nearest(double angle_deg) const {
  const double rel = (angle_deg - center_deg(0)) / stride_deg;
  const int i = static_cast<int>(std::lround(rel));
  return std::clamp(i, 0, count - 1);
}

BeamSectorSet build_sectors(double coverage_deg, double theta_az_deg, double overlap_ratio) {
  if (coverage_deg <= 0.0 || theta_az_deg <= 0.0)
    throw std::invalid_argument("build_sectors: angles must be positive");
  if (overlap_ratio < 0.0 || overlap_ratio >= 1.0)
    throw std::invalid_argument("build_sectors: overlap ratio must be in [0, 1)");

  BeamSectorSet set;
  set.coverage_deg = coverage_deg;
  set.theta_az_deg = theta_az_deg;
  set.overlap_ratio = overlap_ratio;
  set.stride_deg = theta_az_deg * (1.0 - overlap_ratio);
  if (coverage_deg <= theta_az_deg) {
    set.count = 1;
  } else {
    set.count =
        static_cast<int>(std::ceil((coverage_deg - theta_az_deg) / set.stride_deg - 1e-9)) + 1;
  }
  return set;
}

double legacy_bhi_s(const MacConfig& cfg) {
  const double bti = cfg.initiator_sectors * cfg.beacon_s;
  const double abft =
      cfg.abft_slots * (cfg.responder_sectors * cfg.ssw_s + cfg.feedback_s + cfg.ack_s);
  return bti + cfg.mbifs_s + abft + cfg.ati_s;
}

double radar_bhi_s(const MacConfig& cfg, const SweepPlan& plan, int vehicle_count) {
  if (vehicle_count < 0) throw std::invalid_argument("radar_bhi: negative vehicle count");
  // Radar beacons double as synchronization; each detected vehicle then gets
  // one assignment beacon and replies through a single sector.
  const double per_vehicle = cfg.beacon_s + cfg.ssw_s + cfg.feedback_s + cfg.ack_s;
  return plan.t_radar_s + cfg.mbifs_s + vehicle_count * per_vehicle + cfg.ati_s;
}

double overhead_pct(double bhi_s, double repeat_interval_s) {
  if (repeat_interval_s <= 0.0) throw std::invalid_argument("overhead: repeat interval must be positive");
  return 100.0 * bhi_s / repeat_interval_s;
}

namespace {

struct RoadGeometry {
  double d;         // BS-road distance
  double half_deg;  // half coverage angle
  double span;      // road half-length covered

  double angle_deg(double y) const { return rad_to_deg(std::atan(y / d)); }
  double position(double angle_deg) const { return d * std::tan(deg_to_rad(angle_deg)); }
};

}  // namespace

MisalignmentCdf simulate_misalignment(const Scenario& scenario, int n_trials, std::uint64_t seed,
                                      int grid_points) {
  if (scenario.vehicles.empty())
    throw std::invalid_argument("simulate_misalignment: no vehicles in scenario");
  if (n_trials < 1) throw std::invalid_argument("simulate_misalignment: need at least one trial");

  const RoadGeometry road{scenario.bs_road_distance_m, 0.5 * scenario.coverage_deg,
                          scenario.bs_road_distance_m *
                              std::tan(deg_to_rad(0.5 * scenario.coverage_deg))};
  const BeamSectorSet sectors =
      build_sectors(scenario.coverage_deg, scenario.theta_az_deg, scenario.overlap_ratio);

  const double dv = scenario.plan.doppler_resolution_mps;
  const double dr = range_resolution_m();

  std::vector<double> first_misalignment;  // position from entry edge
  first_misalignment.reserve(static_cast<size_t>(n_trials) * scenario.vehicles.size());
  long total = 0;

  for (int trial = 0; trial < n_trials; ++trial) {
    // Independent substream per trial so results do not depend on iteration
    // order or partitioning.
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    for (const VehicleSpec& vehicle : scenario.vehicles) {
      ++total;
      const double y0 = -road.span + vehicle.entry_position_m;
      const double v = vehicle.velocity_mps;
      const double y_hat0 = y0 + unit(rng) * 0.5 * dr;
      const double v_hat = v + unit(rng) * 0.5 * dv;
      if (v <= 0.0 || v_hat <= 0.0) continue;

      const double t_exit = (road.span - y0) / v;

      // Walk the sector dwells of the predicted track. Within one dwell both
      // tracks are monotone, so it suffices to check the true position
      // against the sector edges at the dwell boundaries.
      int sector = sectors.nearest(road.angle_deg(y_hat0));
      double t = 0.0;
      bool misaligned = false;
      while (t < t_exit && !misaligned) {
        // Dwell ends when the prediction crosses the switch boundary to the
        // next sector (midpoint between the two centers).
        double t_next = t_exit;
        if (sector + 1 < sectors.count) {
          const double boundary_deg = sectors.center_deg(sector) + 0.5 * sectors.stride_deg;
          const double y_boundary = road.position(boundary_deg);
          const double t_cross = (y_boundary - y_hat0) / v_hat;
          if (t_cross > t && t_cross < t_exit) t_next = t_cross;
        }

        const double lo = road.position(sectors.start_deg(sector));
        const double hi = road.position(sectors.start_deg(sector) + sectors.theta_az_deg);
        const double y_at_start = y0 + v * t;
        const double y_at_end = y0 + v * t_next;
        if (y_at_start < lo) {
          first_misalignment.push_back(y_at_start - y0);
          misaligned = true;
        } else if (y_at_end > hi) {
          // Crossing happened inside the dwell at the sector's leading edge.
          first_misalignment.push_back(std::min(hi, road.span) - y0);
          misaligned = true;
        }

        if (t_next >= t_exit || sector + 1 >= sectors.count) break;
        t = t_next;
        ++sector;
      }
    }
  }

  MisalignmentCdf cdf;
  cdf.position_m = RVec::LinSpaced(grid_points, 0.0, 2.0 * road.span);
  cdf.probability = RVec::Zero(grid_points);
  std::sort(first_misalignment.begin(), first_misalignment.end());
  for (int i = 0; i < grid_points; ++i) {
    const auto it = std::upper_bound(first_misalignment.begin(), first_misalignment.end(),
                                     cdf.position_m[i]);
    cdf.probability[i] =
        static_cast<double>(it - first_misalignment.begin()) / static_cast<double>(total);
  }
  return cdf;
}

SimResult run_comparison(const Scenario& scenario, const MacConfig& cfg, int n_trials,
                         bool include_radar) {
  SimResult result;
  result.misalignment = simulate_misalignment(scenario, n_trials, scenario.seed);
  result.bhi_legacy_s = legacy_bhi_s(cfg);
  result.overhead_legacy_pct = overhead_pct(result.bhi_legacy_s, cfg.bi_s);
  result.radar_included = include_radar;
  if (include_radar) {
    result.bhi_radar_s =
        radar_bhi_s(cfg, scenario.plan, static_cast<int>(scenario.vehicles.size()));
    result.overhead_radar_pct = overhead_pct(result.bhi_radar_s, scenario.plan.t_revisit_s);
    result.reduction_pct = 100.0 * (1.0 - result.overhead_radar_pct / result.overhead_legacy_pct);
  }
  return result;
}

}  // namespace adradar
