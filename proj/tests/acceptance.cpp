// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Tolerances are fixed here, not tunable.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adradar/echo.hpp"
#include "adradar/estimator.hpp"
#include "adradar/golay.hpp"
#include "adradar/link.hpp"
#include "adradar/mac.hpp"
#include "adradar/planner.hpp"
#include "adradar/runner.hpp"

using namespace adradar;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Complementary property, exact integer arithmetic, N up to 512.
void criterion_golay() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 2; n <= 512; n *= 2) {
    for (std::uint64_t seed : {2ULL, 71ULL}) {
      const GolayPair pair = generate_golay_pair(n, make_golay_seed(n, seed));
      const Eigen::VectorXi acf = autocorrelation_sum(pair);
      for (Eigen::Index i = 0; i < acf.size(); ++i) {
        const int expect = (i == n - 1) ? 2 * n : 0;
        if (acf[i] != expect) ok = false;
      }
    }
  }
  const double dt = seconds_since(t0);
  report(1, "Golay autocorrelation sum is 2N*delta", ok && dt < 1.0,
         "runtime " + std::to_string(dt) + " s");
}

// 2. PRI and range-resolution constants.
void criterion_timing() {
  const double cphy = min_pri_s(FrameKind::cphy);
  const double scphy = min_pri_s(FrameKind::scphy);
  const double dr = range_resolution_m();
  const bool ok = std::abs(cphy - 4.29e-6) / 4.29e-6 < 0.005 &&
                  std::abs(scphy - 1.89e-6) / 1.89e-6 < 0.005 &&
                  std::abs(dr - 0.0852) / 0.0852 < 0.001;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "PRI %.4g / %.4g us, dR %.4g cm", cphy * 1e6, scphy * 1e6,
                dr * 1e2);
  report(2, "timing constants", ok, buf);
}

// 3. Velocity-ambiguity anchor.
void criterion_ambiguity() {
  const double nu = max_unambiguous_velocity_mps(0.166e-3);
  report(3, "unambiguous velocity at 0.166 ms PRI", std::abs(nu - 30.0) / 30.0 < 0.01,
         "nu_u = " + std::to_string(nu) + " m/s");
}

// 4. End-to-end chain: 100 random on-grid single-target runs, all detected
// at the true bins with half-bin accuracy, under 60 s.
void criterion_chain() {
  const auto t0 = Clock::now();
  const int n_range = 1024;
  const int pulses = 64;
  const GolayPair pair_u = generate_golay_pair(256, make_golay_seed(256, 17));
  const GolayPair pair_v = generate_golay_pair(256, make_golay_seed(256, 29));
  const ChipSequence cef = build_cef(pair_u, pair_v);
  const CefChannelEstimator estimator(pair_u, pair_v, n_range);

  EchoConfig cfg;
  cfg.pulse_count = pulses;
  cfg.pri_s = min_pri_s(FrameKind::cphy);
  cfg.range_bins = n_range;
  CfarConfig cfar;
  cfar.max_targets = 4;
  const int w = cfar.guard_cells + cfar.train_cells;
  const double dv_bin = doppler_resolution_mps(pulses, cfg.pri_s);

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> bin_draw(w, n_range - w - 1);
  std::uniform_int_distribution<int> dop_draw(0, pulses - 1);
  std::uniform_real_distribution<double> snr_draw(15.0, 25.0);

  int detected = 0;
  bool errors_ok = true;
  const int scenarios = 100;
  for (int s = 0; s < scenarios; ++s) {
    const int bin = bin_draw(rng);
    const int k = dop_draw(rng);
    const double snr_db_val = snr_draw(rng);
    const double f_d = k / (static_cast<double>(pulses) * cfg.pri_s);
    const double v = velocity_from_doppler_mps(f_d, cfg.convention);

    cfg.noise_power = pulses * 1152.0 / db_to_linear(snr_db_val);
    cfg.seed = 5000 + s;
    const Target target{bin_to_range_m(bin), v, Complex(1.0, 0.0)};
    const PulseTrain train = simulate_echo(cef, {&target, 1}, cfg);

    const auto estimates = estimator.estimate_train(train);
    const DelayDopplerMap map = build_ddm(estimates, pulses, cfg.pri_s, cfg.convention);
    const auto detections = cfar_detect(map, cfar);
    if (detections.empty()) continue;
    const Detection& top = detections.front();
    if (top.delay_bin == bin && top.doppler_bin == k) {
      ++detected;
      if (std::abs(top.range_m - target.range_m) > range_resolution_m() / 2.0) errors_ok = false;
      if (std::abs(top.velocity_mps - v) > dv_bin / 2.0) errors_ok = false;
    }
  }
  const double dt = seconds_since(t0);
  report(4, "end-to-end detection at true bins",
         detected == scenarios && errors_ok && dt < 60.0,
         std::to_string(detected) + "/100 detected, runtime " + std::to_string(dt) + " s");
}

// 5. CFAR false-alarm calibration on noise-only maps through the chain.
void criterion_cfar() {
  const GolayPair pair_u = generate_golay_pair(256, make_golay_seed(256, 17));
  const GolayPair pair_v = generate_golay_pair(256, make_golay_seed(256, 29));
  const ChipSequence cef = build_cef(pair_u, pair_v);
  const int n_range = 320;
  const int pulses = 16;
  const CefChannelEstimator estimator(pair_u, pair_v, n_range);

  CfarConfig cfar;
  cfar.pfa = 1e-3;
  cfar.max_targets = 1 << 20;
  const int w = cfar.guard_cells + cfar.train_cells;

  EchoConfig cfg;
  cfg.pulse_count = pulses;
  cfg.pri_s = min_pri_s(FrameKind::cphy);
  cfg.range_bins = n_range;
  cfg.noise_power = 1.0;

  long alarms = 0;
  long cells = 0;
  for (int m = 0; m < 10; ++m) {
    cfg.seed = 900 + m;
    const PulseTrain train = simulate_echo(cef, {}, cfg);
    const auto estimates = estimator.estimate_train(train);
    const DelayDopplerMap map = build_ddm(estimates, pulses, cfg.pri_s, cfg.convention);
    alarms += static_cast<long>(cfar_detect(map, cfar).size());
    cells += (n_range - 2 * w) * pulses;
  }
  const double rate = static_cast<double>(alarms) / static_cast<double>(cells);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%ld alarms over %ld cells, rate %.2e", alarms, cells, rate);
  report(5, "CFAR false-alarm rate within [0.5, 2] x pfa",
         cells >= 10000 && rate > 0.5e-3 && rate < 2.0e-3, buf);
}

// 6. Sector geometry anchor.
void criterion_sector() {
  const double r = sector_length_m(100.0, 120.0, 0.0, 5.0);
  report(6, "sector length 30.4 m +/- 0.1 m", std::abs(r - 30.4) < 0.1,
         "r = " + std::to_string(r) + " m");
}

// 7. Duty ratio level and edge-placement optimality.
void criterion_duty() {
  SectorGeometry geo;
  geo.phi_sradar_deg = 5.0;
  const SweepPlan plan = make_sweep_plan(geo, 0.456, 30.0);
  bool minimal_at_edge = true;
  for (double start = 0.5; start + geo.phi_sradar_deg <= 60.0; start += 0.5) {
    SectorGeometry moved = geo;
    moved.theta_start_deg = start;
    if (make_sweep_plan(moved, 0.456, 30.0).duty_ratio < plan.duty_ratio) minimal_at_edge = false;
  }
  report(7, "duty ratio in [0.045, 0.065], minimized at the edge",
         plan.duty_ratio >= 0.045 && plan.duty_ratio <= 0.065 && minimal_at_edge,
         "rho = " + std::to_string(plan.duty_ratio));
}

// 8. Whole-area sweep infeasibility.
void criterion_whole_area() {
  SectorGeometry geo;
  geo.phi_sradar_deg = 120.0;
  const SweepPlan plan = make_sweep_plan(geo, 1.5, 30.0);
  const auto violations = validate_plan(plan, 5.0, 1.0, 5.0);
  bool movement_flagged = false;
  for (const auto& v : violations)
    if (v.find("moves") != std::string::npos) movement_flagged = true;
  report(8, "whole-area sweep takes 0.4 s and trips the movement bound",
         std::abs(plan.t_radar_s - 0.40) / 0.40 < 0.05 && movement_flagged,
         "t_radar = " + std::to_string(plan.t_radar_s) + " s, " +
             std::to_string(violations.size()) + " violation(s)");
}

// 9. Overhead reproduction.
void criterion_overhead() {
  const MacConfig cfg;
  SectorGeometry geo;
  geo.phi_sradar_deg = 5.0;
  Scenario s;
  s.plan = make_sweep_plan(geo, 0.45, 30.0);
  for (int i = 0; i < 10; ++i) s.vehicles.push_back(VehicleSpec{});
  s.seed = 77;
  const SimResult result = run_comparison(s, cfg, 1000);
  const bool ok = std::abs(result.overhead_legacy_pct - 35.0) <= 2.0 &&
                  std::abs(result.overhead_radar_pct - 5.82) <= 1.0 &&
                  result.reduction_pct >= 78.0 && result.reduction_pct <= 88.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "legacy %.2f%%, radar %.2f%%, reduction %.1f%%",
                result.overhead_legacy_pct, result.overhead_radar_pct, result.reduction_pct);
  report(9, "beam-training overhead comparison", ok, buf);
}

// 10. Misalignment CDF: level, monotonicity, dominance, runtime.
void criterion_misalignment() {
  const auto t0 = Clock::now();
  Scenario fine;
  fine.overlap_ratio = 0.7;
  fine.plan = make_sweep_plan(SectorGeometry{}, 0.45, 30.0);
  fine.vehicles.push_back(VehicleSpec{});
  Scenario coarse = fine;
  coarse.plan = make_sweep_plan(SectorGeometry{}, 1.5, 30.0);

  const int trials = 10000;
  const MisalignmentCdf cdf_fine = simulate_misalignment(fine, trials, 314);
  const MisalignmentCdf cdf_coarse = simulate_misalignment(coarse, trials, 314);

  bool monotone = true;
  for (Eigen::Index i = 1; i < cdf_fine.probability.size(); ++i)
    if (cdf_fine.probability[i] < cdf_fine.probability[i - 1]) monotone = false;
  bool dominated = true;
  bool strict = false;
  for (Eigen::Index i = 0; i < cdf_fine.probability.size(); ++i) {
    if (cdf_coarse.probability[i] < cdf_fine.probability[i]) dominated = false;
    if (cdf_coarse.probability[i] > cdf_fine.probability[i]) strict = true;
  }
  const double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "P(end) = %.4f, coarse P(end) = %.4f, runtime %.1f s",
                cdf_fine.at_end(), cdf_coarse.at_end(), dt);
  report(10, "misalignment below 2% with monotone, dominated CDFs",
         cdf_fine.at_end() < 0.02 && monotone && dominated && strict && dt < 120.0, buf);
}

// 11. Throughput trend properties.
void criterion_throughput() {
  const LinkParams params;
  const auto table = default_mcs_table();
  PassGeometry g;

  bool monotone_d = true;
  double last = 1e18;
  for (double d = 50.0; d <= 200.0 + 1e-9; d += 25.0) {
    PassGeometry gg = g;
    gg.bs_road_distance_m = d;
    const double r = average_rate(gg, params, table, 1e-3).average_bps;
    if (r > last + 1e-6) monotone_d = false;
    last = r;
  }
  bool monotone_az = true;
  last = 1e18;
  for (double az = 1.5; az <= 10.5 + 1e-9; az += 1.5) {
    PassGeometry gg = g;
    gg.theta_az_deg = az;
    const double r = average_rate(gg, params, table, 1e-3).average_bps;
    if (r > last + 1e-6) monotone_az = false;
    last = r;
  }

  const double base = average_rate(g, params, table, 1e-3).average_bps;
  PassGeometry wide = g;
  wide.theta_az_deg = 9.0;
  const double sens_az = std::abs(average_rate(wide, params, table, 1e-3).average_bps - base);
  PassGeometry far = g;
  far.bs_road_distance_m = 200.0;
  const double sens_d = std::abs(average_rate(far, params, table, 1e-3).average_bps - base);

  const double coarse = average_rate(g, params, table, 2e-3).average_bps;
  const double fine = average_rate(g, params, table, 1e-3).average_bps;
  const bool converged = std::abs(coarse - fine) / fine < 0.005;

  char buf[160];
  std::snprintf(buf, sizeof(buf), "sens(az 3->9deg) %.3g bps vs sens(d 100->200m) %.3g bps",
                sens_az, sens_d);
  report(11, "rate trends and integration convergence",
         monotone_d && monotone_az && sens_az > sens_d && converged, buf);
}

// 12. Byte-identical reruns of every Monte Carlo experiment.
void criterion_determinism() {
  const fs::path root = fs::temp_directory_path() / "adradar_acceptance";
  fs::remove_all(root);
  bool ok = true;
  std::string detail;
  for (const std::string exp :
       {"radar-chain", "misalignment", "overhead", "reproduce-paper"}) {
    RunSpec spec;
    spec.experiment = exp;
    spec.seed = 99;
    spec.trials = 1000;
    spec.out_dir = (root / (exp + "_a")).string();
    run(spec);
    spec.out_dir = (root / (exp + "_b")).string();
    run(spec);
    for (const auto& entry : fs::directory_iterator(root / (exp + "_a"))) {
      const fs::path twin = root / (exp + "_b") / entry.path().filename();
      if (!fs::exists(twin) || slurp(entry.path()) != slurp(twin)) {
        ok = false;
        detail += exp + "/" + entry.path().filename().string() + " differs; ";
      }
    }
  }
  report(12, "identical seeds give byte-identical outputs", ok,
         ok ? "4 experiments x 2 runs compared" : detail);
}

}  // namespace

int main() {
  criterion_golay();
  criterion_timing();
  criterion_ambiguity();
  criterion_chain();
  criterion_cfar();
  criterion_sector();
  criterion_duty();
  criterion_whole_area();
  criterion_overhead();
  criterion_misalignment();
  criterion_throughput();
  criterion_determinism();

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
