#include <doctest.h>

#include "adradar/link.hpp"

using namespace adradar;

TEST_SUITE_BEGIN("link");

TEST_CASE("path loss at reference distances") {
  const LinkParams p;
  // 1 m: only the constant attenuation plus 1e-3 km of air/rain terms.
  CHECK(path_loss_db(1.0, p) == doctest::Approx(70.04).epsilon(1e-4));
  // 100 m: 10 * 2.66 * 2 + 70 + (15 + 25) * 0.1.
  CHECK(path_loss_db(100.0, p) == doctest::Approx(127.2).epsilon(1e-6));
  CHECK(path_loss_db(100.0, p, 3.0) == doctest::Approx(path_loss_db(100.0, p) + 3.0));
  CHECK_THROWS_AS(path_loss_db(0.0, p), std::invalid_argument);
  CHECK_THROWS_AS(path_loss_db(-5.0, p), std::invalid_argument);
}

TEST_CASE("antenna gain in the degrees form") {
  CHECK(antenna_gain_linear(180.0, 180.0) == doctest::Approx(4.0 / pi).epsilon(1e-9));
  CHECK(antenna_gain_linear(10.0, 3.0) == doctest::Approx(4.0 * 32400.0 / (30.0 * pi)));
  CHECK(antenna_gain_linear(10.0, 3.0) == doctest::Approx(1375.1).epsilon(1e-4));
  CHECK(antenna_gain_linear(10.0, 1.5) ==
        doctest::Approx(2.0 * antenna_gain_linear(10.0, 3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(antenna_gain_linear(0.0, 3.0), std::invalid_argument);
}

TEST_CASE("noise power") {
  const LinkParams p;
  CHECK(noise_power_dbm(p) == doctest::Approx(-74.65).epsilon(1e-3));
  LinkParams wide = p;
  wide.bandwidth_hz = 2.0 * p.bandwidth_hz;
  CHECK(noise_power_dbm(wide) == doctest::Approx(noise_power_dbm(p) + 3.0103).epsilon(1e-4));
  LinkParams noisy = p;
  noisy.noise_figure_db += 2.5;
  CHECK(noise_power_dbm(noisy) == doctest::Approx(noise_power_dbm(p) + 2.5));
}

TEST_CASE("snr is monotone in beamwidth and distance") {
  const LinkParams p;
  const double el = elevation_beamwidth_deg(10.0, 100.0);
  CHECK(el == doctest::Approx(5.725).epsilon(0.001));

  double last = -1e9;
  for (double az = 10.0; az >= 1.0; az -= 0.5) {
    const double s = snr_db(az, el, 100.0, p);
    CHECK(s > last);
    last = s;
  }
  last = 1e9;
  for (double d = 20.0; d <= 220.0; d += 10.0) {
    const double s = snr_db(3.0, el, d, p);
    CHECK(s < last);
    last = s;
  }
  // Golden regression value, hand-checked: 10 + 2*33.81 - 127.2 + 74.65.
  CHECK(snr_db(3.0, el, 100.0, p) == doctest::Approx(25.07).epsilon(0.001));
}

TEST_CASE("mcs selection picks the fastest feasible entry") {
  const auto table = default_mcs_table();
  CHECK(!select_mcs(-10.0, table).has_value());  // outage below every threshold
  CHECK(select_mcs(100.0, table)->index == 12);
  CHECK(select_mcs(100.0, table)->rate_bps == doctest::Approx(4.62e9));
  // Exactly at a threshold the entry is eligible.
  for (const McsEntry& e : table) {
    const auto chosen = select_mcs(e.min_snr_db, table);
    REQUIRE(chosen.has_value());
    CHECK(chosen->rate_bps >= e.rate_bps);
  }
  // Monotone non-decreasing rate in SNR.
  double last = 0.0;
  for (double snr = -5.0; snr <= 25.0; snr += 0.25) {
    const auto chosen = select_mcs(snr, table);
    const double rate = chosen ? chosen->rate_bps : 0.0;
    CHECK(rate >= last);
    last = rate;
  }
  // Table invariant: rates strictly increase with the threshold.
  for (size_t i = 1; i < table.size(); ++i) {
    CHECK(table[i].min_snr_db > table[i - 1].min_snr_db);
    CHECK(table[i].rate_bps > table[i - 1].rate_bps);
  }
  CHECK(table[0].per_threshold == doctest::Approx(0.05));
  CHECK(table[1].per_threshold == doctest::Approx(0.01));
}

TEST_CASE("contact time") {
  CHECK(contact_time_s(100.0, 120.0, 30.0) == doctest::Approx(11.547).epsilon(0.001));
  CHECK(contact_time_s(100.0, 120.0, 60.0) ==
        doctest::Approx(0.5 * contact_time_s(100.0, 120.0, 30.0)));
  CHECK(contact_time_s(100.0, 0.0, 30.0) == 0.0);
}

TEST_CASE("average rate equals the single rate when one MCS always fits") {
  std::vector<McsEntry> flat{{0, McsEntry::Phy::single_carrier, 1e9, -200.0, 4096, 0.01}};
  PassGeometry g;
  const RateStats stats = average_rate(g, LinkParams{}, flat, 1e-3);
  CHECK(stats.average_bps == doctest::Approx(1e9).epsilon(1e-12));
  CHECK(stats.outage_fraction == 0.0);
  CHECK_THROWS_AS(average_rate(g, LinkParams{}, flat, 0.0), std::invalid_argument);
}

TEST_CASE("average rate trends: distance up, beamwidth up -> rate down") {
  const LinkParams p;
  const auto table = default_mcs_table();
  PassGeometry g;
  double last = 1e18;
  for (double d : {50.0, 100.0, 150.0, 200.0}) {
    PassGeometry gg = g;
    gg.bs_road_distance_m = d;
    const double r = average_rate(gg, p, table, 1e-3).average_bps;
    CHECK(r <= last);
    last = r;
  }
  last = 1e18;
  for (double az : {1.5, 3.0, 6.0, 9.0}) {
    PassGeometry gg = g;
    gg.theta_az_deg = az;
    const double r = average_rate(gg, p, table, 1e-3).average_bps;
    CHECK(r <= last);
    last = r;
  }
}

TEST_CASE("beamwidth dominates distance over the studied ranges") {
  const LinkParams p;
  const auto table = default_mcs_table();
  PassGeometry g;
  const double base = average_rate(g, p, table, 1e-3).average_bps;

  PassGeometry wide = g;
  wide.theta_az_deg = 9.0;
  const double sens_az = std::abs(average_rate(wide, p, table, 1e-3).average_bps - base) / base;

  PassGeometry far = g;
  far.bs_road_distance_m = 200.0;
  const double sens_d = std::abs(average_rate(far, p, table, 1e-3).average_bps - base) / base;

  CHECK(sens_az > sens_d);
}

TEST_CASE("outage stays within the 2% budget at the default operating point") {
  const RateStats stats = average_rate(PassGeometry{}, LinkParams{}, default_mcs_table(), 1e-3);
  CHECK(stats.outage_fraction <= 0.02);
  CHECK(stats.average_bps > 0.0);
}

TEST_CASE("integration self-convergence under step refinement") {
  const LinkParams p;
  const auto table = default_mcs_table();
  PassGeometry g;
  const double coarse = average_rate(g, p, table, 2e-3).average_bps;
  const double fine = average_rate(g, p, table, 1e-3).average_bps;
  CHECK(std::abs(coarse - fine) / fine < 0.005);
}

TEST_CASE("db round trips") {
  for (double v : {1e-6, 0.5, 1.0, 3.7, 1e9})
    CHECK(db_to_linear(linear_to_db(v)) == doctest::Approx(v).epsilon(1e-9));
}

TEST_SUITE_END();
