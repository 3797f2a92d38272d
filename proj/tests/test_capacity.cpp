#include <doctest.h>

#include <cmath>

#include "afc/capacity.hpp"
#include "oracles.hpp"

using namespace afc;

TEST_CASE("mode bin from bandwidth") {
    CHECK(mode_bin_from_bandwidth(5e6) == doctest::Approx(500e-9).epsilon(1e-12));
    CHECK(mode_bin_from_bandwidth(4e6) == doctest::Approx(625e-9).epsilon(1e-12));
    CHECK(mode_bin_from_bandwidth(2.5) == 1.0);
    CHECK_THROWS_AS(mode_bin_from_bandwidth(0.0), InvalidParameter);
    CHECK_THROWS_AS(mode_bin_from_bandwidth(-5e6), InvalidParameter);
}

TEST_CASE("fixed delay capacity") {
    auto pr = fixed_delay_capacity(4e6, 25e-6);
    CHECK(pr.n_continuous == 40.0);
    CHECK(pr.n_floor == 40);
    CHECK(pr.control_term == 0.0);
    CHECK(pr.bandwidth_term == 40.0);

    auto eu = fixed_delay_capacity(5e6, 50.7e-6);
    CHECK(eu.n_continuous == doctest::Approx(101.4).epsilon(1e-12));
    CHECK(eu.n_floor == 101);
    CHECK_FALSE(eu.near_integer_flag);

    // Single-mode boundary: delay = 2.5 / Gamma.
    for (double gamma : {1e5, 4e6, 1e8}) {
        CHECK(fixed_delay_capacity(gamma, 2.5 / gamma).n_continuous ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("fixed delay capacity equals tooth count over 2.5") {
    oracle::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        double gamma = rng.uniform(1e5, 2e7);
        double delay = rng.uniform(1e-6, 1e-4);
        double teeth = gamma * delay;
        CHECK(fixed_delay_capacity(gamma, delay).n_continuous ==
              doctest::Approx(teeth / 2.5).epsilon(1e-14));
    }
}

TEST_CASE("fixed delay capacity is strictly increasing in both arguments") {
    oracle::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        double gamma = rng.uniform(1e5, 2e7);
        double delay = rng.uniform(1e-6, 1e-4);
        double n = fixed_delay_capacity(gamma, delay).n_continuous;
        CHECK(fixed_delay_capacity(gamma * 1.01, delay).n_continuous > n);
        CHECK(fixed_delay_capacity(gamma, delay * 1.01).n_continuous > n);
    }
}

TEST_CASE("t2 relative efficiency") {
    CHECK(t2_relative_efficiency(50e-6, 250e-6) ==
          doctest::Approx(0.44932896411722156).epsilon(1e-14));
    CHECK(t2_relative_efficiency(25e-6, 92e-6) ==
          doctest::Approx(0.33724132002352386).epsilon(1e-14));
    CHECK(t2_relative_efficiency(0.0, 250e-6) == 1.0);
    CHECK_THROWS_AS(t2_relative_efficiency(50e-6, 0.0), InvalidParameter);

    oracle::Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        double delay = rng.uniform(1e-6, 1e-4);
        double t2 = rng.uniform(1e-5, 1e-3);
        double eta = t2_relative_efficiency(delay, t2);
        CHECK(t2_relative_efficiency(delay * 1.01, t2) < eta);  // decreasing in delay
        CHECK(t2_relative_efficiency(delay, t2 * 1.01) > eta);  // increasing in T2
    }
}

TEST_CASE("delay for efficiency inverts the efficiency factor") {
    CHECK(delay_for_efficiency(0.449, 250e-6) ==
          doctest::Approx(5.004577445249267e-05).epsilon(1e-14));
    CHECK(delay_for_efficiency(0.9, 250e-6) ==
          doctest::Approx(6.585032228614147e-06).epsilon(1e-14));
    CHECK(delay_for_efficiency(std::exp(-4.0), 250e-6) ==
          doctest::Approx(250e-6).epsilon(1e-14));
    CHECK_THROWS_AS(delay_for_efficiency(0.0, 250e-6), InvalidParameter);
    CHECK_THROWS_AS(delay_for_efficiency(1.0, 250e-6), InvalidParameter);

    oracle::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        double eta = rng.uniform(0.01, 0.99);
        double t2 = rng.uniform(1e-5, 1e-2);
        CHECK(t2_relative_efficiency(delay_for_efficiency(eta, t2), t2) ==
              doctest::Approx(eta).epsilon(1e-12));
    }
}

TEST_CASE("fixed delay capacity at efficiency") {
    auto thirteen = fixed_delay_capacity_at_efficiency(0.9, 250e-6, 5e6);
    CHECK(thirteen.n_continuous == doctest::Approx(13.170064457228296).epsilon(1e-13));
    CHECK(thirteen.n_floor == 13);
    CHECK_FALSE(thirteen.near_integer_flag);
    CHECK(thirteen.relative_efficiency == 0.9);

    auto twenty_eight = fixed_delay_capacity_at_efficiency(0.8, 250e-6, 5e6);
    CHECK(twenty_eight.n_continuous == doctest::Approx(27.892943914276223).epsilon(1e-13));
    CHECK(twenty_eight.near_integer_flag);
    CHECK(twenty_eight.reported_modes() == 28);

    // At eta = 0.9 the usable fraction of the time-bandwidth product is ~1%.
    oracle::Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        double t2 = rng.uniform(1e-5, 1e-3);
        double gamma = rng.uniform(1e6, 2e7);
        double fraction =
            fixed_delay_capacity_at_efficiency(0.9, t2, gamma).n_continuous / (gamma * t2);
        CHECK(fraction == doctest::Approx(std::log(1.0 / 0.9) / 10.0).epsilon(1e-12));
    }
}

TEST_CASE("capacity-at-efficiency identity with the delay form") {
    oracle::Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        double eta = rng.uniform(0.05, 0.95);
        double t2 = rng.uniform(1e-5, 1e-3);
        double gamma = rng.uniform(1e6, 2e7);
        double via_delay =
            fixed_delay_capacity(gamma, delay_for_efficiency(eta, t2)).n_continuous;
        double direct = fixed_delay_capacity_at_efficiency(eta, t2, gamma).n_continuous;
        CHECK(direct == doctest::Approx(via_delay).epsilon(1e-12));
    }
}

TEST_CASE("hsh transfer efficiency") {
    // Exponent 4 design point.
    double ts = hsh_square_duration(230e3, 1.5e6);
    CHECK(ts == doctest::Approx(1.1492005706125269e-05).epsilon(1e-14));
    CHECK(hsh_transfer_efficiency(ts, 230e3, 1.5e6) ==
          doctest::Approx(1.0 - std::exp(-4.0)).epsilon(1e-12));
    CHECK(hsh_transfer_efficiency(11.5e-6, 230e3, 1.5e6) ==
          doctest::Approx(0.9817352546038064).epsilon(1e-13));
    CHECK(hsh_transfer_efficiency(0.0, 230e3, 1.5e6) == 0.0);
    CHECK(hsh_square_duration(230e3, 1.5e6, 0.0) == 0.0);

    oracle::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        // Draw the transfer exponent directly so eta stays away from the
        // double-precision saturation at 1.
        double omega = rng.uniform(5e4, 5e5);
        double gamma = rng.uniform(1e6, 1e7);
        double e = rng.uniform(0.05, 20.0);
        double t = hsh_square_duration(omega, gamma, e);
        double eta = hsh_transfer_efficiency(t, omega, gamma);
        CHECK(eta >= 0.0);
        CHECK(eta < 1.0);
        CHECK(eta == doctest::Approx(1.0 - std::exp(-e)).epsilon(1e-12));
        CHECK(hsh_transfer_efficiency(t * 1.01, omega, gamma) > eta);
        CHECK(hsh_transfer_efficiency(t, omega * 1.01, gamma) > eta);
        CHECK(hsh_transfer_efficiency(t, omega, gamma * 1.01) < eta);
    }
}

TEST_CASE("spin wave capacity") {
    auto eu = spin_wave_capacity(1.5e6, 25e-6, 230e3, 1.36);
    CHECK(eu.n_continuous == doctest::Approx(5.622523343801783).epsilon(1e-13));
    CHECK(eu.bandwidth_term == doctest::Approx(15.0).epsilon(1e-13));
    CHECK(eu.control_term == doctest::Approx(9.377476656198217).epsilon(1e-13));
    CHECK(eu.status.empty());

    CHECK(spin_wave_capacity(1.5e6, 25e-6, 250e3, 1.36).n_continuous ==
          doctest::Approx(7.062903758193828).epsilon(1e-13));
    CHECK(spin_wave_capacity(4e6, 25e-6, 410e3, 1.36).n_continuous ==
          doctest::Approx(19.014882036337703).epsilon(1e-13));
}

TEST_CASE("spin wave capacity flags a violated adiabatic regime") {
    auto r = spin_wave_capacity(200e3, 25e-6, 230e3, 1.36);  // Gamma below Omega
    CHECK(r.status == "adiabatic_regime_violated");
    CHECK(r.n_continuous > 0.0);
    CHECK(spin_wave_capacity(1.5e6, 25e-6, 230e3, 1.36).status.empty());
}

TEST_CASE("spin wave capacity clamps when the control pulse dominates") {
    auto r = spin_wave_capacity(5e6, 1e-6, 1e5, 1.36);
    CHECK(r.n_continuous == 0.0);
    CHECK(r.n_floor == 0);
    CHECK(r.status == "control_pulse_dominates");
    CHECK(r.bandwidth_term == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r.control_term == doctest::Approx(551.1872390143176).epsilon(1e-12));
}

TEST_CASE("spin wave capacity never exceeds the fixed-delay capacity") {
    oracle::Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        double gamma = rng.uniform(1e6, 1e7);
        double delay = rng.uniform(5e-6, 1e-4);
        double omega = rng.uniform(1e5, 1e6);
        CHECK(spin_wave_capacity(gamma, delay, omega, 1.36).n_continuous <=
              fixed_delay_capacity(gamma, delay).n_continuous);
    }
    // Equality only as the Rabi frequency diverges.
    double fd = fixed_delay_capacity(1.5e6, 25e-6).n_continuous;
    CHECK(spin_wave_capacity(1.5e6, 25e-6, 1e12, 1.36).n_continuous ==
          doctest::Approx(fd).epsilon(1e-9));
}

TEST_CASE("spin wave capacity from explicit durations") {
    auto fifty_four = spin_wave_capacity_explicit(41e-6, 14e-6, 0.5e-6);
    CHECK(fifty_four.n_continuous == 54.0);
    CHECK(fifty_four.n_floor == 54);

    auto thirty_two = spin_wave_capacity_explicit(25e-6, 5e-6, 0.625e-6);
    CHECK(thirty_two.n_continuous == 32.0);

    // Zero-length control pulse reduces to the fixed-delay form.
    CHECK(spin_wave_capacity_explicit(25e-6, 0.0, 0.625e-6).n_continuous ==
          doctest::Approx(40.0).epsilon(1e-13));

    CHECK_THROWS_AS(spin_wave_capacity_explicit(25e-6, 25e-6, 0.625e-6),
                    ControlPulseDominates);
    CHECK_THROWS_AS(spin_wave_capacity_explicit(25e-6, 30e-6, 0.625e-6),
                    ControlPulseDominates);
}

TEST_CASE("spin wave capacity at efficiency matches the delay form") {
    oracle::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        double eta = rng.uniform(0.05, 0.95);
        double t2 = rng.uniform(5e-5, 1e-3);
        double gamma = rng.uniform(1e6, 8e6);
        double omega = rng.uniform(2e5, 1e6);
        double delay = delay_for_efficiency(eta, t2);
        auto via_delay = spin_wave_capacity(gamma, delay, omega, 1.36);
        auto direct = spin_wave_capacity_at_efficiency(eta, t2, gamma, omega, 1.36);
        CHECK(direct.n_continuous ==
              doctest::Approx(via_delay.n_continuous).epsilon(1e-12));
        CHECK(direct.relative_efficiency == eta);
    }

    // The efficiency matching the 25 us / 250 us working point recovers the
    // 5.62-mode result.
    double eta = t2_relative_efficiency(25e-6, 250e-6);
    CHECK(spin_wave_capacity_at_efficiency(eta, 250e-6, 1.5e6, 230e3, 1.36).n_continuous ==
          doctest::Approx(5.622523343801783).epsilon(1e-12));
    // At eta = 0.449 the implied delay is 50 us, not 25 us, so the capacity is
    // the 50-us value.
    CHECK(spin_wave_capacity_at_efficiency(0.449, 250e-6, 1.5e6, 230e3, 1.36).n_continuous ==
          doctest::Approx(20.64998801529738).epsilon(1e-12));
}

TEST_CASE("spin wave capacity at efficiency clamps near unit efficiency") {
    auto r = spin_wave_capacity_at_efficiency(0.999999, 250e-6, 1.5e6, 230e3, 1.36);
    CHECK(r.n_continuous == 0.0);
    CHECK(r.status == "control_pulse_dominates");
}

TEST_CASE("spin dephasing factor") {
    CHECK(spin_dephasing_factor(0.0, 26.3e3) == 1.0);

    double r20 = spin_dephasing_factor(14.1e-6, 16.1e3) / spin_dephasing_factor(14.1e-6, 26.3e3);
    CHECK(r20 * 1.88 == doctest::Approx(3.4674125472254027).epsilon(1e-12));
    double r30 = spin_dephasing_factor(20.7e-6, 16.1e3) / spin_dephasing_factor(20.7e-6, 26.3e3);
    CHECK(r30 * 0.63 == doctest::Approx(2.356758501463311).epsilon(1e-12));

    CHECK_THROWS_AS(spin_dephasing_factor(-1e-6, 26.3e3), InvalidParameter);
    CHECK_THROWS_AS(spin_dephasing_factor(1e-6, 0.0), InvalidParameter);
}

TEST_CASE("echo efficiency") {
    CHECK(afc_echo_efficiency(0.0, 2.0) == 0.0);
    CHECK(afc_echo_efficiency(5.8, 3.0) == doctest::Approx(0.5003528008497937).epsilon(1e-13));
    CHECK(afc_echo_efficiency(5.8, 2.0) == doctest::Approx(0.36191161401930094).epsilon(1e-13));
    CHECK(afc_echo_efficiency(5.8, 4.0, Retrieval::Forward) ==
          doctest::Approx(0.3997599179661339).epsilon(1e-13));

    // Joint limit of deep combs: both factors approach one.
    CHECK(afc_echo_efficiency(1e8, 1e3) > 0.999);

    oracle::Rng rng(37);
    for (int i = 0; i < 200; ++i) {
        double od = rng.uniform(0.0, 40.0);
        double f = rng.uniform(1.0, 30.0);
        double eta = afc_echo_efficiency(od, f);
        CHECK(eta >= 0.0);
        CHECK(eta < 1.0);
        double etaf = afc_echo_efficiency(od, f, Retrieval::Forward);
        CHECK(etaf >= 0.0);
        CHECK(etaf < 1.0);
    }
    CHECK_THROWS_AS(afc_echo_efficiency(-1.0, 2.0), InvalidParameter);
    CHECK_THROWS_AS(afc_echo_efficiency(5.8, 0.5), InvalidParameter);
}

TEST_CASE("echo efficiency has a single interior maximum in finesse") {
    // Scan: strictly rising then strictly falling around the peak.
    for (double od : {2.0, 5.8, 12.0}) {
        int sign_changes = 0;
        double prev = afc_echo_efficiency(od, 1.0);
        bool rising = true;
        for (int i = 1; i <= 2000; ++i) {
            double f = 1.0 + (30.0 - 1.0) * i / 2000.0;
            double v = afc_echo_efficiency(od, f);
            bool now_rising = v > prev;
            if (rising && !now_rising) ++sign_changes;
            if (!rising && now_rising) sign_changes += 100;  // would mean a second maximum
            rising = now_rising;
            prev = v;
        }
        CHECK(sign_changes == 1);
    }
}
