#include <doctest.h>

#include <cmath>
#include <numbers>

#include "afc/gaussian.hpp"
#include "afc/errors.hpp"
#include "oracles.hpp"

using namespace afc;

TEST_CASE("gaussian mode validation") {
    CHECK(validate(GaussianMode{210e-9, 0.0, 1.0}).ok());
    CHECK_FALSE(validate(GaussianMode{0.0, 0.0, 1.0}).ok());
    CHECK_FALSE(validate(GaussianMode{210e-9, 0.0, -0.5}).ok());
}

TEST_CASE("spectral fwhm") {
    CHECK(spectral_fwhm(1e-6) == doctest::Approx(441271.2003053032).epsilon(1e-12));
    CHECK(spectral_fwhm(441.271e-9) == doctest::Approx(1e6).epsilon(1e-3));
    CHECK_THROWS_AS(spectral_fwhm(0.0), InvalidParameter);

    oracle::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        double t = rng.uniform(1e-9, 1e-3);
        CHECK(spectral_fwhm(t) * t ==
              doctest::Approx(2.0 * std::numbers::ln2 / std::numbers::pi).epsilon(1e-14));
    }
}

TEST_CASE("energy fractions at the window edges") {
    CHECK(time_energy_fraction(2.0) == doctest::Approx(0.9814683222).epsilon(1e-9));
    CHECK(time_energy_fraction(2.0 * std::numbers::sqrt2) ==
          doctest::Approx(0.9991322212).epsilon(1e-9));
    CHECK(time_energy_fraction(2.38) == doctest::Approx(0.9949250243).epsilon(1e-9));

    CHECK(spectral_energy_fraction(2.0) == doctest::Approx(0.9991478612).epsilon(1e-9));
    CHECK(spectral_energy_fraction(2.0 * std::numbers::sqrt2) ==
          doctest::Approx(0.9816460136).epsilon(1e-9));
    CHECK(spectral_energy_fraction(2.38) == doctest::Approx(0.9949331917).epsilon(1e-9));

    CHECK_THROWS_AS(time_energy_fraction(0.0), InvalidParameter);
    CHECK_THROWS_AS(spectral_energy_fraction(-1.0), InvalidParameter);
}

TEST_CASE("bandwidth ratio") {
    CHECK(bandwidth_ratio(2.0) == doctest::Approx(2.832725089).epsilon(1e-9));
    CHECK(bandwidth_ratio(2.0 * std::numbers::sqrt2) ==
          doctest::Approx(2.003039119).epsilon(1e-9));
}

TEST_CASE("optimal kappa is the fixed point of the bandwidth ratio") {
    double k = optimal_kappa();
    CHECK(k == doctest::Approx(2.3802206152548113).epsilon(1e-14));
    CHECK(bandwidth_ratio(k) == doctest::Approx(k).epsilon(1e-12));
    CHECK(time_energy_fraction(k) == doctest::Approx(spectral_energy_fraction(k)).epsilon(1e-12));
}

TEST_CASE("fraction curves are monotone and cross once at the optimum") {
    double prev_t = 0.0, prev_s = 2.0;
    for (int i = 0; i <= 100; ++i) {
        double k = 1.5 + (3.5 - 1.5) * i / 100.0;
        double t = time_energy_fraction(k);
        double s = spectral_energy_fraction(k);
        CHECK(t > prev_t);   // increasing toward 1
        CHECK(s < prev_s);   // decreasing
        prev_t = t;
        prev_s = s;
    }
    CHECK(time_energy_fraction(50.0) > 1.0 - 1e-15);

    double crossing = oracle::bisect(
        [](double k) { return time_energy_fraction(k) - spectral_energy_fraction(k); }, 2.0,
        2.0 * std::numbers::sqrt2);
    CHECK(crossing == doctest::Approx(optimal_kappa()).epsilon(1e-9));
}

TEST_CASE("closed forms agree with quadrature to 1e-9") {
    const double fwhm = 1e-6;
    for (double kappa : {2.0, 2.38, optimal_kappa(), 2.0 * std::numbers::sqrt2}) {
        double t_quad = oracle::time_fraction_quadrature(fwhm, kappa * fwhm / 2.0);
        CHECK(std::abs(time_energy_fraction(kappa) - t_quad) < 1e-9);

        // Band half-width Gamma/2 with Gamma = 2.5 / (kappa * T).
        double half_band = 0.5 * 2.5 / (kappa * fwhm);
        double s_quad = oracle::spectral_fraction_quadrature(fwhm, half_band);
        CHECK(std::abs(spectral_energy_fraction(kappa) - s_quad) < 1e-9);
    }
}
