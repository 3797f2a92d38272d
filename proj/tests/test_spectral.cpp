#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "afc/gaussian.hpp"
#include "afc/spectral.hpp"
#include "oracles.hpp"

using namespace afc;

namespace {

double total_energy_time(const PulseTrain& t) {
    double e = 0.0;
    for (double s : t.samples) e += s * s;
    return e * t.dt();
}

double total_energy_freq(const PowerSpectrum& s) {
    double e = 0.0;
    for (double p : s.power_density) e += p;
    return e * s.resolution_hz;
}

/// Half-power width of the peak nearest f0, by linear interpolation.
double peak_fwhm(const PowerSpectrum& s, double f0) {
    const auto& f = s.frequencies_hz;
    const auto& p = s.power_density;
    std::size_t i0 = 0;
    double best = 1e300;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(f[i] - f0) < best) {
            best = std::abs(f[i] - f0);
            i0 = i;
        }
    }
    // climb to the local top
    while (i0 + 1 < p.size() && p[i0 + 1] > p[i0]) ++i0;
    while (i0 > 0 && p[i0 - 1] > p[i0]) --i0;
    double half = 0.5 * p[i0];
    std::size_t r = i0;
    while (r + 1 < p.size() && p[r] > half) ++r;
    std::size_t l = i0;
    while (l > 0 && p[l] > half) --l;
    double fr = f[r - 1] + (f[r] - f[r - 1]) * (half - p[r - 1]) / (p[r] - p[r - 1]);
    double fl = f[l + 1] + (f[l] - f[l + 1]) * (half - p[l + 1]) / (p[l] - p[l + 1]);
    return fr - fl;
}

}  // namespace

TEST_CASE("fast transform matches the direct DFT") {
    oracle::Rng rng(43);
    for (std::size_t n : {16u, 12u, 60u, 160u}) {
        std::vector<std::complex<double>> x(n);
        for (auto& v : x) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        for (std::size_t nfft : {n, 2 * n, 8 * n}) {
            auto fast = detail::dft(x, nfft);
            auto slow = oracle::direct_dft(x, nfft);
            REQUIRE(fast.size() == slow.size());
            double scale = 0.0;
            for (const auto& v : slow) scale = std::max(scale, std::abs(v));
            for (std::size_t k = 0; k < nfft; ++k) {
                CHECK(std::abs(fast[k] - slow[k]) < 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("synthesize train geometry") {
    PulseTrain t = synthesize_train({1, 1, 1, 1, 1}, 410e-9, 1e-6);
    CHECK(t.span_s() == doctest::Approx(5e-6).epsilon(1e-12));
    CHECK(t.sample_rate_hz == doctest::Approx(32e6).epsilon(1e-12));
    CHECK(t.samples.size() == 160);

    // Zero-amplitude entries give exact zeros in their bins.
    PulseTrain z = synthesize_train({1.0, 0.0, 0.5}, 410e-9, 1e-6);
    for (std::size_t i = 32; i < 64; ++i) CHECK(z.samples[i] == 0.0);
    CHECK(z.samples[16] > 0.0);

    // Hard truncation: a bin's samples contain only its own pulse, never a
    // neighbour's tail.
    PulseTrain pair = synthesize_train({1.0, 1.0}, 410e-9, 1e-6);
    PulseTrain second_only = synthesize_train({0.0, 1.0}, 410e-9, 1e-6);
    for (std::size_t i = 32; i < 64; ++i) CHECK(pair.samples[i] == second_only.samples[i]);

    CHECK_THROWS_AS(synthesize_train({}, 410e-9, 1e-6), InvalidParameter);
    CHECK_THROWS_AS(synthesize_train({1.0}, 410e-9, 1e-6, 10e6), UndersampledTrain);
}

TEST_CASE("power spectrum is Parseval-consistent") {
    oracle::Rng rng(47);
    std::vector<double> amps;
    for (int i = 0; i < 7; ++i) amps.push_back(rng.uniform(0.1, 1.0));
    PulseTrain t = synthesize_train(amps, 400e-9, 1e-6);

    for (int pad : {8, 16}) {
        PowerSpectrum s = power_spectrum(t, pad);
        CHECK(total_energy_freq(s) ==
              doctest::Approx(total_energy_time(t)).epsilon(1e-9));
    }
    // Also exact on a power-of-two override length.
    PowerSpectrum s2 = power_spectrum(t, 8, 2048);
    CHECK(total_energy_freq(s2) == doctest::Approx(total_energy_time(t)).epsilon(1e-9));
}

TEST_CASE("five-pulse train has modulation peaks at the bin rate") {
    PulseTrain t = synthesize_train({1, 1, 1, 1, 1}, 410e-9, 1e-6);
    PowerSpectrum s = power_spectrum(t);
    CHECK(s.resolution_hz == doctest::Approx(25e3).epsilon(1e-12));

    auto peaks = modulation_peaks(s, 2);
    REQUIRE(peaks.size() == 2);
    std::sort(peaks.begin(), peaks.end());
    CHECK(std::abs(peaks[0] + 1e6) <= s.resolution_hz);
    CHECK(std::abs(peaks[1] - 1e6) <= s.resolution_hz);

    CHECK(band_energy_fraction(s, 1.25e6) >= 0.99);
}

TEST_CASE("band energy fraction") {
    PulseTrain t = synthesize_train({1.0}, 1e-6 / 2.38, 1e-6);
    PowerSpectrum s = power_spectrum(t);

    // Truncated optimal-kappa pulse keeps 99.4% inside the comb band.
    CHECK(band_energy_fraction(s, 1.25e6) == doctest::Approx(0.9939405683).epsilon(2e-4));

    // The full grid holds everything.
    double fmax = std::abs(s.frequencies_hz.front());
    CHECK(band_energy_fraction(s, fmax) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(band_energy_fraction(s, 2.0 * fmax), BandExceedsGrid);
    CHECK_THROWS_AS(band_energy_fraction(s, 0.0), InvalidParameter);

    // An all-zero train has no spectral energy to apportion.
    PulseTrain dark = synthesize_train({0.0, 0.0}, 400e-9, 1e-6);
    CHECK_THROWS_AS(band_energy_fraction(power_spectrum(dark), 1e6), InvalidParameter);
}

TEST_CASE("power spectrum argument checks") {
    PulseTrain t = synthesize_train({1.0, 0.5}, 400e-9, 1e-6);
    CHECK_THROWS_AS(power_spectrum(t, 0), InvalidParameter);
    CHECK_THROWS_AS(power_spectrum(t, 8, 16), InvalidParameter);  // shorter than the data
    CHECK_NOTHROW(power_spectrum(t, 1, t.samples.size()));
}

TEST_CASE("single truncated pulse has no modulation sidebands") {
    PulseTrain t = synthesize_train({1.0}, 1e-6 / 2.38, 1e-6);
    PowerSpectrum s = power_spectrum(t);
    CHECK_THROWS_AS(modulation_peaks(s, 1), TooFewPeaks);
    // Truncation ripple does exist below the reporting floor.
    CHECK_NOTHROW(modulation_peaks(s, 1, 1e-6));
}

TEST_CASE("spectrum scales quadratically with amplitude") {
    std::vector<double> amps{0.3, 0.9, 0.6};
    PulseTrain a = synthesize_train(amps, 400e-9, 1e-6);
    for (auto& v : amps) v *= 3.0;
    PulseTrain b = synthesize_train(amps, 400e-9, 1e-6);
    PowerSpectrum sa = power_spectrum(a);
    PowerSpectrum sb = power_spectrum(b);
    for (std::size_t i = 0; i < sa.power_density.size(); i += 37) {
        CHECK(sb.power_density[i] == doctest::Approx(9.0 * sa.power_density[i]).epsilon(1e-9));
    }
}

TEST_CASE("global delay leaves the power density unchanged") {
    std::vector<double> amps{1.0, 0.4, 0.8};
    PulseTrain a = synthesize_train(amps, 400e-9, 1e-6);
    std::vector<double> delayed{0.0, 1.0, 0.4, 0.8};
    PulseTrain b = synthesize_train(delayed, 400e-9, 1e-6);

    // Same transform length so both spectra share a grid.
    PowerSpectrum sa = power_spectrum(a, 8, 2048);
    PowerSpectrum sb = power_spectrum(b, 8, 2048);
    double scale = *std::max_element(sa.power_density.begin(), sa.power_density.end());
    for (std::size_t i = 0; i < sa.power_density.size(); ++i) {
        CHECK(std::abs(sa.power_density[i] - sb.power_density[i]) < 1e-9 * scale);
    }
}

TEST_CASE("sideband sharpness grows with the train length") {
    double w2 = 0, w5 = 0, w10 = 0;
    for (int n : {2, 5, 10}) {
        std::vector<double> amps(n, 1.0);
        PulseTrain t = synthesize_train(amps, 410e-9, 1e-6);
        PowerSpectrum s = power_spectrum(t, 16);
        double w = peak_fwhm(s, 1e6);
        if (n == 2) w2 = w;
        if (n == 5) w5 = w;
        if (n == 10) w10 = w;
    }
    CHECK(w2 > w5);
    CHECK(w5 > w10);
    // Roughly reciprocal in the train length.
    CHECK(w2 / w10 > 3.5);
    CHECK(w2 / w10 < 6.5);
}

TEST_CASE("wide bin recovers the continuous spectral width") {
    // kappa = 8: truncation negligible, so the measured FWHM matches the
    // closed form to better than 1%.
    double fwhm_t = 1e-6;
    PulseTrain t = synthesize_train({1.0}, fwhm_t, 8e-6, 256.0 / 8e-6);
    PowerSpectrum s = power_spectrum(t);
    double measured = peak_fwhm(s, 0.0);
    CHECK(std::abs(measured - spectral_fwhm(fwhm_t)) / spectral_fwhm(fwhm_t) < 0.01);
}

TEST_CASE("random trains keep their energy inside the comb band") {
    oracle::Rng rng(20260810);
    double worst = 1.0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.uniform_int(3, 11);
        std::vector<double> amps;
        for (int i = 0; i < n; ++i) amps.push_back(rng.uniform(0.1, 1.0));
        double kappa = rng.uniform(2.0, 2.0 * std::numbers::sqrt2);
        PulseTrain t = synthesize_train(amps, 1e-6 / kappa, 1e-6);
        PowerSpectrum s = power_spectrum(t);
        worst = std::min(worst, band_energy_fraction(s, 1.25e6));
    }
    CHECK(worst >= 0.98);
}

TEST_CASE("dominant sideband of random trains stays below the bin rate") {
    oracle::Rng rng(99);
    int with_peaks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.uniform_int(2, 11);
        std::vector<double> amps;
        for (int i = 0; i < n; ++i) amps.push_back(rng.uniform(0.1, 1.0));
        double kappa = rng.uniform(2.0, 2.0 * std::numbers::sqrt2);
        PulseTrain t = synthesize_train(amps, 1e-6 / kappa, 1e-6);
        PowerSpectrum s = power_spectrum(t);
        try {
            auto peaks = modulation_peaks(s, 1);
            CHECK(std::abs(peaks[0]) <= 1e6 + s.resolution_hz);
            ++with_peaks;
        } catch (const TooFewPeaks&) {
            // A weakly modulated train can lack sideband maxima altogether
            // (envelope decay beats the shallow interference ripple); that
            // trivially keeps all information inside the band.
        }
    }
    CHECK(with_peaks >= 90);
}
