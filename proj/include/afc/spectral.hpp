#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "afc/errors.hpp"

namespace afc {

/// Minimum sampling density accepted by synthesize_train, in samples per bin.
inline constexpr double kMinSamplesPerBin = 20.0;
/// Default sampling density when the caller passes sample_rate_hz = 0.
inline constexpr double kDefaultSamplesPerBin = 32.0;
/// Default zero-padding factor of power_spectrum.
inline constexpr int kDefaultPadFactor = 8;
/// Local maxima below this fraction of the strongest spectral sample do not
/// count as modulation peaks (filters truncation ripple).
inline constexpr double kDefaultPeakFloor = 0.01;

/// A train of Gaussian field-amplitude pulses, one per bin of duration T_m,
/// each hard-truncated to its bin. Samples are taken at bin-agnostic midpoints
/// (i + 1/2) / sample_rate across the span amplitudes.size() * T_m.
struct PulseTrain {
    std::vector<double> amplitudes;
    double mode_bin_tm_s{};
    double fwhm_t_s{};       ///< intensity FWHM of each pulse
    double sample_rate_hz{};
    std::vector<double> samples;

    double dt() const { return 1.0 / sample_rate_hz; }
    double span_s() const { return static_cast<double>(amplitudes.size()) * mode_bin_tm_s; }
};

/// Two-sided power spectrum on a uniform grid centred at 0. power_density is
/// normalized so that sum(power_density) * resolution equals the time-domain
/// energy sum(|samples|^2) * dt exactly (discrete Parseval).
struct PowerSpectrum {
    std::vector<double> frequencies_hz;
    std::vector<double> power_density;
    double resolution_hz{};
};

PulseTrain synthesize_train(std::vector<double> amplitudes, double fwhm_t_s,
                            double mode_bin_tm_s, double sample_rate_hz = 0.0);

/// Discrete power spectrum of the train, zero-padded to exactly
/// pad_factor * n samples (or to fft_length when nonzero, which must not be
/// smaller than the sample count). Exact-length transforms keep the frequency
/// resolution locked to 1 / (pad_factor * span).
PowerSpectrum power_spectrum(const PulseTrain& train, int pad_factor = kDefaultPadFactor,
                             std::size_t fft_length = 0);

/// Fraction of the total spectral energy inside |f| <= half_width_hz,
/// trapezoidal on the sampled grid.
double band_energy_fraction(const PowerSpectrum& spectrum, double half_width_hz);

/// The `count` strongest local maxima away from DC (|f| > resolution) that
/// exceed min_relative_power of the spectral maximum, as signed frequencies
/// ordered by descending power. Throws TooFewPeaks when fewer qualify.
std::vector<double> modulation_peaks(const PowerSpectrum& spectrum, int count,
                                     double min_relative_power = kDefaultPeakFloor);

namespace detail {
/// DFT of x zero-padded to length n (any n >= x.size()); radix-2 when n is a
/// power of two, Bluestein otherwise.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x,
                                      std::size_t n);
}

}  // namespace afc
