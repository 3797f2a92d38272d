#pragma once

#include "afc/params.hpp"

namespace afc {

/// Gaussian intensity mode I(t) = A^2 exp(-4 ln2 (t - t0)^2 / T^2) with
/// intensity FWHM T. The field amplitude FWHM is sqrt(2) * T.
struct GaussianMode {
    double fwhm_t_s{};
    double center_s{0.0};
    double amplitude{1.0};
};

ValidationResult validate(const GaussianMode& mode);

/// FWHM of the power spectrum of a Gaussian mode: gamma = 2 ln2 / (pi T).
double spectral_fwhm(double fwhm_t_s);

/// Fraction of the pulse energy inside the bin |t| <= kappa*T/2:
/// erf(kappa * sqrt(ln 2)).
double time_energy_fraction(double kappa);

/// Comb bandwidth over spectral FWHM when the bin satisfies T_m = 2.5/Gamma:
/// Gamma/gamma = 2.5 pi / (2 ln2 kappa).
double bandwidth_ratio(double kappa);

/// Fraction of the (untruncated) power spectrum inside |f| <= Gamma/2:
/// erf(sqrt(ln 2) * bandwidth_ratio(kappa)).
double spectral_energy_fraction(double kappa);

/// The kappa at which the time and spectral fractions coincide,
/// sqrt(2.5 pi / (2 ln2)) ~= 2.38. Fixed point of bandwidth_ratio.
double optimal_kappa();

}  // namespace afc
