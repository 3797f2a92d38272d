#pragma once

#include <vector>

#include "afc/capacity.hpp"
#include "afc/params.hpp"

namespace afc {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

enum class ProfileShape { Square, Gaussian };

/// Inhomogeneously broadened absorption profile. `width_hz` is the full width
/// for Square and the FWHM for Gaussian; `peak_od` is the optical depth at
/// line centre.
struct InhomogeneousProfile {
    ProfileShape shape{ProfileShape::Square};
    double width_hz{};
    double peak_od{};
};

/// Placement and per-mode efficiency of independent combs across the
/// inhomogeneous profile.
struct SpectralBudget {
    double spacing_hz{};
    std::vector<double> centers_hz;
    std::vector<double> per_mode_od;
    std::vector<double> per_mode_finesse;
    std::vector<double> per_mode_efficiency;
    std::vector<bool> within_fwhm;
    double average_efficiency{};
};

struct SpatialGrid {
    double pitch_m{};
    double area_m2{};
};

/// Minimum centre-to-centre distance between independent combs:
/// 2 (dg + de) + df, where dg/de are the total hyperfine spans and df the
/// prepared feature width.
double min_spectral_spacing(double dg_hz, double de_hz, double df_hz);

/// Number of combs that fit into the profile at the given spacing. For
/// Gaussian profiles the FWHM is used as the budget window and the report
/// carries status "gaussian_fwhm_heuristic".
CapacityReport spectral_capacity(const InhomogeneousProfile& profile, double spacing_hz);

/// Optical depth at detuning f from line centre.
double od_at_detuning(const InhomogeneousProfile& profile, double f_hz);

/// Finesse maximizing afc_echo_efficiency at the given optical depth:
/// coarse grid over [1, 50] followed by golden-section refinement to 1e-6.
double optimal_finesse(double od, Retrieval direction = Retrieval::Backward);

/// Places n_modes comb centres at the minimum spacing, symmetric about line
/// centre (centre first for odd n, straddling for even n), and evaluates each
/// at its optimal finesse.
SpectralBudget spectral_efficiency_budget(const InhomogeneousProfile& profile, double dg_hz,
                                          double de_hz, double df_hz, int n_modes);

/// Square-packed spatial mode count: area / pitch^2.
CapacityReport spatial_capacity(const SpatialGrid& grid);

/// Product of the floored temporal, spectral and spatial counts.
CapacityReport total_budget(const CapacityReport& n_temporal, const CapacityReport& n_spectral,
                            const CapacityReport& n_spatial);

/// Entanglement trial rate of an elementary link of length `link_length_m`:
/// n_modes * c / (refractive_index * link_length_m).
double repeater_trial_rate(double link_length_m, double refractive_index, int n_modes);

}  // namespace afc
