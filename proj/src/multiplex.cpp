#include "afc/multiplex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace afc {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kFinesseGridLo = 1.0;
constexpr double kFinesseGridHi = 50.0;
constexpr int kFinesseGridPoints = 1000;
constexpr double kFinesseTolerance = 1e-6;

}  // namespace

double min_spectral_spacing(double dg_hz, double de_hz, double df_hz) {
    if (!(dg_hz >= 0)) throw InvalidParameter("dg_hz", dg_hz, "must be >= 0");
    if (!(de_hz >= 0)) throw InvalidParameter("de_hz", de_hz, "must be >= 0");
    if (!(df_hz >= 0)) throw InvalidParameter("df_hz", df_hz, "must be >= 0");
    return 2.0 * (dg_hz + de_hz) + df_hz;
}

CapacityReport spectral_capacity(const InhomogeneousProfile& profile, double spacing_hz) {
    if (!(profile.width_hz > 0))
        throw InvalidParameter("width_hz", profile.width_hz, "must be > 0");
    if (!(spacing_hz > 0)) throw InvalidParameter("spacing_hz", spacing_hz, "must be > 0");
    double n = profile.width_hz / spacing_hz;
    std::string status;
    if (profile.shape == ProfileShape::Gaussian) status = "gaussian_fwhm_heuristic";
    return CapacityReport::from_continuous(n, n, 0.0, 1.0, std::move(status));
}

double od_at_detuning(const InhomogeneousProfile& profile, double f_hz) {
    if (profile.shape == ProfileShape::Square) {
        return std::abs(f_hz) <= 0.5 * profile.width_hz ? profile.peak_od : 0.0;
    }
    double u = f_hz / profile.width_hz;
    return profile.peak_od * std::exp(-4.0 * kLn2 * u * u);
}

double optimal_finesse(double od, Retrieval direction) {
    if (!(od > 0)) throw InvalidParameter("od", od, "must be > 0");

    // Coarse bracket over the grid, then golden-section inside one grid cell
    // on each side of the best point.
    double best_f = kFinesseGridLo;
    double best_v = afc_echo_efficiency(od, best_f, direction);
    const double step = (kFinesseGridHi - kFinesseGridLo) / (kFinesseGridPoints - 1);
    for (int i = 1; i < kFinesseGridPoints; ++i) {
        double f = kFinesseGridLo + step * i;
        double v = afc_echo_efficiency(od, f, direction);
        if (v > best_v) {
            best_v = v;
            best_f = f;
        }
    }
    double lo = std::max(kFinesseGridLo, best_f - step);
    double hi = std::min(kFinesseGridHi, best_f + step);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = afc_echo_efficiency(od, x1, direction);
    double f2 = afc_echo_efficiency(od, x2, direction);
    while (b - a > kFinesseTolerance) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = afc_echo_efficiency(od, x2, direction);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = afc_echo_efficiency(od, x1, direction);
        }
    }
    return 0.5 * (a + b);
}

SpectralBudget spectral_efficiency_budget(const InhomogeneousProfile& profile, double dg_hz,
                                          double de_hz, double df_hz, int n_modes) {
    if (n_modes < 1) throw InvalidParameter("n_modes", n_modes, "must be >= 1");
    if (!(profile.width_hz > 0))
        throw InvalidParameter("width_hz", profile.width_hz, "must be > 0");
    if (!(profile.peak_od >= 0))
        throw InvalidParameter("peak_od", profile.peak_od, "must be >= 0");

    SpectralBudget budget;
    budget.spacing_hz = min_spectral_spacing(dg_hz, de_hz, df_hz);

    // Fill outward from line centre where the optical depth is highest.
    budget.centers_hz.reserve(static_cast<std::size_t>(n_modes));
    if (n_modes % 2 == 1) {
        for (int k = 0; k <= n_modes / 2; ++k) {
            budget.centers_hz.push_back(budget.spacing_hz * k);
            if (k > 0) budget.centers_hz.push_back(-budget.spacing_hz * k);
        }
    } else {
        for (int k = 0; k < n_modes / 2; ++k) {
            double offset = budget.spacing_hz * (k + 0.5);
            budget.centers_hz.push_back(offset);
            budget.centers_hz.push_back(-offset);
        }
    }
    std::sort(budget.centers_hz.begin(), budget.centers_hz.end());

    double sum = 0.0;
    for (double center : budget.centers_hz) {
        double od = od_at_detuning(profile, center);
        double finesse = 1.0;
        double eff = 0.0;
        if (od > 0) {
            finesse = optimal_finesse(od);
            eff = afc_echo_efficiency(od, finesse);
        }
        budget.per_mode_od.push_back(od);
        budget.per_mode_finesse.push_back(finesse);
        budget.per_mode_efficiency.push_back(eff);
        budget.within_fwhm.push_back(std::abs(center) <= 0.5 * profile.width_hz);
        sum += eff;
    }
    budget.average_efficiency = sum / static_cast<double>(n_modes);
    return budget;
}

CapacityReport spatial_capacity(const SpatialGrid& grid) {
    if (!(grid.pitch_m > 0)) throw InvalidParameter("pitch_m", grid.pitch_m, "must be > 0");
    if (!(grid.area_m2 > 0)) throw InvalidParameter("area_m2", grid.area_m2, "must be > 0");
    double n = grid.area_m2 / (grid.pitch_m * grid.pitch_m);
    return CapacityReport::from_continuous(n, n, 0.0);
}

CapacityReport total_budget(const CapacityReport& n_temporal, const CapacityReport& n_spectral,
                            const CapacityReport& n_spatial) {
    double n = static_cast<double>(n_temporal.n_floor) *
               static_cast<double>(n_spectral.n_floor) *
               static_cast<double>(n_spatial.n_floor);
    return CapacityReport::from_continuous(n, n, 0.0);
}

double repeater_trial_rate(double link_length_m, double refractive_index, int n_modes) {
    if (!(link_length_m > 0))
        throw InvalidParameter("link_length_m", link_length_m, "must be > 0");
    if (!(refractive_index > 0))
        throw InvalidParameter("refractive_index", refractive_index, "must be > 0");
    if (n_modes < 1) throw InvalidParameter("n_modes", n_modes, "must be >= 1");
    return static_cast<double>(n_modes) * kSpeedOfLight / (refractive_index * link_length_m);
}

}  // namespace afc
