#include "afc/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "afc/errors.hpp"

namespace afc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

void require_positive(double kappa) {
    if (!(kappa > 0)) throw InvalidParameter("kappa", kappa, "must be > 0");
}

}  // namespace

ValidationResult validate(const GaussianMode& mode) {
    ValidationResult r;
    if (!(mode.fwhm_t_s > 0))
        r.errors.push_back({"fwhm_t_s", detail::format_value(mode.fwhm_t_s), "must be > 0"});
    if (!(mode.amplitude >= 0))
        r.errors.push_back({"amplitude", detail::format_value(mode.amplitude), "must be >= 0"});
    return r;
}

double spectral_fwhm(double fwhm_t_s) {
    if (!(fwhm_t_s > 0)) throw InvalidParameter("fwhm_t_s", fwhm_t_s, "must be > 0");
    return 2.0 * kLn2 / (kPi * fwhm_t_s);
}

double time_energy_fraction(double kappa) {
    require_positive(kappa);
    return std::erf(kappa * std::sqrt(kLn2));
}

double bandwidth_ratio(double kappa) {
    require_positive(kappa);
    return 2.5 * kPi / (2.0 * kLn2 * kappa);
}

double spectral_energy_fraction(double kappa) {
    require_positive(kappa);
    return std::erf(std::sqrt(kLn2) * bandwidth_ratio(kappa));
}

double optimal_kappa() { return std::sqrt(2.5 * kPi / (2.0 * kLn2)); }

}  // namespace afc
