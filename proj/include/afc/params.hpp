#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "afc/errors.hpp"

namespace afc {

/// Comb teeth consumed per temporal mode. Also the tooth count below which
/// the comb cannot hold a full mode.
inline constexpr double kTeethPerMode = 2.5;

/// A continuous mode count this close below the next integer is treated as
/// "one more mode fits" when reporting.
inline constexpr double kNearIntegerWindow = 0.15;

/// Recommended window for the mode-bin-to-FWHM ratio kappa.
inline constexpr double kKappaRecommendedMin = 2.0;
inline constexpr double kKappaRecommendedMax = 2.0 * std::numbers::sqrt2;

enum class PulseShape { Gaussian };

/// Comb parameters. Frequencies are natural frequency (Hz), never angular.
/// The tooth spacing is stored as its reciprocal, the echo delay in seconds,
/// since every formula consumes the delay directly.
struct AfcParams {
    double bandwidth_gamma_hz{};
    double delay_s{};       ///< fixed-delay storage time, reciprocal tooth spacing
    double finesse{1.0};
    double peak_od{0.0};
    double optical_t2_s{};

    double tooth_spacing_hz() const { return 1.0 / delay_s; }
    double tooth_count() const { return bandwidth_gamma_hz * delay_s; }

    static AfcParams from_tooth_spacing(double bandwidth_gamma_hz, double tooth_spacing_hz,
                                        double finesse = 1.0, double peak_od = 0.0,
                                        double optical_t2_s = 0.0) {
        return AfcParams{bandwidth_gamma_hz, 1.0 / tooth_spacing_hz, finesse, peak_od,
                         optical_t2_s};
    }
};

/// Chirped adiabatic control pulse: flat-intensity centre of duration T_s,
/// smooth edges, total allotted slot T_c = chi * T_s.
struct ControlPulseParams {
    double rabi_omega_hz{};
    double square_duration_ts_s{};
    double cutoff_tc_s{};

    double chi() const { return cutoff_tc_s / square_duration_ts_s; }

    static ControlPulseParams from_chi(double rabi_omega_hz, double square_duration_ts_s,
                                       double chi) {
        return ControlPulseParams{rabi_omega_hz, square_duration_ts_s,
                                  chi * square_duration_ts_s};
    }
};

/// Input mode geometry: intensity FWHM T inside a truncated bin T_m = kappa * T.
struct ModeShape {
    double fwhm_t_s{};
    double mode_bin_tm_s{};
    PulseShape shape{PulseShape::Gaussian};

    double kappa() const { return mode_bin_tm_s / fwhm_t_s; }
};

struct SpinParams {
    double spin_linewidth_hz{};     ///< FWHM of the spin transition
    double spin_storage_time_s{};
};

/// Result of a capacity formula. Carries the continuous value, its floor,
/// the two summands where applicable, and a status string for clamped or
/// heuristic results (empty when clean).
struct CapacityReport {
    double n_continuous{};
    std::int64_t n_floor{};
    bool near_integer_flag{};
    double bandwidth_term{};
    double control_term{};
    double relative_efficiency{1.0};
    std::string status;

    /// Practical mode count: the floor, or one more when the continuous value
    /// sits within kNearIntegerWindow below the next integer.
    std::int64_t reported_modes() const { return near_integer_flag ? n_floor + 1 : n_floor; }

    static CapacityReport from_continuous(double n, double bandwidth_term,
                                          double control_term,
                                          double relative_efficiency = 1.0,
                                          std::string status = {});
};

struct ValidationResult {
    std::vector<Violation> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

ValidationResult validate(const AfcParams& p);
ValidationResult validate(const ControlPulseParams& p);
ValidationResult validate(const ModeShape& m);
ValidationResult validate(const SpinParams& s);
ValidationResult validate(const CapacityReport& r);

/// Returns the value unchanged if all invariants hold, otherwise throws
/// InvalidParameter carrying every violation.
template <typename T>
const T& validated(const T& value) {
    ValidationResult r = validate(value);
    if (!r.ok()) throw InvalidParameter(r.errors);
    return value;
}

namespace detail {
std::string format_value(double v);
}

}  // namespace afc
