#include "afc/capacity.hpp"

#include <cmath>
#include <numbers>

namespace afc {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

/// chi * (4/pi^2) * Gamma^2 / Omega^2, the control-pulse slot in units of
/// comb teeth.
double control_teeth(double gamma_hz, double omega_hz, double chi) {
    double ratio = gamma_hz / omega_hz;
    return chi * (4.0 / (kPi * kPi)) * ratio * ratio;
}

CapacityReport spin_wave_report(double bandwidth_teeth, double gamma_hz, double omega_hz,
                                double chi, double relative_efficiency) {
    double band = bandwidth_teeth / kTeethPerMode;
    double ctrl = control_teeth(gamma_hz, omega_hz, chi) / kTeethPerMode;
    double n = band - ctrl;
    std::string status;
    if (n < 0) {
        n = 0.0;
        status = "control_pulse_dominates";
    } else if (gamma_hz <= omega_hz) {
        // The transfer model assumes a chirp span well above the Rabi
        // frequency; outside that regime the control term is unreliable.
        status = "adiabatic_regime_violated";
    }
    return CapacityReport::from_continuous(n, band, ctrl, relative_efficiency,
                                           std::move(status));
}

}  // namespace

double mode_bin_from_bandwidth(double gamma_hz) {
    if (!(gamma_hz > 0)) throw InvalidParameter("gamma_hz", gamma_hz, "must be > 0");
    return kTeethPerMode / gamma_hz;
}

CapacityReport fixed_delay_capacity(double gamma_hz, double delay_s) {
    if (!(gamma_hz > 0)) throw InvalidParameter("gamma_hz", gamma_hz, "must be > 0");
    if (!(delay_s > 0)) throw InvalidParameter("delay_s", delay_s, "must be > 0");
    double n = gamma_hz * delay_s / kTeethPerMode;
    return CapacityReport::from_continuous(n, n, 0.0);
}

double t2_relative_efficiency(double delay_s, double t2_s) {
    if (!(delay_s >= 0)) throw InvalidParameter("delay_s", delay_s, "must be >= 0");
    if (!(t2_s > 0)) throw InvalidParameter("t2_s", t2_s, "must be > 0");
    return std::exp(-4.0 * delay_s / t2_s);
}

double delay_for_efficiency(double eta, double t2_s) {
    if (!(eta > 0 && eta < 1)) throw InvalidParameter("eta", eta, "must lie in (0, 1)");
    if (!(t2_s > 0)) throw InvalidParameter("t2_s", t2_s, "must be > 0");
    return 0.25 * t2_s * std::log(1.0 / eta);
}

CapacityReport fixed_delay_capacity_at_efficiency(double eta, double t2_s, double gamma_hz) {
    if (!(eta > 0 && eta < 1)) throw InvalidParameter("eta", eta, "must lie in (0, 1)");
    if (!(t2_s > 0)) throw InvalidParameter("t2_s", t2_s, "must be > 0");
    if (!(gamma_hz > 0)) throw InvalidParameter("gamma_hz", gamma_hz, "must be > 0");
    double n = std::log(1.0 / eta) * gamma_hz * t2_s / 10.0;
    return CapacityReport::from_continuous(n, n, 0.0, eta);
}

double hsh_transfer_efficiency(double ts_s, double omega_hz, double gamma_hz) {
    if (!(ts_s >= 0)) throw InvalidParameter("ts_s", ts_s, "must be >= 0");
    if (!(omega_hz > 0)) throw InvalidParameter("omega_hz", omega_hz, "must be > 0");
    if (!(gamma_hz > 0)) throw InvalidParameter("gamma_hz", gamma_hz, "must be > 0");
    return 1.0 - std::exp(-kPi * kPi * ts_s * omega_hz * omega_hz / gamma_hz);
}

double hsh_square_duration(double omega_hz, double gamma_hz, double exponent) {
    if (!(omega_hz > 0)) throw InvalidParameter("omega_hz", omega_hz, "must be > 0");
    if (!(gamma_hz > 0)) throw InvalidParameter("gamma_hz", gamma_hz, "must be > 0");
    if (!(exponent >= 0)) throw InvalidParameter("exponent", exponent, "must be >= 0");
    return exponent * gamma_hz / (kPi * kPi * omega_hz * omega_hz);
}

CapacityReport spin_wave_capacity(double gamma_hz, double delay_s, double omega_hz, double chi) {
    if (!(gamma_hz > 0)) throw InvalidParameter("gamma_hz", gamma_hz, "must be > 0");
    if (!(delay_s > 0)) throw InvalidParameter("delay_s", delay_s, "must be > 0");
    if (!(omega_hz > 0)) throw InvalidParameter("omega_hz", omega_hz, "must be > 0");
    if (!(chi >= 1)) throw InvalidParameter("chi", chi, "must be >= 1");
    return spin_wave_report(gamma_hz * delay_s, gamma_hz, omega_hz, chi, 1.0);
}

CapacityReport spin_wave_capacity_explicit(double delay_s, double tc_s, double tm_s) {
    if (!(delay_s > 0)) throw InvalidParameter("delay_s", delay_s, "must be > 0");
    if (!(tc_s >= 0)) throw InvalidParameter("tc_s", tc_s, "must be >= 0");
    if (!(tm_s > 0)) throw InvalidParameter("tm_s", tm_s, "must be > 0");
    if (tc_s >= delay_s) {
        throw ControlPulseDominates("control slot " + detail::format_value(tc_s) +
                                    " s consumes the whole delay of " +
                                    detail::format_value(delay_s) + " s");
    }
    double band = delay_s / tm_s;
    double ctrl = tc_s / tm_s;
    return CapacityReport::from_continuous(band - ctrl, band, ctrl);
}

CapacityReport spin_wave_capacity_at_efficiency(double eta, double t2_s, double gamma_hz,
                                                double omega_hz, double chi) {
    if (!(eta > 0 && eta < 1)) throw InvalidParameter("eta", eta, "must lie in (0, 1)");
    if (!(t2_s > 0)) throw InvalidParameter("t2_s", t2_s, "must be > 0");
    if (!(gamma_hz > 0)) throw InvalidParameter("gamma_hz", gamma_hz, "must be > 0");
    if (!(omega_hz > 0)) throw InvalidParameter("omega_hz", omega_hz, "must be > 0");
    if (!(chi >= 1)) throw InvalidParameter("chi", chi, "must be >= 1");
    double bandwidth_teeth = std::log(1.0 / eta) * gamma_hz * t2_s / 4.0;
    return spin_wave_report(bandwidth_teeth, gamma_hz, omega_hz, chi, eta);
}

double spin_dephasing_factor(double t_spin_s, double gamma_spin_hz) {
    if (!(t_spin_s >= 0)) throw InvalidParameter("t_spin_s", t_spin_s, "must be >= 0");
    if (!(gamma_spin_hz > 0))
        throw InvalidParameter("gamma_spin_hz", gamma_spin_hz, "must be > 0");
    double x = kPi * t_spin_s * gamma_spin_hz;
    return std::exp(-x * x / (2.0 * std::numbers::ln2));
}

double afc_echo_efficiency(double od, double finesse, Retrieval direction) {
    if (!(od >= 0)) throw InvalidParameter("od", od, "must be >= 0");
    if (!(finesse >= 1)) throw InvalidParameter("finesse", finesse, "must be >= 1");
    double d_eff = od / finesse;
    double dephase = sinc(kPi / finesse);
    dephase *= dephase;
    if (direction == Retrieval::Backward) {
        double absorb = 1.0 - std::exp(-d_eff);
        return absorb * absorb * dephase;
    }
    return d_eff * d_eff * std::exp(-d_eff) * dephase;
}

}  // namespace afc
