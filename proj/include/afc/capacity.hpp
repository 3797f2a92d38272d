#pragma once

#include "afc/params.hpp"

namespace afc {

/// Smallest usable mode bin for a comb of bandwidth `gamma_hz`:
/// T_m = 2.5 / Gamma.
double mode_bin_from_bandwidth(double gamma_hz);

/// Temporal capacity of a fixed-delay echo memory,
/// N_t = Gamma * delay / 2.5 (equivalently tooth count / 2.5).
CapacityReport fixed_delay_capacity(double gamma_hz, double delay_s);

/// Efficiency factor from optical decoherence over the fixed delay,
/// exp(-4 * delay / T2).
double t2_relative_efficiency(double delay_s, double t2_s);

/// Inverse of t2_relative_efficiency: the delay at which the efficiency
/// factor equals `eta`.
double delay_for_efficiency(double eta, double t2_s);

/// Fixed-delay capacity at a target efficiency factor:
/// N_t = ln(1/eta) * Gamma * T2 / 10.
CapacityReport fixed_delay_capacity_at_efficiency(double eta, double t2_s, double gamma_hz);

/// Population transfer efficiency of a chirped control pulse with flat
/// section T_s, Rabi frequency Omega and chirp span Gamma:
/// 1 - exp(-pi^2 T_s Omega^2 / Gamma). Assumes the adiabatic regime
/// Gamma > Omega; validity outside it is the caller's concern.
double hsh_transfer_efficiency(double ts_s, double omega_hz, double gamma_hz);

/// Flat-section duration that reaches a given transfer exponent
/// (pi^2 T_s Omega^2 / Gamma = exponent): T_s = exponent * Gamma / (pi^2 Omega^2).
/// The default exponent of 4 yields at least 98% transfer.
double hsh_square_duration(double omega_hz, double gamma_hz, double exponent = 4.0);

/// Spin-wave capacity with the control-pulse slot expressed through the
/// Rabi frequency: N = (Gamma*delay - chi*(4/pi^2)*Gamma^2/Omega^2) / 2.5.
/// Negative results clamp to zero with status "control_pulse_dominates".
CapacityReport spin_wave_capacity(double gamma_hz, double delay_s, double omega_hz, double chi);

/// Spin-wave capacity from explicit durations: N = (delay - T_c) / T_m.
/// Throws ControlPulseDominates when the control slot consumes the delay.
CapacityReport spin_wave_capacity_explicit(double delay_s, double tc_s, double tm_s);

/// Spin-wave capacity at a target efficiency factor:
/// N = (ln(1/eta)*Gamma*T2/4 - chi*(4/pi^2)*Gamma^2/Omega^2) / 2.5.
CapacityReport spin_wave_capacity_at_efficiency(double eta, double t2_s, double gamma_hz,
                                                double omega_hz, double chi);

/// Spin-storage efficiency factor from inhomogeneous spin dephasing,
/// exp(-(pi * T_spin * gamma_spin)^2 / (2 ln 2)), normalized to one at
/// zero storage time.
double spin_dephasing_factor(double t_spin_s, double gamma_spin_hz);

enum class Retrieval { Backward, Forward };

/// Echo efficiency of a square-tooth comb with peak optical depth `od` and
/// finesse F. Backward retrieval gives (1 - exp(-od/F))^2 sinc^2(pi/F);
/// forward retrieval (the plain two-level echo) gives
/// (od/F)^2 exp(-od/F) sinc^2(pi/F). sinc is the unnormalized sin(x)/x.
double afc_echo_efficiency(double od, double finesse,
                           Retrieval direction = Retrieval::Backward);

}  // namespace afc
