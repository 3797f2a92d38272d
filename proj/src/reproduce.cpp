#include "afc/reproduce.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>

#include "afc/capacity.hpp"
#include "afc/gaussian.hpp"
#include "afc/json_io.hpp"
#include "afc/materials.hpp"
#include "afc/multiplex.hpp"
#include "afc/optimize.hpp"
#include "afc/spectral.hpp"

namespace afc {

namespace {

struct CaseDef {
    const char* name;
    const char* description;
    double paper_value;
    double tolerance;
    const char* note;
    std::function<double()> compute;
};

double train_modulation_peak_hz() {
    PulseTrain train = synthesize_train({1, 1, 1, 1, 1}, 410e-9, 1e-6);
    PowerSpectrum spectrum = power_spectrum(train);
    auto peaks = modulation_peaks(spectrum, 2);
    return std::max(peaks[0], peaks[1]);
}

double truncated_gaussian_band_fraction() {
    PulseTrain train = synthesize_train({1.0}, 1e-6 / 2.38, 1e-6);
    PowerSpectrum spectrum = power_spectrum(train);
    return band_energy_fraction(spectrum, 1.25e6);
}

double dephasing_rescaled_percent(double t_spin_s, double measured_percent) {
    double improved = spin_dephasing_factor(t_spin_s, 16.1e3);
    double current = spin_dephasing_factor(t_spin_s, 26.3e3);
    return measured_percent * improved / current;
}

const std::vector<CaseDef>& case_table() {
    static const std::vector<CaseDef> cases = {
        {"pr-fixed-delay", "fixed-delay capacity, 4 MHz x 25 us", 40.0, 1e-9, "",
         [] { return fixed_delay_capacity(4e6, 25e-6).n_continuous; }},
        {"eu-fixed-delay", "fixed-delay capacity, 5 MHz x 50.7 us", 100.0, 1.5,
         "formula value 101.4 (floor 101); the experiment stored 100 modes",
         [] { return fixed_delay_capacity(5e6, 50.7e-6).n_continuous; }},
        {"eu-eta-t2", "T2 efficiency factor at 50 us delay, T2 = 250 us", 0.45, 0.005, "",
         [] { return t2_relative_efficiency(50e-6, 250e-6); }},
        {"pr-eta-t2", "T2 efficiency factor at 25 us delay, T2 = 92 us", 0.34, 0.01, "",
         [] { return t2_relative_efficiency(25e-6, 92e-6); }},
        {"eu-13modes", "capacity floor at eta = 0.9, T2 = 250 us, 5 MHz", 13.0, 0.5, "",
         [] {
             return static_cast<double>(
                 fixed_delay_capacity_at_efficiency(0.9, 250e-6, 5e6).n_floor);
         }},
        {"eu-28modes", "reported capacity at eta = 0.8, T2 = 250 us, 5 MHz", 28.0, 0.5,
         "continuous value 27.89 reports as 28 via the near-integer rule",
         [] {
             return static_cast<double>(
                 fixed_delay_capacity_at_efficiency(0.8, 250e-6, 5e6).reported_modes());
         }},
        {"hsh-transfer-98", "transfer efficiency at exponent 4", 0.98, 0.002,
         "the design point guarantees at least 98%",
         [] { return 1.0 - std::exp(-4.0); }},
        {"eu-hsh-ts", "flat-section duration (us) for 230 kHz Rabi, 1.5 MHz span", 11.0, 0.55,
         "experimentally optimized pulse used 11 us; agreement within 5%",
         [] { return hsh_square_duration(230e3, 1.5e6) * 1e6; }},
        {"eu-hsh-tc", "control slot (us) at chi = 1.36", 15.0, 0.75,
         "experimentally optimized pulse used 15 us; agreement within 5%",
         [] { return 1.36 * hsh_square_duration(230e3, 1.5e6) * 1e6; }},
        {"eu-spinwave", "spin-wave capacity, 1.5 MHz, 25 us, 230 kHz, chi 1.36", 5.6, 0.05, "",
         [] { return spin_wave_capacity(1.5e6, 25e-6, 230e3, 1.36).n_continuous; }},
        {"eu-spinwave-250k", "spin-wave capacity with 250 kHz Rabi", 7.1, 0.1, "",
         [] { return spin_wave_capacity(1.5e6, 25e-6, 250e3, 1.36).n_continuous; }},
        {"eu-spinwave-explicit", "spin-wave capacity from durations 41/14/0.5 us", 54.0, 1e-9,
         "", [] { return spin_wave_capacity_explicit(41e-6, 14e-6, 0.5e-6).n_continuous; }},
        {"pr-spinwave", "spin-wave capacity, 4 MHz, 25 us, 410 kHz, chi 1.36", 19.0, 0.2, "",
         [] { return spin_wave_capacity(4e6, 25e-6, 410e3, 1.36).n_continuous; }},
        {"pr-spinwave-explicit", "spin-wave capacity from durations 25/5/0.625 us", 32.0, 1e-9,
         "", [] { return spin_wave_capacity_explicit(25e-6, 5e-6, 0.625e-6).n_continuous; }},
        {"echo-efficiency-optimum", "best two-level echo efficiency at od = 5.8", 0.401, 0.002,
         "forward retrieval; the published optimum for the measured 41.3% echo",
         [] {
             double f = optimal_finesse(5.8, Retrieval::Forward);
             return afc_echo_efficiency(5.8, f, Retrieval::Forward);
         }},
        {"pr-dephasing-20modes", "rescaled 20-mode efficiency (%) at 16.1 kHz spin width", 3.5,
         0.1, "1.88% measured at 26.3 kHz",
         [] { return dephasing_rescaled_percent(14.1e-6, 1.88); }},
        {"pr-dephasing-30modes", "rescaled 30-mode efficiency (%) at 16.1 kHz spin width", 2.4,
         0.1, "0.63% measured at 26.3 kHz",
         [] { return dephasing_rescaled_percent(20.7e-6, 0.63); }},
        {"kappa-optimum", "equal-energy-fraction kappa", 2.38, 0.005, "",
         [] { return optimal_kappa(); }},
        {"kappa2-time-energy", "time energy fraction at kappa = 2", 0.981, 5e-4, "",
         [] { return time_energy_fraction(2.0); }},
        {"kappa2sqrt2-time-energy", "time energy fraction at kappa = 2*sqrt(2)", 0.999, 5e-4,
         "", [] { return time_energy_fraction(2.0 * std::numbers::sqrt2); }},
        {"kappa238-time-energy", "time energy fraction at kappa = 2.38", 0.995, 5e-4, "",
         [] { return time_energy_fraction(2.38); }},
        {"kappa2-spectral-energy", "spectral energy fraction at kappa = 2", 0.999, 5e-4, "",
         [] { return spectral_energy_fraction(2.0); }},
        {"kappa2sqrt2-spectral-energy", "spectral energy fraction at kappa = 2*sqrt(2)", 0.981,
         1e-3, "published value rounds the bandwidth ratio to 2; the exact ratio "
               "2.003 gives 0.9816",
         [] { return spectral_energy_fraction(2.0 * std::numbers::sqrt2); }},
        {"kappa238-spectral-energy", "spectral energy fraction at kappa = 2.38", 0.995, 5e-4,
         "", [] { return spectral_energy_fraction(2.38); }},
        {"train-modulation-peak", "modulation peak of the 5-pulse train (Hz)", 1e6, 25e3,
         "tolerance is one frequency bin at pad factor 8",
         [] { return train_modulation_peak_hz(); }},
        {"trunc-gaussian-band", "band energy of a truncated kappa = 2.38 pulse", 0.994, 0.002,
         "", [] { return truncated_gaussian_band_fraction(); }},
        {"pr-min-spacing", "minimum comb spacing for Pr (Hz)", 92e6, 0.5e6, "",
         [] { return min_spectral_spacing(36.9e6, 0.0, 18e6); }},
        {"eu-spectral-modes", "spectral mode count for 151Eu", 3.0, 0.5, "",
         [] {
             InhomogeneousProfile p{ProfileShape::Square, 1.6e9, 0.0};
             return static_cast<double>(spectral_capacity(p, 521e6).n_floor);
         }},
        {"spatial-62", "spatial modes per mm^2 at 127 um pitch", 62.0, 0.5, "",
         [] { return spatial_capacity({127e-6, 1e-6}).n_continuous; }},
        {"rate-2khz", "single-mode trial rate over 100 km (Hz)", 2000.0, 20.0, "",
         [] { return repeater_trial_rate(100e3, 1.5, 1); }},
        {"optimal-bandwidth-sw", "capacity-maximizing bandwidth (Hz), 620 kHz Rabi, 25 us",
         8.72e6, 87.2e3, "",
         [] {
             return optimal_bandwidth_sw(620e3, 25e-6, 1.36,
                                         std::numeric_limits<double>::infinity());
         }},
        {"eu-t2-pe-3.7k", "photon-echo coherence time at 3.7 K (us)", 707.0, 1e-9, "",
         [] {
             return t2_lookup(builtin_material("Eu151_YSO"), 3.7, CoherenceKind::PhotonEcho)
                        .t2_s *
                    1e6;
         }},
        {"eu-t2-afc-6.6k", "comb coherence time at 6.6 K (us)", 140.0, 1e-9, "",
         [] {
             return t2_lookup(builtin_material("Eu151_YSO"), 6.6, CoherenceKind::Afc).t2_s *
                    1e6;
         }},
        {"total-budget", "temporal x spectral x spatial budget (100, 3, 62)", 18600.0, 1e-9,
         "",
         [] {
             auto t = fixed_delay_capacity(5e6, 50e-6);   // 100
             InhomogeneousProfile p{ProfileShape::Square, 1.6e9, 0.0};
             auto f = spectral_capacity(p, 521e6);        // floor 3
             auto s = spatial_capacity({127e-6, 1e-6});   // floor 62
             return total_budget(t, f, s).n_continuous;
         }},
    };
    return cases;
}

ReproCase make_result(const CaseDef& def) {
    ReproCase r;
    r.name = def.name;
    r.description = def.description;
    r.computed = def.compute();
    r.paper_value = def.paper_value;
    r.tolerance = def.tolerance;
    r.note = def.note;
    return r;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io_error", "cannot write " + path);
    out << text;
}

}  // namespace

bool ReproCase::pass() const { return std::abs(computed - paper_value) <= tolerance; }

std::vector<std::string> repro_case_names() {
    std::vector<std::string> names;
    names.reserve(case_table().size());
    for (const auto& def : case_table()) names.emplace_back(def.name);
    return names;
}

ReproCase run_repro_case(const std::string& name) {
    for (const auto& def : case_table()) {
        if (name == def.name) return make_result(def);
    }
    throw UnknownCase(name);
}

std::vector<ReproCase> run_all_repro_cases() {
    std::vector<ReproCase> out;
    out.reserve(case_table().size());
    for (const auto& def : case_table()) out.push_back(make_result(def));
    return out;
}

std::vector<std::string> write_figure_tables(const std::string& directory) {
    std::vector<std::string> written;
    auto path = [&](const char* file) { return directory + "/" + file; };

    {
        PulseTrain train = synthesize_train({1, 1, 1, 1, 1}, 410e-9, 1e-6);
        PowerSpectrum spectrum = power_spectrum(train);
        std::string csv = "frequency_hz,power_density\n";
        for (std::size_t i = 0; i < spectrum.frequencies_hz.size(); ++i) {
            csv += io::format_number(spectrum.frequencies_hz[i]);
            csv += ',';
            csv += io::format_number(spectrum.power_density[i]);
            csv += '\n';
        }
        write_text(path("pulse_train_spectrum.csv"), csv);
        written.emplace_back("pulse_train_spectrum.csv");
    }

    auto capacity_map = [&](double gamma_hz, const char* file) {
        SweepSpec spec;
        spec.target = "fixed_delay_capacity_at_efficiency";
        spec.axes = {{"eta", 0.5, 0.95, 10}, {"t2_s", 50e-6, 1e-3, 20}};
        spec.fixed = {{"gamma_hz", gamma_hz}};
        write_text(path(file), io::sweep_table_to_csv(run_sweep(spec)));
        written.emplace_back(file);
    };
    capacity_map(5e6, "capacity_map_5mhz.csv");
    capacity_map(15e6, "capacity_map_15mhz.csv");

    {
        SweepSpec spec;
        spec.target = "spin_wave_capacity";
        spec.axes = {{"delay_s", 10e-6, 50e-6, 5}, {"gamma_hz", 0.5e6, 20e6, 40}};
        spec.fixed = {{"omega_hz", 620e3}, {"chi", 1.36}};
        write_text(path("capacity_vs_bandwidth.csv"),
                   io::sweep_table_to_csv(run_sweep(spec)));
        written.emplace_back("capacity_vs_bandwidth.csv");
    }

    {
        std::string csv = "peak_od,mode_index,center_hz,od,finesse,efficiency,within_fwhm\n";
        std::string avg = "peak_od,n_modes,average_efficiency\n";
        for (double d0 : {5.0, 10.0, 20.0}) {
            InhomogeneousProfile profile{ProfileShape::Gaussian, 10e9, d0};
            SpectralBudget budget = spectral_efficiency_budget(profile, 36.9e6, 0.0, 18e6, 109);
            for (std::size_t i = 0; i < budget.centers_hz.size(); ++i) {
                csv += io::format_number(d0);
                csv += ',' + std::to_string(i);
                csv += ',' + io::format_number(budget.centers_hz[i]);
                csv += ',' + io::format_number(budget.per_mode_od[i]);
                csv += ',' + io::format_number(budget.per_mode_finesse[i]);
                csv += ',' + io::format_number(budget.per_mode_efficiency[i]);
                csv += budget.within_fwhm[i] ? ",true\n" : ",false\n";
            }
            for (int n = 1; n <= 120; ++n) {
                SpectralBudget b = spectral_efficiency_budget(profile, 36.9e6, 0.0, 18e6, n);
                avg += io::format_number(d0);
                avg += ',' + std::to_string(n);
                avg += ',' + io::format_number(b.average_efficiency);
                avg += '\n';
            }
        }
        write_text(path("budget_efficiency_profile.csv"), csv);
        written.emplace_back("budget_efficiency_profile.csv");
        write_text(path("budget_average_efficiency.csv"), avg);
        written.emplace_back("budget_average_efficiency.csv");
    }

    {
        MaterialRecord eu = builtin_material("Eu151_YSO");
        std::string csv = "temperature_k,pe_t2_us,pe_err_us,afc_t2_us,afc_err_us\n";
        for (const auto& p : eu.t2_table) {
            csv += io::format_number(p.temperature_k);
            csv += ',' + io::format_number(p.pe_t2_s * 1e6);
            csv += ',' + io::format_number(p.pe_err_s * 1e6);
            csv += ',';
            if (p.afc_t2_s) csv += io::format_number(*p.afc_t2_s * 1e6);
            csv += ',';
            if (p.afc_err_s) csv += io::format_number(*p.afc_err_s * 1e6);
            csv += '\n';
        }
        write_text(path("coherence_times.csv"), csv);
        written.emplace_back("coherence_times.csv");
    }

    return written;
}

}  // namespace afc
