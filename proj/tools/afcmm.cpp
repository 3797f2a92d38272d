// Command-line front end: single-shot capacity numbers, spectra, sweeps,
// multiplexing budgets and the paper-anchor reproduction table.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afc/capacity.hpp"
#include "afc/json_io.hpp"
#include "afc/materials.hpp"
#include "afc/multiplex.hpp"
#include "afc/optimize.hpp"
#include "afc/reproduce.hpp"
#include "afc/spectral.hpp"

namespace {

using afc::io::json;

/// Parse-and-reformat so JSON output carries at most 6 significant digits.
double round6(double v) { return std::strtod(afc::io::format_number(v).c_str(), nullptr); }

json report_json(const afc::CapacityReport& r) {
    json j = afc::io::to_json(r);
    for (auto& [key, value] : j.items()) {
        if (value.is_number_float()) value = round6(value.get<double>());
    }
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw afc::Error("io_error", "cannot write " + path);
    out << text;
}

std::vector<double> parse_amplitudes(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::strtod(item.c_str(), nullptr));
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw afc::Error("io_error", "cannot read " + path);
    return json::parse(in);
}

/// Fill a value from the config object unless its flag was given explicitly.
void config_fill(const json& config, const std::string& key, const CLI::Option* flag,
                 double& value) {
    if (flag->count() || !config.contains(key)) return;
    if (!config.at(key).is_number())
        throw afc::InvalidParameter(key, 0.0, "must be a number");
    value = config.at(key).get<double>();
}

json repro_case_json(const afc::ReproCase& r) {
    json j{{"case", r.name},
           {"description", r.description},
           {"computed", round6(r.computed)},
           {"paper_value", round6(r.paper_value)},
           {"tolerance", round6(r.tolerance)},
           {"pass", r.pass()}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

struct SpectrumArgs {
    std::string amplitudes = "1";
    double fwhm_t_s{};
    double mode_bin_s{};
    double sample_rate_hz{};
    int pad_factor = afc::kDefaultPadFactor;
    std::string out;
};

struct MultiplexArgs {
    std::string shape = "gaussian";
    double width_hz{};
    double peak_od{};
    double dg_hz{};
    double de_hz{};
    double df_hz{};
    int n_modes = 1;
    std::string out;
};

int run(int argc, char** argv) {
    CLI::App app{"Multimode-capacity toolkit for comb-based quantum memories"};
    app.require_subcommand(1);

    // capacity: fixed-delay form or efficiency form. A JSON config file in the
    // shared field schema supplies defaults; explicit flags override it.
    double gamma_hz = 0, delay_s = 0, t2_s = 0, eta = 0, omega_hz = 0, chi = 1.36;
    double tc_s = -1, tm_s = 0;
    std::string config_path;
    auto* capacity = app.add_subcommand("capacity", "Fixed-delay temporal capacity");
    auto* cap_gamma = capacity->add_option("--gamma-hz", gamma_hz, "comb bandwidth (Hz)");
    auto* cap_delay = capacity->add_option("--delay-s", delay_s, "fixed delay 1/spacing (s)");
    auto* cap_eta = capacity->add_option("--eta", eta, "target efficiency factor in (0,1)");
    auto* cap_t2 = capacity->add_option("--t2-s", t2_s, "optical coherence time (s)");
    auto* cap_cfg = capacity->add_option("--config", config_path,
                                         "JSON parameter file (bandwidth_gamma_hz, delay_s, ...)");
    capacity->callback([&] {
        bool have_delay = cap_delay->count() > 0;
        bool have_t2 = cap_t2->count() > 0;
        if (cap_cfg->count()) {
            json cfg = load_json_file(config_path);
            config_fill(cfg, "bandwidth_gamma_hz", cap_gamma, gamma_hz);
            config_fill(cfg, "delay_s", cap_delay, delay_s);
            config_fill(cfg, "optical_t2_s", cap_t2, t2_s);
            have_delay = have_delay || cfg.contains("delay_s");
            have_t2 = have_t2 || cfg.contains("optical_t2_s");
        } else if (!cap_gamma->count()) {
            throw CLI::RequiredError("--gamma-hz");
        }
        if (cap_eta->count()) {
            if (!have_t2) throw CLI::RequiredError("--t2-s");
            emit(report_json(afc::fixed_delay_capacity_at_efficiency(eta, t2_s, gamma_hz)));
        } else if (have_delay) {
            emit(report_json(afc::fixed_delay_capacity(gamma_hz, delay_s)));
        } else {
            throw CLI::RequiredError("--delay-s or --eta/--t2-s");
        }
    });

    std::string sw_config_path;
    auto* sw = app.add_subcommand("sw-capacity", "Spin-wave temporal capacity");
    auto* sw_gamma = sw->add_option("--gamma-hz", gamma_hz, "comb bandwidth (Hz)");
    auto* sw_delay = sw->add_option("--delay-s", delay_s, "fixed delay (s)");
    auto* sw_omega = sw->add_option("--omega-hz", omega_hz, "control Rabi frequency (Hz)");
    auto* sw_chi = sw->add_option("--chi", chi, "control slot over flat section (default 1.36)");
    auto* sw_eta = sw->add_option("--eta", eta, "target efficiency factor in (0,1)");
    auto* sw_t2 = sw->add_option("--t2-s", t2_s, "optical coherence time (s)");
    auto* sw_tc = sw->add_option("--tc-s", tc_s, "explicit control slot duration (s)");
    auto* sw_tm = sw->add_option("--tm-s", tm_s, "explicit mode bin (s)");
    auto* sw_cfg = sw->add_option("--config", sw_config_path, "JSON parameter file");
    sw_tc->needs(sw_tm, sw_delay);
    sw->callback([&] {
        bool have_delay = sw_delay->count() > 0;
        bool have_t2 = sw_t2->count() > 0;
        bool have_inputs = sw_gamma->count() && sw_omega->count();
        if (sw_cfg->count()) {
            json cfg = load_json_file(sw_config_path);
            config_fill(cfg, "bandwidth_gamma_hz", sw_gamma, gamma_hz);
            config_fill(cfg, "delay_s", sw_delay, delay_s);
            config_fill(cfg, "optical_t2_s", sw_t2, t2_s);
            config_fill(cfg, "rabi_omega_hz", sw_omega, omega_hz);
            config_fill(cfg, "chi", sw_chi, chi);
            have_delay = have_delay || cfg.contains("delay_s");
            have_t2 = have_t2 || cfg.contains("optical_t2_s");
            have_inputs = (sw_gamma->count() || cfg.contains("bandwidth_gamma_hz")) &&
                          (sw_omega->count() || cfg.contains("rabi_omega_hz"));
        }
        if (sw_tc->count()) {
            emit(report_json(afc::spin_wave_capacity_explicit(delay_s, tc_s, tm_s)));
            return;
        }
        if (!have_inputs) throw CLI::RequiredError("--gamma-hz and --omega-hz");
        if (sw_eta->count()) {
            if (!have_t2) throw CLI::RequiredError("--t2-s");
            emit(report_json(
                afc::spin_wave_capacity_at_efficiency(eta, t2_s, gamma_hz, omega_hz, chi)));
        } else if (have_delay) {
            emit(report_json(afc::spin_wave_capacity(gamma_hz, delay_s, omega_hz, chi)));
        } else {
            throw CLI::RequiredError("--delay-s or --eta/--t2-s");
        }
    });

    SpectrumArgs sp;
    auto* spectrum = app.add_subcommand("spectrum", "Power spectrum of a truncated pulse train");
    spectrum->add_option("--amplitudes", sp.amplitudes, "comma-separated field amplitudes");
    spectrum->add_option("--fwhm-t-s", sp.fwhm_t_s, "intensity FWHM of each pulse (s)")
        ->required();
    spectrum->add_option("--mode-bin-s", sp.mode_bin_s, "bin duration (s)")->required();
    spectrum->add_option("--sample-rate-hz", sp.sample_rate_hz, "sampling rate (default 32/bin)");
    spectrum->add_option("--pad-factor", sp.pad_factor, "zero-padding factor (default 8)");
    spectrum->add_option("--out", sp.out, "CSV output path (default stdout)");
    spectrum->callback([&] {
        afc::PulseTrain train = afc::synthesize_train(parse_amplitudes(sp.amplitudes),
                                                      sp.fwhm_t_s, sp.mode_bin_s,
                                                      sp.sample_rate_hz);
        afc::PowerSpectrum spec = afc::power_spectrum(train, sp.pad_factor);
        std::string csv = "frequency_hz,power_density\n";
        for (std::size_t i = 0; i < spec.frequencies_hz.size(); ++i) {
            csv += afc::io::format_number(spec.frequencies_hz[i]);
            csv += ',';
            csv += afc::io::format_number(spec.power_density[i]);
            csv += '\n';
        }
        write_output(sp.out, csv);
    });

    std::string spec_path, out_path;
    auto* sweep = app.add_subcommand("sweep", "Dense grid evaluation of one operation");
    sweep->add_option("--spec", spec_path, "sweep spec JSON file")->required();
    sweep->add_option("--out", out_path, "CSV output path (default stdout)");
    sweep->callback([&] {
        std::ifstream in(spec_path);
        if (!in) throw afc::Error("io_error", "cannot read " + spec_path);
        json j = json::parse(in);
        afc::SweepTable table = afc::run_sweep(afc::io::sweep_spec_from_json(j));
        write_output(out_path, afc::io::sweep_table_to_csv(table));
    });

    MultiplexArgs mx;
    auto* multiplex = app.add_subcommand("multiplex", "Spectral multiplexing budget");
    multiplex->add_option("--shape", mx.shape, "profile shape: square or gaussian");
    multiplex->add_option("--width-hz", mx.width_hz, "profile width / FWHM (Hz)")->required();
    multiplex->add_option("--peak-od", mx.peak_od, "peak optical depth")->required();
    multiplex->add_option("--dg-hz", mx.dg_hz, "ground hyperfine span (Hz)")->required();
    multiplex->add_option("--de-hz", mx.de_hz, "excited hyperfine span (Hz)");
    multiplex->add_option("--df-hz", mx.df_hz, "prepared feature width (Hz)")->required();
    multiplex->add_option("--n-modes", mx.n_modes, "number of combs to place")->required();
    multiplex->add_option("--out", mx.out, "per-mode CSV output path");
    multiplex->callback([&] {
        afc::InhomogeneousProfile profile;
        profile.shape = mx.shape == "square" ? afc::ProfileShape::Square
                                             : afc::ProfileShape::Gaussian;
        profile.width_hz = mx.width_hz;
        profile.peak_od = mx.peak_od;
        afc::SpectralBudget budget =
            afc::spectral_efficiency_budget(profile, mx.dg_hz, mx.de_hz, mx.df_hz, mx.n_modes);
        std::string csv = "mode_index,center_hz,od,finesse,efficiency,within_fwhm\n";
        for (std::size_t i = 0; i < budget.centers_hz.size(); ++i) {
            csv += std::to_string(i);
            csv += ',' + afc::io::format_number(budget.centers_hz[i]);
            csv += ',' + afc::io::format_number(budget.per_mode_od[i]);
            csv += ',' + afc::io::format_number(budget.per_mode_finesse[i]);
            csv += ',' + afc::io::format_number(budget.per_mode_efficiency[i]);
            csv += budget.within_fwhm[i] ? ",true\n" : ",false\n";
        }
        if (!mx.out.empty()) write_output(mx.out, csv);
        emit(json{{"n_modes", mx.n_modes},
                  {"average_efficiency", round6(budget.average_efficiency)}});
    });

    std::string materials_file, show_name;
    auto* materials = app.add_subcommand("materials", "Built-in and user material records");
    materials->add_option("--file", materials_file,
                          "user materials JSON (also via AFC_MATERIALS_PATH)");
    auto* list = materials->add_subcommand("list", "List material names");
    auto* show = materials->add_subcommand("show", "Print one material record");
    show->add_option("name", show_name, "record name")->required();
    materials->require_subcommand(1);
    auto load_registry = [&]() {
        afc::MaterialRegistry registry = afc::MaterialRegistry::builtins();
        std::string path = materials_file;
        if (path.empty()) {
            if (const char* env = std::getenv("AFC_MATERIALS_PATH")) path = env;
        }
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) throw afc::Error("io_error", "cannot read " + path);
            registry.merge(afc::io::materials_from_json(json::parse(in)));
        }
        return registry;
    };
    list->callback([&] {
        json names = json::array();
        for (const auto& name : load_registry().names()) names.push_back(name);
        emit(names);
    });
    show->callback([&] { std::cout << afc::io::to_json(load_registry().get(show_name)).dump(2) << "\n"; });

    double link_m = 0, refractive = 1.5;
    int n_modes = 1;
    auto* rate = app.add_subcommand("rate", "Entanglement trial rate of an elementary link");
    rate->add_option("--link-length-m", link_m, "link length (m)")->required();
    rate->add_option("--refractive-index", refractive, "fiber refractive index (default 1.5)");
    rate->add_option("--n-modes", n_modes, "stored modes (default 1)");
    rate->callback([&] {
        emit(json{{"rate_hz", round6(afc::repeater_trial_rate(link_m, refractive, n_modes))},
                  {"n_modes", n_modes}});
    });

    std::string case_name = "all", out_dir;
    auto* reproduce = app.add_subcommand("reproduce", "Recompute the published anchor values");
    reproduce->add_option("--case", case_name, "case name or \"all\" (default)");
    reproduce->add_option("--out-dir", out_dir, "also write figure tables into this directory");
    reproduce->add_flag("--list", "list case names");
    reproduce->callback([&] {
        if (reproduce->count("--list")) {
            json names = json::array();
            for (const auto& name : afc::repro_case_names()) names.push_back(name);
            emit(names);
            return;
        }
        bool all_pass = true;
        if (case_name == "all") {
            json report = json::array();
            for (const auto& r : afc::run_all_repro_cases()) {
                report.push_back(repro_case_json(r));
                all_pass = all_pass && r.pass();
            }
            emit(report);
        } else {
            afc::ReproCase r = afc::run_repro_case(case_name);
            emit(repro_case_json(r));
            all_pass = r.pass();
        }
        if (!out_dir.empty()) {
            for (const auto& name : afc::write_figure_tables(out_dir))
                std::cerr << "wrote " << out_dir << "/" << name << "\n";
        }
        if (!all_pass) throw afc::Error("reproduction_failed", "one or more cases failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const afc::InvalidParameter& e) {
        json violations = json::array();
        for (const auto& v : e.violations())
            violations.push_back(json{{"name", v.name}, {"value", v.value},
                                      {"constraint", v.constraint}});
        std::cerr << json{{"error", e.code()}, {"message", e.what()},
                          {"violations", violations}}
                         .dump()
                  << "\n";
        return 1;
    } catch (const afc::Error& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
