#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "afc/capacity.hpp"
#include "afc/gaussian.hpp"
#include "afc/materials.hpp"
#include "afc/multiplex.hpp"
#include "afc/optimize.hpp"
#include "afc/reproduce.hpp"
#include "afc/spectral.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::dict sweep_to_dict(const afc::SweepTable& table) {
    py::list rows, status;
    for (const auto& row : table.rows) {
        rows.append(row.values);
        status.append(row.status);
    }
    return py::dict("columns"_a = table.columns, "rows"_a = rows, "status"_a = status);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multimode-capacity toolkit for comb-based quantum memories";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const afc::InvalidParameter& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const afc::Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<afc::CapacityReport>(m, "CapacityReport")
        .def_readonly("n_continuous", &afc::CapacityReport::n_continuous)
        .def_readonly("n_floor", &afc::CapacityReport::n_floor)
        .def_readonly("near_integer_flag", &afc::CapacityReport::near_integer_flag)
        .def_readonly("bandwidth_term", &afc::CapacityReport::bandwidth_term)
        .def_readonly("control_term", &afc::CapacityReport::control_term)
        .def_readonly("relative_efficiency", &afc::CapacityReport::relative_efficiency)
        .def_readonly("status", &afc::CapacityReport::status)
        .def_property_readonly("n_reported", &afc::CapacityReport::reported_modes)
        .def("__repr__", [](const afc::CapacityReport& r) {
            return "CapacityReport(n_continuous=" + std::to_string(r.n_continuous) +
                   ", n_floor=" + std::to_string(r.n_floor) + ")";
        });

    py::enum_<afc::Retrieval>(m, "Retrieval")
        .value("BACKWARD", afc::Retrieval::Backward)
        .value("FORWARD", afc::Retrieval::Forward);

    m.def("mode_bin_from_bandwidth", &afc::mode_bin_from_bandwidth, "gamma_hz"_a);
    m.def("fixed_delay_capacity", &afc::fixed_delay_capacity, "gamma_hz"_a, "delay_s"_a);
    m.def("t2_relative_efficiency", &afc::t2_relative_efficiency, "delay_s"_a, "t2_s"_a);
    m.def("delay_for_efficiency", &afc::delay_for_efficiency, "eta"_a, "t2_s"_a);
    m.def("fixed_delay_capacity_at_efficiency", &afc::fixed_delay_capacity_at_efficiency,
          "eta"_a, "t2_s"_a, "gamma_hz"_a);
    m.def("hsh_transfer_efficiency", &afc::hsh_transfer_efficiency, "ts_s"_a, "omega_hz"_a,
          "gamma_hz"_a);
    m.def("hsh_square_duration", &afc::hsh_square_duration, "omega_hz"_a, "gamma_hz"_a,
          "exponent"_a = 4.0);
    m.def("spin_wave_capacity", &afc::spin_wave_capacity, "gamma_hz"_a, "delay_s"_a,
          "omega_hz"_a, "chi"_a);
    m.def("spin_wave_capacity_explicit", &afc::spin_wave_capacity_explicit, "delay_s"_a,
          "tc_s"_a, "tm_s"_a);
    m.def("spin_wave_capacity_at_efficiency", &afc::spin_wave_capacity_at_efficiency, "eta"_a,
          "t2_s"_a, "gamma_hz"_a, "omega_hz"_a, "chi"_a);
    m.def("spin_dephasing_factor", &afc::spin_dephasing_factor, "t_spin_s"_a, "gamma_spin_hz"_a);
    m.def("afc_echo_efficiency", &afc::afc_echo_efficiency, "od"_a, "finesse"_a,
          "direction"_a = afc::Retrieval::Backward);

    m.def("spectral_fwhm", &afc::spectral_fwhm, "fwhm_t_s"_a);
    m.def("time_energy_fraction", &afc::time_energy_fraction, "kappa"_a);
    m.def("bandwidth_ratio", &afc::bandwidth_ratio, "kappa"_a);
    m.def("spectral_energy_fraction", &afc::spectral_energy_fraction, "kappa"_a);
    m.def("optimal_kappa", &afc::optimal_kappa);

    py::class_<afc::PulseTrain>(m, "PulseTrain")
        .def_readonly("amplitudes", &afc::PulseTrain::amplitudes)
        .def_readonly("mode_bin_tm_s", &afc::PulseTrain::mode_bin_tm_s)
        .def_readonly("fwhm_t_s", &afc::PulseTrain::fwhm_t_s)
        .def_readonly("sample_rate_hz", &afc::PulseTrain::sample_rate_hz)
        .def_readonly("samples", &afc::PulseTrain::samples);

    py::class_<afc::PowerSpectrum>(m, "PowerSpectrum")
        .def_readonly("frequencies_hz", &afc::PowerSpectrum::frequencies_hz)
        .def_readonly("power_density", &afc::PowerSpectrum::power_density)
        .def_readonly("resolution_hz", &afc::PowerSpectrum::resolution_hz);

    m.def("synthesize_train", &afc::synthesize_train, "amplitudes"_a, "fwhm_t_s"_a,
          "mode_bin_tm_s"_a, "sample_rate_hz"_a = 0.0);
    m.def("power_spectrum", &afc::power_spectrum, "train"_a,
          "pad_factor"_a = afc::kDefaultPadFactor, "fft_length"_a = 0);
    m.def("band_energy_fraction", &afc::band_energy_fraction, "spectrum"_a, "half_width_hz"_a);
    m.def("modulation_peaks", &afc::modulation_peaks, "spectrum"_a, "count"_a,
          "min_relative_power"_a = afc::kDefaultPeakFloor);

    py::enum_<afc::ProfileShape>(m, "ProfileShape")
        .value("SQUARE", afc::ProfileShape::Square)
        .value("GAUSSIAN", afc::ProfileShape::Gaussian);

    py::class_<afc::InhomogeneousProfile>(m, "InhomogeneousProfile")
        .def(py::init([](afc::ProfileShape shape, double width_hz, double peak_od) {
                 return afc::InhomogeneousProfile{shape, width_hz, peak_od};
             }),
             "shape"_a, "width_hz"_a, "peak_od"_a = 0.0)
        .def_readwrite("shape", &afc::InhomogeneousProfile::shape)
        .def_readwrite("width_hz", &afc::InhomogeneousProfile::width_hz)
        .def_readwrite("peak_od", &afc::InhomogeneousProfile::peak_od);

    py::class_<afc::SpectralBudget>(m, "SpectralBudget")
        .def_readonly("spacing_hz", &afc::SpectralBudget::spacing_hz)
        .def_readonly("centers_hz", &afc::SpectralBudget::centers_hz)
        .def_readonly("per_mode_od", &afc::SpectralBudget::per_mode_od)
        .def_readonly("per_mode_finesse", &afc::SpectralBudget::per_mode_finesse)
        .def_readonly("per_mode_efficiency", &afc::SpectralBudget::per_mode_efficiency)
        .def_readonly("within_fwhm", &afc::SpectralBudget::within_fwhm)
        .def_readonly("average_efficiency", &afc::SpectralBudget::average_efficiency);

    py::class_<afc::SpatialGrid>(m, "SpatialGrid")
        .def(py::init([](double pitch_m, double area_m2) {
                 return afc::SpatialGrid{pitch_m, area_m2};
             }),
             "pitch_m"_a, "area_m2"_a)
        .def_readwrite("pitch_m", &afc::SpatialGrid::pitch_m)
        .def_readwrite("area_m2", &afc::SpatialGrid::area_m2);

    m.def("min_spectral_spacing", &afc::min_spectral_spacing, "dg_hz"_a, "de_hz"_a, "df_hz"_a);
    m.def("spectral_capacity", &afc::spectral_capacity, "profile"_a, "spacing_hz"_a);
    m.def("od_at_detuning", &afc::od_at_detuning, "profile"_a, "f_hz"_a);
    m.def("optimal_finesse", &afc::optimal_finesse, "od"_a,
          "direction"_a = afc::Retrieval::Backward);
    m.def("spectral_efficiency_budget", &afc::spectral_efficiency_budget, "profile"_a, "dg_hz"_a,
          "de_hz"_a, "df_hz"_a, "n_modes"_a);
    m.def("spatial_capacity", &afc::spatial_capacity, "grid"_a);
    m.def("total_budget", &afc::total_budget, "n_temporal"_a, "n_spectral"_a, "n_spatial"_a);
    m.def("repeater_trial_rate", &afc::repeater_trial_rate, "link_length_m"_a,
          "refractive_index"_a, "n_modes"_a);

    m.def("optimal_bandwidth_sw", &afc::optimal_bandwidth_sw, "omega_hz"_a, "delay_s"_a,
          "chi"_a, "gamma_max_hz"_a = std::numeric_limits<double>::infinity());
    m.def(
        "sweep",
        [](const std::string& target,
           const std::vector<std::tuple<std::string, double, double, int>>& axes,
           const std::map<std::string, double>& fixed) {
            afc::SweepSpec spec;
            spec.target = target;
            for (const auto& [name, lo, hi, count] : axes)
                spec.axes.push_back({name, lo, hi, count});
            spec.fixed = fixed;
            return sweep_to_dict(afc::run_sweep(spec));
        },
        "target"_a, "axes"_a, "fixed"_a = std::map<std::string, double>{});
    m.def("sweep_targets", &afc::sweep_targets);

    py::enum_<afc::CoherenceKind>(m, "CoherenceKind")
        .value("PHOTON_ECHO", afc::CoherenceKind::PhotonEcho)
        .value("AFC", afc::CoherenceKind::Afc);

    py::class_<afc::T2Value>(m, "T2Value")
        .def_readonly("t2_s", &afc::T2Value::t2_s)
        .def_readonly("err_s", &afc::T2Value::err_s)
        .def_readonly("interpolated", &afc::T2Value::interpolated);

    py::class_<afc::T2Point>(m, "T2Point")
        .def_readonly("temperature_k", &afc::T2Point::temperature_k)
        .def_readonly("pe_t2_s", &afc::T2Point::pe_t2_s)
        .def_readonly("pe_err_s", &afc::T2Point::pe_err_s)
        .def_readonly("afc_t2_s", &afc::T2Point::afc_t2_s)
        .def_readonly("afc_err_s", &afc::T2Point::afc_err_s);

    py::class_<afc::MaterialRecord>(m, "MaterialRecord")
        .def_readonly("name", &afc::MaterialRecord::name)
        .def_readonly("hyperfine_span_ground_hz", &afc::MaterialRecord::hyperfine_span_ground_hz)
        .def_readonly("hyperfine_span_excited_hz",
                      &afc::MaterialRecord::hyperfine_span_excited_hz)
        .def_readonly("hyperfine_span_combined_hz",
                      &afc::MaterialRecord::hyperfine_span_combined_hz)
        .def_readonly("feature_width_hz", &afc::MaterialRecord::feature_width_hz)
        .def_readonly("max_afc_bandwidth_hz", &afc::MaterialRecord::max_afc_bandwidth_hz)
        .def_readonly("inhomogeneous", &afc::MaterialRecord::inhomogeneous)
        .def_readonly("absorption_coefficient_per_m",
                      &afc::MaterialRecord::absorption_coefficient_per_m)
        .def_readonly("crystal_length_m", &afc::MaterialRecord::crystal_length_m)
        .def_readonly("t2_table", &afc::MaterialRecord::t2_table)
        .def_readonly("comment", &afc::MaterialRecord::comment)
        .def_property_readonly("optical_depth", &afc::MaterialRecord::optical_depth)
        .def_property_readonly("combined_hyperfine_span_hz",
                               &afc::MaterialRecord::combined_hyperfine_span_hz);

    m.def("builtin_material", &afc::builtin_material, "name"_a);
    m.def("builtin_material_names", &afc::builtin_material_names);
    m.def("t2_lookup", &afc::t2_lookup, "record"_a, "temperature_k"_a, "kind"_a);
    m.def("excitation_density", &afc::excitation_density, "intensity_w_cm2"_a, "duration_us"_a,
          "alpha_per_cm"_a);
    m.def("isd_corrected_t2", &afc::isd_corrected_t2, "gamma_h_hz"_a, "gamma_isd_hz"_a);

    m.def("run_repro_cases", [] {
        py::list out;
        for (const auto& r : afc::run_all_repro_cases()) {
            out.append(py::dict("case"_a = r.name, "description"_a = r.description,
                                "computed"_a = r.computed, "paper_value"_a = r.paper_value,
                                "tolerance"_a = r.tolerance, "pass"_a = r.pass(),
                                "note"_a = r.note));
        }
        return out;
    });

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
