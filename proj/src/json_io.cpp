#include "afc/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace afc::io {

namespace {

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw MissingParameter("missing numeric field \"" + key + "\"");
    return j.at(key).get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw InvalidParameter(key, 0.0, "must be a number");
    return j.at(key).get<double>();
}

std::optional<double> optional_number(const json& j, const std::string& key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_number()) throw InvalidParameter(key, 0.0, "must be a number");
    return j.at(key).get<double>();
}

void put_optional(json& j, const std::string& key, const std::optional<double>& v) {
    if (v) j[key] = *v;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

json to_json(const AfcParams& p) {
    return json{{"bandwidth_gamma_hz", p.bandwidth_gamma_hz},
                {"delay_s", p.delay_s},
                {"finesse", p.finesse},
                {"peak_od", p.peak_od},
                {"optical_t2_s", p.optical_t2_s}};
}

AfcParams afc_params_from_json(const json& j) {
    AfcParams p;
    p.bandwidth_gamma_hz = require_number(j, "bandwidth_gamma_hz");
    p.delay_s = require_number(j, "delay_s");
    p.finesse = number_or(j, "finesse", 1.0);
    p.peak_od = number_or(j, "peak_od", 0.0);
    p.optical_t2_s = require_number(j, "optical_t2_s");
    return p;
}

json to_json(const ControlPulseParams& p) {
    return json{{"rabi_omega_hz", p.rabi_omega_hz},
                {"square_duration_ts_s", p.square_duration_ts_s},
                {"cutoff_tc_s", p.cutoff_tc_s},
                {"chi", p.chi()}};
}

ControlPulseParams control_pulse_from_json(const json& j) {
    ControlPulseParams p;
    p.rabi_omega_hz = require_number(j, "rabi_omega_hz");
    p.square_duration_ts_s = require_number(j, "square_duration_ts_s");
    if (j.contains("cutoff_tc_s")) {
        p.cutoff_tc_s = require_number(j, "cutoff_tc_s");
    } else {
        p.cutoff_tc_s = require_number(j, "chi") * p.square_duration_ts_s;
    }
    return p;
}

json to_json(const ModeShape& m) {
    return json{{"fwhm_t_s", m.fwhm_t_s},
                {"mode_bin_tm_s", m.mode_bin_tm_s},
                {"kappa", m.kappa()},
                {"shape", "gaussian"}};
}

ModeShape mode_shape_from_json(const json& j) {
    ModeShape m;
    m.fwhm_t_s = require_number(j, "fwhm_t_s");
    if (j.contains("mode_bin_tm_s")) {
        m.mode_bin_tm_s = require_number(j, "mode_bin_tm_s");
    } else {
        m.mode_bin_tm_s = require_number(j, "kappa") * m.fwhm_t_s;
    }
    if (j.contains("shape") && j.at("shape") != "gaussian")
        throw InvalidParameter("shape", 0.0, "only \"gaussian\" is supported");
    return m;
}

json to_json(const SpinParams& s) {
    return json{{"spin_linewidth_hz", s.spin_linewidth_hz},
                {"spin_storage_time_s", s.spin_storage_time_s}};
}

SpinParams spin_params_from_json(const json& j) {
    SpinParams s;
    s.spin_linewidth_hz = require_number(j, "spin_linewidth_hz");
    s.spin_storage_time_s = require_number(j, "spin_storage_time_s");
    return s;
}

json to_json(const CapacityReport& r) {
    json j{{"n_continuous", r.n_continuous},
           {"n_floor", r.n_floor},
           {"n_reported", r.reported_modes()},
           {"near_integer_flag", r.near_integer_flag},
           {"bandwidth_term", r.bandwidth_term},
           {"control_term", r.control_term},
           {"relative_efficiency", r.relative_efficiency}};
    if (!r.status.empty()) j["status"] = r.status;
    return j;
}

json to_json(const InhomogeneousProfile& p) {
    return json{{"shape", p.shape == ProfileShape::Square ? "square" : "gaussian"},
                {"width_hz", p.width_hz},
                {"peak_od", p.peak_od}};
}

InhomogeneousProfile profile_from_json(const json& j) {
    InhomogeneousProfile p;
    std::string shape = j.value("shape", "square");
    if (shape == "square") {
        p.shape = ProfileShape::Square;
    } else if (shape == "gaussian") {
        p.shape = ProfileShape::Gaussian;
    } else {
        throw InvalidParameter("shape", 0.0, "must be \"square\" or \"gaussian\"");
    }
    p.width_hz = require_number(j, "width_hz");
    p.peak_od = number_or(j, "peak_od", 0.0);
    return p;
}

json to_json(const SpatialGrid& g) {
    return json{{"pitch_m", g.pitch_m}, {"area_m2", g.area_m2}};
}

SpatialGrid spatial_grid_from_json(const json& j) {
    return SpatialGrid{require_number(j, "pitch_m"), require_number(j, "area_m2")};
}

json to_json(const MaterialRecord& m) {
    json j;
    j["name"] = m.name;
    put_optional(j, "hyperfine_span_ground_hz", m.hyperfine_span_ground_hz);
    put_optional(j, "hyperfine_span_excited_hz", m.hyperfine_span_excited_hz);
    put_optional(j, "hyperfine_span_combined_hz", m.hyperfine_span_combined_hz);
    put_optional(j, "feature_width_hz", m.feature_width_hz);
    put_optional(j, "max_afc_bandwidth_hz", m.max_afc_bandwidth_hz);
    if (m.inhomogeneous) j["inhomogeneous"] = to_json(*m.inhomogeneous);
    put_optional(j, "absorption_coefficient_per_m", m.absorption_coefficient_per_m);
    put_optional(j, "crystal_length_m", m.crystal_length_m);
    if (!m.t2_table.empty()) {
        json table = json::array();
        for (const auto& p : m.t2_table) {
            json row{{"temperature_k", p.temperature_k},
                     {"pe_t2_s", p.pe_t2_s},
                     {"pe_err_s", p.pe_err_s}};
            put_optional(row, "afc_t2_s", p.afc_t2_s);
            put_optional(row, "afc_err_s", p.afc_err_s);
            table.push_back(std::move(row));
        }
        j["t2_table"] = std::move(table);
    }
    if (!m.comment.empty()) j["comment"] = m.comment;
    return j;
}

MaterialRecord material_from_json(const json& j) {
    MaterialRecord m;
    if (!j.contains("name") || !j.at("name").is_string())
        throw MissingParameter("material record needs a \"name\"");
    m.name = j.at("name").get<std::string>();
    m.hyperfine_span_ground_hz = optional_number(j, "hyperfine_span_ground_hz");
    m.hyperfine_span_excited_hz = optional_number(j, "hyperfine_span_excited_hz");
    m.hyperfine_span_combined_hz = optional_number(j, "hyperfine_span_combined_hz");
    m.feature_width_hz = optional_number(j, "feature_width_hz");
    m.max_afc_bandwidth_hz = optional_number(j, "max_afc_bandwidth_hz");
    if (j.contains("inhomogeneous")) m.inhomogeneous = profile_from_json(j.at("inhomogeneous"));
    m.absorption_coefficient_per_m = optional_number(j, "absorption_coefficient_per_m");
    m.crystal_length_m = optional_number(j, "crystal_length_m");
    if (j.contains("t2_table")) {
        for (const auto& row : j.at("t2_table")) {
            T2Point p;
            p.temperature_k = require_number(row, "temperature_k");
            p.pe_t2_s = require_number(row, "pe_t2_s");
            p.pe_err_s = number_or(row, "pe_err_s", 0.0);
            p.afc_t2_s = optional_number(row, "afc_t2_s");
            p.afc_err_s = optional_number(row, "afc_err_s");
            m.t2_table.push_back(p);
        }
    }
    m.comment = j.value("comment", "");
    return m;
}

std::vector<MaterialRecord> materials_from_json(const json& j) {
    const json* array = &j;
    if (j.is_object() && j.contains("materials")) array = &j.at("materials");
    if (!array->is_array())
        throw InvalidParameter("materials", 0.0, "expected an array of records");
    std::vector<MaterialRecord> out;
    for (const auto& item : *array) out.push_back(material_from_json(item));
    return out;
}

SweepSpec sweep_spec_from_json(const json& j) {
    SweepSpec spec;
    if (!j.contains("target") || !j.at("target").is_string())
        throw MissingParameter("sweep spec needs a \"target\"");
    spec.target = j.at("target").get<std::string>();
    if (!j.contains("axes") || !j.at("axes").is_array() || j.at("axes").empty())
        throw MissingParameter("sweep spec needs a non-empty \"axes\" array");
    for (const auto& axis : j.at("axes")) {
        SweepAxis a;
        if (!axis.contains("name") || !axis.at("name").is_string())
            throw MissingParameter("sweep axis needs a \"name\"");
        a.name = axis.at("name").get<std::string>();
        a.min = require_number(axis, "min");
        a.max = require_number(axis, "max");
        a.count = static_cast<int>(require_number(axis, "count"));
        spec.axes.push_back(std::move(a));
    }
    if (j.contains("fixed")) {
        for (const auto& [key, value] : j.at("fixed").items()) {
            if (!value.is_number())
                throw InvalidParameter(key, 0.0, "fixed parameters must be numbers");
            spec.fixed[key] = value.get<double>();
        }
    }
    return spec;
}

std::string sweep_table_to_csv(const SweepTable& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            if (i) os << ',';
            os << format_number(row.values[i]);
        }
        os << ',' << row.status << '\n';
    }
    return os.str();
}

}  // namespace afc::io
