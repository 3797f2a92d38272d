#include "afc/materials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace afc {

namespace {

constexpr double kMHz = 1e6;
constexpr double kGHz = 1e9;
constexpr double kUs = 1e-6;

std::vector<T2Point> eu151_t2_table() {
    auto us = [](double v) { return v * kUs; };
    return {
        {3.7, us(707), us(204), us(300), us(30)},
        {4.7, us(651), us(172), us(290), us(20)},
        {5.7, us(423), us(75), us(222), us(13)},
        {6.1, us(256), us(29), std::nullopt, std::nullopt},
        {6.6, us(140), us(9), us(140), us(3)},
        {7.6, us(38), us(2), us(50.1), us(1.1)},
        {8.1, us(23), us(1), us(29.0), us(0.4)},
        {9.1, us(8), us(1), us(9.7), us(1.2)},
    };
}

}  // namespace

std::optional<double> MaterialRecord::combined_hyperfine_span_hz() const {
    if (hyperfine_span_combined_hz) return hyperfine_span_combined_hz;
    if (hyperfine_span_ground_hz && hyperfine_span_excited_hz)
        return *hyperfine_span_ground_hz + *hyperfine_span_excited_hz;
    return std::nullopt;
}

std::optional<double> MaterialRecord::optical_depth() const {
    if (absorption_coefficient_per_m && crystal_length_m)
        return *absorption_coefficient_per_m * *crystal_length_m;
    return std::nullopt;
}

ValidationResult validate(const MaterialRecord& record) {
    ValidationResult r;
    if (record.name.empty()) r.errors.push_back({"name", "\"\"", "must not be empty"});
    auto check_pos = [&](const std::optional<double>& v, const char* name) {
        if (v && !(*v > 0))
            r.errors.push_back({name, detail::format_value(*v), "must be > 0"});
    };
    check_pos(record.hyperfine_span_ground_hz, "hyperfine_span_ground_hz");
    check_pos(record.hyperfine_span_excited_hz, "hyperfine_span_excited_hz");
    check_pos(record.hyperfine_span_combined_hz, "hyperfine_span_combined_hz");
    check_pos(record.feature_width_hz, "feature_width_hz");
    check_pos(record.max_afc_bandwidth_hz, "max_afc_bandwidth_hz");
    check_pos(record.absorption_coefficient_per_m, "absorption_coefficient_per_m");
    check_pos(record.crystal_length_m, "crystal_length_m");

    if (record.inhomogeneous) {
        if (!(record.inhomogeneous->width_hz > 0))
            r.errors.push_back({"inhomogeneous.width_hz",
                                detail::format_value(record.inhomogeneous->width_hz),
                                "must be > 0"});
        if (!(record.inhomogeneous->peak_od >= 0))
            r.errors.push_back({"inhomogeneous.peak_od",
                                detail::format_value(record.inhomogeneous->peak_od),
                                "must be >= 0"});
        // alpha * L must agree with the profile's peak OD to 1% when all three
        // are given.
        auto od = record.optical_depth();
        if (od && record.inhomogeneous->peak_od > 0) {
            double rel = std::abs(*od - record.inhomogeneous->peak_od) /
                         record.inhomogeneous->peak_od;
            if (rel > 0.01)
                r.errors.push_back({"peak_od", detail::format_value(record.inhomogeneous->peak_od),
                                    "inconsistent with alpha * L = " + detail::format_value(*od)});
        }
    }

    for (std::size_t i = 0; i < record.t2_table.size(); ++i) {
        const T2Point& p = record.t2_table[i];
        if (i > 0 && !(p.temperature_k > record.t2_table[i - 1].temperature_k))
            r.errors.push_back({"t2_table", detail::format_value(p.temperature_k),
                                "temperatures must be strictly increasing"});
        if (!(p.pe_t2_s > 0))
            r.errors.push_back({"t2_table.pe_t2_s", detail::format_value(p.pe_t2_s),
                                "must be > 0"});
        if (p.afc_t2_s && !(*p.afc_t2_s > 0))
            r.errors.push_back({"t2_table.afc_t2_s", detail::format_value(*p.afc_t2_s),
                                "must be > 0"});
    }
    return r;
}

std::vector<std::string> builtin_material_names() {
    return {"Eu151_YSO", "Eu153_YSO", "Pr_YSO", "Yb171_YSO"};
}

MaterialRecord builtin_material(const std::string& name) {
    MaterialRecord m;
    m.name = name;
    if (name == "Eu151_YSO") {
        m.hyperfine_span_combined_hz = 258 * kMHz;
        m.feature_width_hz = 5 * kMHz;  // prepared features can be as narrow as the comb
        m.max_afc_bandwidth_hz = 5 * kMHz;
        m.inhomogeneous = InhomogeneousProfile{ProfileShape::Square, 1.6 * kGHz, 0.0};
        m.t2_table = eu151_t2_table();
        m.comment = "isotopically pure, 1000 ppm; hyperfine overlap caps usable "
                    "bandwidth below 5.7 MHz, 5 MHz used operationally";
    } else if (name == "Eu153_YSO") {
        m.hyperfine_span_combined_hz = 663 * kMHz;
        m.feature_width_hz = 15 * kMHz;
        m.max_afc_bandwidth_hz = 15 * kMHz;
        m.comment = "site 1";
    } else if (name == "Pr_YSO") {
        m.hyperfine_span_combined_hz = 36.9 * kMHz;
        m.feature_width_hz = 18 * kMHz;  // widened by the pumping sequence
        m.max_afc_bandwidth_hz = 5 * kMHz;
        m.inhomogeneous = InhomogeneousProfile{ProfileShape::Gaussian, 10 * kGHz, 10.0};
        m.absorption_coefficient_per_m = 2000.0;  // 20 / cm
        m.crystal_length_m = 5e-3;
        m.comment = "0.05% doping; 4 MHz bandwidth used operationally";
    } else if (name == "Yb171_YSO") {
        m.max_afc_bandwidth_hz = 100 * kMHz;
        m.comment = "large hyperfine splittings allow wideband combs";
    } else {
        throw UnknownMaterial(name);
    }
    return m;
}

MaterialRegistry MaterialRegistry::builtins() {
    MaterialRegistry registry;
    for (const auto& name : builtin_material_names())
        registry.records_.emplace(name, builtin_material(name));
    return registry;
}

void MaterialRegistry::merge(const std::vector<MaterialRecord>& records) {
    for (const auto& record : records) {
        ValidationResult r = validate(record);
        if (!r.ok()) throw InvalidParameter(r.errors);
        records_[record.name] = record;  // user keys shadow builtins
    }
}

const MaterialRecord& MaterialRegistry::get(const std::string& name) const {
    auto it = records_.find(name);
    if (it == records_.end()) throw UnknownMaterial(name);
    return it->second;
}

std::vector<std::string> MaterialRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(records_.size());
    for (const auto& [name, record] : records_) out.push_back(name);
    return out;
}

T2Value t2_lookup(const MaterialRecord& record, double temperature_k, CoherenceKind kind) {
    const auto& table = record.t2_table;
    if (table.empty()) throw NoData(record.name + " has no coherence-time table");
    if (temperature_k < table.front().temperature_k ||
        temperature_k > table.back().temperature_k) {
        throw OutOfRange("temperature " + detail::format_value(temperature_k) +
                         " K outside table range [" +
                         detail::format_value(table.front().temperature_k) + ", " +
                         detail::format_value(table.back().temperature_k) + "]");
    }

    auto value_of = [&](const T2Point& p) -> std::optional<std::pair<double, double>> {
        if (kind == CoherenceKind::PhotonEcho) return std::make_pair(p.pe_t2_s, p.pe_err_s);
        if (p.afc_t2_s) return std::make_pair(*p.afc_t2_s, p.afc_err_s.value_or(0.0));
        return std::nullopt;
    };

    // Exact hit first.
    for (const auto& p : table) {
        if (p.temperature_k == temperature_k) {
            auto v = value_of(p);
            if (!v)
                throw NoData("no AFC coherence time tabulated at " +
                             detail::format_value(temperature_k) + " K");
            return {v->first, v->second, false};
        }
    }

    // Interpolate between the nearest rows that carry data for this kind.
    const T2Point* lo = nullptr;
    const T2Point* hi = nullptr;
    for (const auto& p : table) {
        if (!value_of(p)) continue;
        if (p.temperature_k < temperature_k) lo = &p;
        if (p.temperature_k > temperature_k) {
            hi = &p;
            break;
        }
    }
    if (!lo || !hi)
        throw OutOfRange("temperature " + detail::format_value(temperature_k) +
                         " K not bracketed by tabulated data");
    auto vlo = *value_of(*lo);
    auto vhi = *value_of(*hi);
    double w = (temperature_k - lo->temperature_k) / (hi->temperature_k - lo->temperature_k);
    return {vlo.first + w * (vhi.first - vlo.first), vlo.second + w * (vhi.second - vlo.second),
            true};
}

double excitation_density(double intensity_w_cm2, double duration_us, double alpha_per_cm) {
    if (!(intensity_w_cm2 >= 0))
        throw InvalidParameter("intensity_w_cm2", intensity_w_cm2, "must be >= 0");
    if (!(duration_us >= 0)) throw InvalidParameter("duration_us", duration_us, "must be >= 0");
    if (!(alpha_per_cm >= 0)) throw InvalidParameter("alpha_per_cm", alpha_per_cm, "must be >= 0");
    return 3e12 * intensity_w_cm2 * duration_us * alpha_per_cm;
}

double isd_corrected_t2(double gamma_h_hz, double gamma_isd_hz) {
    if (!(gamma_isd_hz >= 0))
        throw InvalidParameter("gamma_isd_hz", gamma_isd_hz, "must be >= 0");
    if (!(gamma_h_hz > gamma_isd_hz)) {
        throw NonPositiveLinewidth("homogeneous linewidth " + detail::format_value(gamma_h_hz) +
                                   " Hz does not exceed the excitation-induced part " +
                                   detail::format_value(gamma_isd_hz) + " Hz");
    }
    return 1.0 / (std::numbers::pi * (gamma_h_hz - gamma_isd_hz));
}

ValidationResult validate(const IsdMeasurement& m) {
    ValidationResult r;
    auto check = [&](double v, const char* name) {
        if (!(v >= 0)) r.errors.push_back({name, detail::format_value(v), "must be >= 0"});
    };
    check(m.intensity_w_cm2, "intensity_w_cm2");
    check(m.pulse_duration_us, "pulse_duration_us");
    check(m.absorption_coefficient_per_cm, "absorption_coefficient_per_cm");
    check(m.homogeneous_linewidth_hz, "homogeneous_linewidth_hz");
    check(m.isd_linewidth_hz, "isd_linewidth_hz");
    if (m.isd_linewidth_hz > m.homogeneous_linewidth_hz)
        r.errors.push_back({"isd_linewidth_hz", detail::format_value(m.isd_linewidth_hz),
                            "must not exceed the homogeneous linewidth"});
    return r;
}

}  // namespace afc
