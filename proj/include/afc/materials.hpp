#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afc/multiplex.hpp"

namespace afc {

enum class CoherenceKind { PhotonEcho, Afc };

/// One row of a coherence-time-vs-temperature table. Times in seconds.
struct T2Point {
    double temperature_k{};
    double pe_t2_s{};
    double pe_err_s{};
    std::optional<double> afc_t2_s;
    std::optional<double> afc_err_s;
};

struct T2Value {
    double t2_s{};
    double err_s{};
    bool interpolated{};
};

/// Per-ion constants. Individual hyperfine spans may be absent when only the
/// combined span dg + de is known.
struct MaterialRecord {
    std::string name;
    std::optional<double> hyperfine_span_ground_hz;
    std::optional<double> hyperfine_span_excited_hz;
    std::optional<double> hyperfine_span_combined_hz;
    std::optional<double> feature_width_hz;
    std::optional<double> max_afc_bandwidth_hz;
    std::optional<InhomogeneousProfile> inhomogeneous;
    std::optional<double> absorption_coefficient_per_m;
    std::optional<double> crystal_length_m;
    std::vector<T2Point> t2_table;
    std::string comment;

    /// dg + de, from the combined field or the two individual spans.
    std::optional<double> combined_hyperfine_span_hz() const;
    /// alpha * L when both are present.
    std::optional<double> optical_depth() const;
};

ValidationResult validate(const MaterialRecord& record);

std::vector<std::string> builtin_material_names();

/// Built-in records: Eu151_YSO, Eu153_YSO, Pr_YSO, Yb171_YSO.
MaterialRecord builtin_material(const std::string& name);

/// Immutable name -> record map. User records shadow builtins on merge.
class MaterialRegistry {
public:
    static MaterialRegistry builtins();

    void merge(const std::vector<MaterialRecord>& records);
    const MaterialRecord& get(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, MaterialRecord> records_;
};

/// Coherence time at a temperature: exact at tabulated rows, linearly
/// interpolated between adjacent rows otherwise. Rows without an AFC entry
/// raise NoData for kind = Afc at that exact temperature.
T2Value t2_lookup(const MaterialRecord& record, double temperature_k, CoherenceKind kind);

/// Empirical excitation density 3e12 * I * tau * alpha with I in W/cm^2,
/// tau in us and alpha in 1/cm. The mixed units follow the source data and
/// are kept verbatim.
double excitation_density(double intensity_w_cm2, double duration_us, double alpha_per_cm);

/// Coherence time with the excitation-induced broadening removed:
/// T2 = 1 / (pi * (gamma_h - gamma_isd)).
double isd_corrected_t2(double gamma_h_hz, double gamma_isd_hz);

/// A photon-echo run used for broadening correction.
struct IsdMeasurement {
    double intensity_w_cm2{};
    double pulse_duration_us{};
    double absorption_coefficient_per_cm{};
    double homogeneous_linewidth_hz{};
    double isd_linewidth_hz{};
};

ValidationResult validate(const IsdMeasurement& m);

}  // namespace afc
