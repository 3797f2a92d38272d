#pragma once

#include <string>

#include <json.hpp>

#include "afc/materials.hpp"
#include "afc/multiplex.hpp"
#include "afc/optimize.hpp"
#include "afc/params.hpp"

namespace afc::io {

using json = nlohmann::ordered_json;

/// Fixed-width significant-digit formatting used for every number the CLI
/// emits; keeps output byte-identical across runs.
std::string format_number(double v);

json to_json(const AfcParams& p);
AfcParams afc_params_from_json(const json& j);

json to_json(const ControlPulseParams& p);
ControlPulseParams control_pulse_from_json(const json& j);

json to_json(const ModeShape& m);
ModeShape mode_shape_from_json(const json& j);

json to_json(const SpinParams& s);
SpinParams spin_params_from_json(const json& j);

json to_json(const CapacityReport& r);

json to_json(const InhomogeneousProfile& p);
InhomogeneousProfile profile_from_json(const json& j);

json to_json(const SpatialGrid& g);
SpatialGrid spatial_grid_from_json(const json& j);

json to_json(const MaterialRecord& m);
MaterialRecord material_from_json(const json& j);

/// Parses {"materials": [...]} or a bare array of records.
std::vector<MaterialRecord> materials_from_json(const json& j);

SweepSpec sweep_spec_from_json(const json& j);

/// CSV rendering of a sweep table: header row, '.' decimals, LF endings.
std::string sweep_table_to_csv(const SweepTable& table);

}  // namespace afc::io
