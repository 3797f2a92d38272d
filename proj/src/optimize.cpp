#include "afc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "afc/capacity.hpp"
#include "afc/multiplex.hpp"

namespace afc {

double optimal_bandwidth_sw(double omega_hz, double delay_s, double chi, double gamma_max_hz) {
    if (!(omega_hz > 0)) throw InvalidParameter("omega_hz", omega_hz, "must be > 0");
    if (!(delay_s > 0)) throw InvalidParameter("delay_s", delay_s, "must be > 0");
    if (!(chi >= 1)) throw InvalidParameter("chi", chi, "must be >= 1");
    if (!(gamma_max_hz > 0)) throw InvalidParameter("gamma_max_hz", gamma_max_hz, "must be > 0");
    constexpr double kPi = std::numbers::pi;
    double stationary = kPi * kPi * omega_hz * omega_hz * delay_s / (8.0 * chi);
    return std::min(stationary, gamma_max_hz);
}

namespace {

struct CellResult {
    std::vector<double> values;
    std::string status;
};

struct Target {
    std::vector<std::string> params;
    std::vector<std::string> outputs;
    std::function<CellResult(const std::vector<double>&)> eval;
};

CellResult capacity_cell(const CapacityReport& r) {
    return {{r.n_continuous, static_cast<double>(r.n_floor), r.bandwidth_term, r.control_term},
            r.status};
}

const std::vector<std::string> kCapacityOutputs = {"n_continuous", "n_floor", "bandwidth_term",
                                                   "control_term"};

const std::map<std::string, Target>& targets() {
    static const std::map<std::string, Target> table = {
        {"mode_bin_from_bandwidth",
         {{"gamma_hz"},
          {"tm_s"},
          [](const std::vector<double>& a) { return CellResult{{mode_bin_from_bandwidth(a[0])}, {}}; }}},
        {"fixed_delay_capacity",
         {{"gamma_hz", "delay_s"},
          kCapacityOutputs,
          [](const std::vector<double>& a) { return capacity_cell(fixed_delay_capacity(a[0], a[1])); }}},
        {"t2_relative_efficiency",
         {{"delay_s", "t2_s"},
          {"eta"},
          [](const std::vector<double>& a) { return CellResult{{t2_relative_efficiency(a[0], a[1])}, {}}; }}},
        {"delay_for_efficiency",
         {{"eta", "t2_s"},
          {"delay_s"},
          [](const std::vector<double>& a) { return CellResult{{delay_for_efficiency(a[0], a[1])}, {}}; }}},
        {"fixed_delay_capacity_at_efficiency",
         {{"eta", "t2_s", "gamma_hz"},
          kCapacityOutputs,
          [](const std::vector<double>& a) {
              return capacity_cell(fixed_delay_capacity_at_efficiency(a[0], a[1], a[2]));
          }}},
        {"hsh_transfer_efficiency",
         {{"ts_s", "omega_hz", "gamma_hz"},
          {"eta"},
          [](const std::vector<double>& a) {
              return CellResult{{hsh_transfer_efficiency(a[0], a[1], a[2])}, {}};
          }}},
        {"hsh_square_duration",
         {{"omega_hz", "gamma_hz", "exponent"},
          {"ts_s"},
          [](const std::vector<double>& a) {
              return CellResult{{hsh_square_duration(a[0], a[1], a[2])}, {}};
          }}},
        {"spin_wave_capacity",
         {{"gamma_hz", "delay_s", "omega_hz", "chi"},
          kCapacityOutputs,
          [](const std::vector<double>& a) {
              return capacity_cell(spin_wave_capacity(a[0], a[1], a[2], a[3]));
          }}},
        {"spin_wave_capacity_explicit",
         {{"delay_s", "tc_s", "tm_s"},
          kCapacityOutputs,
          [](const std::vector<double>& a) {
              // Keep sweeps total: a control slot consuming the delay clamps
              // to zero capacity instead of refusing the cell.
              try {
                  return capacity_cell(spin_wave_capacity_explicit(a[0], a[1], a[2]));
              } catch (const ControlPulseDominates&) {
                  CapacityReport r = CapacityReport::from_continuous(
                      0.0, a[0] / a[2], a[1] / a[2], 1.0, "control_pulse_dominates");
                  return capacity_cell(r);
              }
          }}},
        {"spin_wave_capacity_at_efficiency",
         {{"eta", "t2_s", "gamma_hz", "omega_hz", "chi"},
          kCapacityOutputs,
          [](const std::vector<double>& a) {
              return capacity_cell(spin_wave_capacity_at_efficiency(a[0], a[1], a[2], a[3], a[4]));
          }}},
        {"spin_dephasing_factor",
         {{"t_spin_s", "gamma_spin_hz"},
          {"eta"},
          [](const std::vector<double>& a) {
              return CellResult{{spin_dephasing_factor(a[0], a[1])}, {}};
          }}},
        {"afc_echo_efficiency",
         {{"od", "finesse"},
          {"eta"},
          [](const std::vector<double>& a) {
              return CellResult{{afc_echo_efficiency(a[0], a[1])}, {}};
          }}},
        {"afc_echo_efficiency_forward",
         {{"od", "finesse"},
          {"eta"},
          [](const std::vector<double>& a) {
              return CellResult{{afc_echo_efficiency(a[0], a[1], Retrieval::Forward)}, {}};
          }}},
        {"optimal_bandwidth_sw",
         {{"omega_hz", "delay_s", "chi", "gamma_max_hz"},
          {"gamma_hz"},
          [](const std::vector<double>& a) {
              return CellResult{{optimal_bandwidth_sw(a[0], a[1], a[2], a[3])}, {}};
          }}},
    };
    return table;
}

}  // namespace

std::vector<std::string> sweep_targets() {
    std::vector<std::string> names;
    for (const auto& [name, target] : targets()) names.push_back(name);
    return names;
}

std::vector<std::string> sweep_target_parameters(const std::string& target) {
    auto it = targets().find(target);
    if (it == targets().end()) throw UnknownTarget(target);
    return it->second.params;
}

SweepTable run_sweep(const SweepSpec& spec) {
    auto it = targets().find(spec.target);
    if (it == targets().end()) throw UnknownTarget(spec.target);
    const Target& target = it->second;

    if (spec.axes.empty() || spec.axes.size() > 2)
        throw InvalidParameter("axes", static_cast<double>(spec.axes.size()),
                               "sweeps take one or two axes");
    for (const auto& axis : spec.axes) {
        if (axis.count < 2)
            throw InvalidParameter(axis.name + ".count", axis.count, "must be >= 2");
    }

    // Every parameter must be supplied exactly once, as an axis or fixed.
    std::vector<std::size_t> slot_of_axis(spec.axes.size());
    std::vector<double> args(target.params.size());
    std::vector<bool> covered(target.params.size(), false);
    auto slot_for = [&](const std::string& name) {
        auto pos = std::find(target.params.begin(), target.params.end(), name);
        if (pos == target.params.end())
            throw InvalidParameter(name, 0.0, "not a parameter of target " + spec.target);
        return static_cast<std::size_t>(pos - target.params.begin());
    };
    for (std::size_t i = 0; i < spec.axes.size(); ++i) {
        slot_of_axis[i] = slot_for(spec.axes[i].name);
        covered[slot_of_axis[i]] = true;
    }
    for (const auto& [name, value] : spec.fixed) {
        std::size_t slot = slot_for(name);
        if (covered[slot])
            throw InvalidParameter(name, value, "supplied both as axis and fixed parameter");
        args[slot] = value;
        covered[slot] = true;
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
        if (!covered[i])
            throw MissingParameter("target " + spec.target + " needs parameter " +
                                   target.params[i]);
    }

    SweepTable table;
    for (const auto& axis : spec.axes) table.columns.push_back(axis.name);
    table.columns.insert(table.columns.end(), target.outputs.begin(), target.outputs.end());
    table.columns.push_back("status");

    auto axis_value = [](const SweepAxis& axis, int i) {
        if (i == axis.count - 1) return axis.max;  // exact endpoints
        return axis.min + (axis.max - axis.min) * static_cast<double>(i) /
                              static_cast<double>(axis.count - 1);
    };

    const int n0 = spec.axes[0].count;
    const int n1 = spec.axes.size() == 2 ? spec.axes[1].count : 1;
    table.rows.reserve(static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1));
    for (int i = 0; i < n0; ++i) {
        args[slot_of_axis[0]] = axis_value(spec.axes[0], i);
        for (int j = 0; j < n1; ++j) {
            SweepRow row;
            row.values.push_back(args[slot_of_axis[0]]);
            if (spec.axes.size() == 2) {
                args[slot_of_axis[1]] = axis_value(spec.axes[1], j);
                row.values.push_back(args[slot_of_axis[1]]);
            }
            CellResult cell = target.eval(args);
            row.values.insert(row.values.end(), cell.values.begin(), cell.values.end());
            row.status = std::move(cell.status);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

}  // namespace afc
