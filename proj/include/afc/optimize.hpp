#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "afc/params.hpp"

namespace afc {

/// Bandwidth maximizing the spin-wave capacity for a given control Rabi
/// frequency and delay. The capacity is quadratic in Gamma, so the stationary
/// point is exact: Gamma* = pi^2 Omega^2 delay / (8 chi), clipped to
/// gamma_max_hz.
double optimal_bandwidth_sw(double omega_hz, double delay_s, double chi,
                            double gamma_max_hz = std::numeric_limits<double>::infinity());

struct SweepAxis {
    std::string name;
    double min{};
    double max{};
    int count{};
};

/// Dense grid evaluation of one registered target operation over up to two
/// axes, with the remaining parameters fixed.
struct SweepSpec {
    std::string target;
    std::vector<SweepAxis> axes;
    std::map<std::string, double> fixed;
};

struct SweepRow {
    std::vector<double> values;  ///< axis values then output values
    std::string status;
};

struct SweepTable {
    std::vector<std::string> columns;  ///< axis names, output names, then "status"
    std::vector<SweepRow> rows;
};

/// Names of the operations that can be swept.
std::vector<std::string> sweep_targets();

/// Parameter names a target requires.
std::vector<std::string> sweep_target_parameters(const std::string& target);

/// Evaluates the grid row-major (first axis outermost). Rows where the target
/// reports a warning carry it in the status column; cells where the target
/// refuses (control pulse consuming the delay) clamp to zero capacity with
/// the same status so sweeps stay total.
SweepTable run_sweep(const SweepSpec& spec);

}  // namespace afc
