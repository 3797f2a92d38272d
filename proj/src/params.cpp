#include "afc/params.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace afc {

namespace detail {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace detail

InvalidParameter::InvalidParameter(const std::string& name, double value,
                                   const std::string& constraint)
    : Error("invalid_parameter", name + " = " + detail::format_value(value) + ": " + constraint),
      violations_{Violation{name, detail::format_value(value), constraint}} {}

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << "; ";
        os << vs[i].to_string();
    }
    return os.str();
}

void require(std::vector<Violation>& out, bool ok, const std::string& name, double value,
             const std::string& constraint) {
    if (!ok) out.push_back(Violation{name, detail::format_value(value), constraint});
}

}  // namespace

InvalidParameter::InvalidParameter(std::vector<Violation> violations)
    : Error("invalid_parameter", join_violations(violations)), violations_(std::move(violations)) {}

CapacityReport CapacityReport::from_continuous(double n, double bandwidth_term,
                                               double control_term, double relative_efficiency,
                                               std::string status) {
    CapacityReport r;
    r.n_continuous = n;
    r.n_floor = static_cast<std::int64_t>(std::floor(n));
    double next_integer = static_cast<double>(r.n_floor) + 1.0;
    r.near_integer_flag = (next_integer - n) <= kNearIntegerWindow;
    r.bandwidth_term = bandwidth_term;
    r.control_term = control_term;
    r.relative_efficiency = relative_efficiency;
    r.status = std::move(status);
    return r;
}

ValidationResult validate(const AfcParams& p) {
    ValidationResult r;
    require(r.errors, p.bandwidth_gamma_hz > 0, "bandwidth_gamma_hz", p.bandwidth_gamma_hz,
            "must be > 0");
    require(r.errors, p.delay_s > 0, "delay_s", p.delay_s, "must be > 0");
    require(r.errors, p.optical_t2_s > 0, "optical_t2_s", p.optical_t2_s, "must be > 0");
    require(r.errors, p.finesse >= 1, "finesse", p.finesse, "must be >= 1");
    require(r.errors, p.peak_od >= 0, "peak_od", p.peak_od, "must be >= 0");
    if (r.ok()) {
        double teeth = p.tooth_count();
        require(r.errors, teeth >= 1, "tooth_count", teeth,
                "comb must contain at least one tooth (bandwidth * delay >= 1)");
        if (teeth >= 1 && teeth < kTeethPerMode) {
            r.warnings.push_back("tooth count " + detail::format_value(teeth) +
                                 " is below the single-mode threshold of 2.5");
        }
    }
    return r;
}

ValidationResult validate(const ControlPulseParams& p) {
    ValidationResult r;
    require(r.errors, p.rabi_omega_hz > 0, "rabi_omega_hz", p.rabi_omega_hz, "must be > 0");
    require(r.errors, p.square_duration_ts_s > 0, "square_duration_ts_s", p.square_duration_ts_s,
            "must be > 0");
    if (p.square_duration_ts_s > 0) {
        require(r.errors, p.chi() >= 1, "chi", p.chi(),
                "cut-off must cover the square part (T_c >= T_s)");
    }
    return r;
}

ValidationResult validate(const ModeShape& m) {
    ValidationResult r;
    require(r.errors, m.fwhm_t_s > 0, "fwhm_t_s", m.fwhm_t_s, "must be > 0");
    require(r.errors, m.mode_bin_tm_s > 0, "mode_bin_tm_s", m.mode_bin_tm_s, "must be > 0");
    if (r.ok()) {
        double k = m.kappa();
        require(r.errors, k > 0, "kappa", k, "must be > 0");
        // The recommended window is advisory only; values outside it are legal.
        if (k > 0 && k < kKappaRecommendedMin) {
            r.warnings.push_back("kappa " + detail::format_value(k) + " below 2");
        } else if (k > kKappaRecommendedMax) {
            r.warnings.push_back("kappa " + detail::format_value(k) + " above 2*sqrt(2)");
        }
    }
    return r;
}

ValidationResult validate(const SpinParams& s) {
    ValidationResult r;
    require(r.errors, s.spin_linewidth_hz > 0, "spin_linewidth_hz", s.spin_linewidth_hz,
            "must be > 0");
    require(r.errors, s.spin_storage_time_s > 0, "spin_storage_time_s", s.spin_storage_time_s,
            "must be > 0");
    return r;
}

ValidationResult validate(const CapacityReport& c) {
    ValidationResult r;
    require(r.errors,
            c.n_floor == static_cast<std::int64_t>(std::floor(c.n_continuous)), "n_floor",
            static_cast<double>(c.n_floor), "must equal floor(n_continuous)");
    require(r.errors, c.relative_efficiency > 0 && c.relative_efficiency <= 1,
            "relative_efficiency", c.relative_efficiency, "must lie in (0, 1]");
    require(r.errors, c.control_term >= 0, "control_term", c.control_term, "must be >= 0");
    return r;
}

}  // namespace afc
