#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace afc {

/// One violated constraint, e.g. {"bandwidth_gamma_hz", "-1", "must be > 0"}.
struct Violation {
    std::string name;
    std::string value;
    std::string constraint;

    std::string to_string() const { return name + " = " + value + ": " + constraint; }
};

/// Base class for all toolkit errors. `code()` is a stable machine-readable
/// identifier used by the CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class InvalidParameter : public Error {
public:
    InvalidParameter(const std::string& name, double value, const std::string& constraint);
    explicit InvalidParameter(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

class ControlPulseDominates : public Error {
public:
    explicit ControlPulseDominates(const std::string& what)
        : Error("control_pulse_dominates", what) {}
};

class UnknownMaterial : public Error {
public:
    explicit UnknownMaterial(const std::string& name)
        : Error("unknown_material", "unknown material: " + name) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error("out_of_range", what) {}
};

class NoData : public Error {
public:
    explicit NoData(const std::string& what) : Error("no_data", what) {}
};

class NonPositiveLinewidth : public Error {
public:
    explicit NonPositiveLinewidth(const std::string& what)
        : Error("non_positive_linewidth", what) {}
};

class BandExceedsGrid : public Error {
public:
    explicit BandExceedsGrid(const std::string& what) : Error("band_exceeds_grid", what) {}
};

class TooFewPeaks : public Error {
public:
    explicit TooFewPeaks(const std::string& what) : Error("too_few_peaks", what) {}
};

class UndersampledTrain : public Error {
public:
    explicit UndersampledTrain(const std::string& what) : Error("undersampled_train", what) {}
};

class UnknownTarget : public Error {
public:
    explicit UnknownTarget(const std::string& name)
        : Error("unknown_target", "unknown sweep target: " + name) {}
};

class MissingParameter : public Error {
public:
    explicit MissingParameter(const std::string& what) : Error("missing_parameter", what) {}
};

class UnknownCase : public Error {
public:
    explicit UnknownCase(const std::string& name)
        : Error("unknown_case", "unknown reproduction case: " + name) {}
};

}  // namespace afc
