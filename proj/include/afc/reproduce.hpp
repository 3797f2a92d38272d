#pragma once

#include <string>
#include <vector>

namespace afc {

/// One paper-anchored number: the toolkit's value next to the published one.
struct ReproCase {
    std::string name;
    std::string description;
    double computed{};
    double paper_value{};
    double tolerance{};
    std::string note;

    bool pass() const;
};

std::vector<std::string> repro_case_names();
ReproCase run_repro_case(const std::string& name);
std::vector<ReproCase> run_all_repro_cases();

/// Writes the figure-reproduction tables (spectrum, capacity maps, bandwidth
/// sweep, spectral-budget curves, coherence-time table) as CSV files into
/// `directory`, which must exist. Returns the file names written.
std::vector<std::string> write_figure_tables(const std::string& directory);

}  // namespace afc
