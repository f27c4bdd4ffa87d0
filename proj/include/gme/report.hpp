#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gme/measures.hpp"
#include "gme/verify.hpp"

namespace gme {

inline constexpr const char* report_schema = "gme-report/1";
inline constexpr const char* tool_version = "0.1.0";

using json = nlohmann::ordered_json;

/// Which measures a report carries; the others are emitted as null.
struct MeasureSelection {
    bool volume = true;
    bool c_gme = true;
    bool triangle = true;
};

MeasureSelection parse_measure_selection(const std::string& name);

/// Reference value vs computed value for one quantity of one state.
struct ReferenceRow {
    std::string state;
    std::string quantity;  // "volume" or "c_gme"
    double expected = 0.0;
    double computed = 0.0;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool matches = false;
    std::string note;
};

struct ReportDocument {
    double zero_tolerance = default_zero_tolerance;
    MeasureSelection selection;
    std::vector<MeasureReport> states;
    std::vector<ReferenceRow> reference_rows;
    std::vector<verify::TrialOutcome> checks;
    std::vector<int> check_dims;
    std::optional<std::uint64_t> check_seed;
};

json to_json(const MeasureReport& report, const MeasureSelection& selection = {});
json to_json(const ReportDocument& doc);

/// Human-readable rendering with four decimals.
std::string render_text(const ReportDocument& doc);

/// Evaluates the embedded example states and compares against reference values.
ReportDocument reference_report();

/// Tolerances used for reference-value comparisons.
inline constexpr double reference_volume_tolerance = 2e-3;
inline constexpr double reference_cgme_tolerance = 1e-4;
inline constexpr double reference_zero_tolerance = 1e-12;

} // namespace gme
