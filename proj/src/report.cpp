#include "gme/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gme/fixtures.hpp"

namespace gme {

namespace {

json optional_number(bool selected, const std::optional<double>& v) {
    if (!selected || !v) return nullptr;
    return *v;
}

std::vector<std::string> report_notes(const MeasureReport& r) {
    std::vector<std::string> notes;
    if (r.parties() == 2) notes.emplace_back("pyramid volume undefined for 2 parties");
    if (r.parties() == 3 && std::any_of(r.dims.begin(), r.dims.end(), [](int d) { return d != 2; }))
        notes.emplace_back("triangle measure originates for three qubits; evaluated on general local dimensions");
    return notes;
}

std::string fmt4(const std::optional<double>& v) { return v ? fmt::format("{:.4f}", *v) : "n/a"; }

ReferenceRow make_row(const std::string& state, const char* quantity, double expected, double computed,
                      double tolerance, std::string note) {
    ReferenceRow row{state, quantity, expected, computed, std::abs(computed - expected), tolerance, false,
                     std::move(note)};
    row.matches = row.deviation <= row.tolerance;
    return row;
}

} // namespace

MeasureSelection parse_measure_selection(const std::string& name) {
    if (name == "all") return {};
    if (name == "volume") return {true, false, false};
    if (name == "cgme") return {false, true, false};
    if (name == "triangle") return {false, false, true};
    throw std::invalid_argument(fmt::format("unknown measure '{}'", name));
}

json to_json(const MeasureReport& r, const MeasureSelection& sel) {
    json j;
    j["id"] = r.id;
    j["dims"] = r.dims;
    j["volume"] = optional_number(sel.volume, r.volume());
    j["c_gme"] = optional_number(sel.c_gme, r.c_gme);
    j["triangle"] = optional_number(sel.triangle, r.triangle);
    j["classification"] = std::string(to_string(r.classification.label));
    if (sel.volume && r.geometry)
        j["geometry"] = {{"base_edge", r.geometry->base_edge},
                         {"height", r.geometry->height},
                         {"base_area", r.geometry->base_area}};
    else
        j["geometry"] = nullptr;
    json conc = json::object();
    for (const auto& e : r.spectrum.entries()) conc[e.cut.label()] = e.value;
    j["concurrences"] = std::move(conc);
    json zeros = json::array();
    for (const auto& c : r.classification.zero_cuts) zeros.push_back(c.label());
    j["zero_cuts"] = std::move(zeros);
    j["notes"] = report_notes(r);
    return j;
}

json to_json(const ReportDocument& doc) {
    json j;
    j["schema"] = report_schema;
    j["tool_version"] = tool_version;
    j["tolerances"] = {{"zero", doc.zero_tolerance}};
    json states = json::array();
    for (const auto& s : doc.states) states.push_back(to_json(s, doc.selection));
    j["states"] = std::move(states);
    if (!doc.reference_rows.empty()) {
        json rows = json::array();
        for (const auto& r : doc.reference_rows)
            rows.push_back({{"state", r.state},
                            {"quantity", r.quantity},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"deviation", r.deviation},
                            {"tolerance", r.tolerance},
                            {"status", r.matches ? "match" : "discrepancy"},
                            {"note", r.note}});
        j["paper_rows"] = std::move(rows);
    }
    if (!doc.checks.empty()) {
        json checks = json::array();
        for (const auto& c : doc.checks)
            checks.push_back({{"check", std::string(verify::to_string(c.check))},
                              {"dims", doc.check_dims},
                              {"seed", doc.check_seed.value_or(0)},
                              {"trials", c.trials},
                              {"max_deviation", c.max_deviation},
                              {"tolerance", c.tolerance},
                              {"passed", c.passed},
                              {"worst_trial", c.worst_trial}});
        j["checks"] = std::move(checks);
    }
    return j;
}

std::string render_text(const ReportDocument& doc) {
    std::string out;
    for (const auto& r : doc.states) {
        out += fmt::format("state {}\n", r.id);
        out += fmt::format("  dims            {}\n", fmt::join(r.dims, " "));
        out += fmt::format("  classification  {}\n", to_string(r.classification.label));
        if (doc.selection.volume) {
            out += fmt::format("  volume V        {}\n", fmt4(r.volume()));
            if (r.geometry)
                out += fmt::format("    a = {:.4f}  h = {:.4f}  base area = {:.4f}\n", r.geometry->base_edge,
                                   r.geometry->height, r.geometry->base_area);
        }
        if (doc.selection.c_gme) out += fmt::format("  C_GME           {:.4f}\n", r.c_gme);
        if (doc.selection.triangle && r.triangle) out += fmt::format("  F_123           {:.4f}\n", *r.triangle);
        out += "  concurrences\n";
        int group = 0;
        for (const auto& e : r.spectrum.entries()) {
            if (e.cut.size() != group) {
                group = e.cut.size();
                out += fmt::format("    # k={}\n", group);
            }
            out += fmt::format("    {:<14} {:.4f}\n", e.cut.label(), e.value);
        }
        std::vector<std::string> zeros;
        for (const auto& c : r.classification.zero_cuts) zeros.push_back("{" + c.label() + "}");
        out += fmt::format("  zero cuts       {}\n", zeros.empty() ? "none" : fmt::format("{}", fmt::join(zeros, " ")));
        for (const auto& note : report_notes(r)) out += fmt::format("  note: {}\n", note);
        out += '\n';
    }
    if (!doc.reference_rows.empty()) {
        out += fmt::format("{:<10} {:<7} {:>9} {:>9} {:>10}  {}\n", "state", "measure", "reference", "computed",
                           "deviation", "status");
        for (const auto& r : doc.reference_rows) {
            out += fmt::format("{:<10} {:<7} {:>9.4f} {:>9.4f} {:>10.2e}  {}", r.state, r.quantity, r.expected,
                               r.computed, r.deviation, r.matches ? "match" : "DISCREPANCY");
            if (!r.note.empty()) out += fmt::format(" ({})", r.note);
            out += '\n';
        }
    }
    for (const auto& c : doc.checks)
        out += fmt::format("{:<24} trials={:<5} max deviation={:.3e} tolerance={:.1e} worst trial={}  {}\n",
                           verify::to_string(c.check), c.trials, c.max_deviation, c.tolerance, c.worst_trial,
                           c.passed ? "PASS" : "FAIL");
    return out;
}

ReportDocument reference_report() {
    ReportDocument doc;
    for (auto& fixture : fixtures::reference_states()) {
        auto report = evaluate(fixture.state, fixture.id);
        if (fixture.volume) {
            const double tol = *fixture.volume == 0.0 ? reference_zero_tolerance : reference_volume_tolerance;
            doc.reference_rows.push_back(
                make_row(fixture.id, "volume", *fixture.volume, *report.volume(), tol, fixture.note));
        }
        if (fixture.c_gme)
            doc.reference_rows.push_back(
                make_row(fixture.id, "c_gme", *fixture.c_gme, report.c_gme, reference_cgme_tolerance, ""));
        doc.states.push_back(std::move(report));
    }
    return doc;
}

} // namespace gme
