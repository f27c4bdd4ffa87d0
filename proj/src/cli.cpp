#include "gme/cli.hpp"

#include <algorithm>
#include <charconv>
#include <future>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gme/bipartition.hpp"
#include "gme/report.hpp"

namespace gme {

namespace {

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string_view tok(text.data() + pos, end - pos);
        int d = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || d < 2)
            throw std::invalid_argument(fmt::format("invalid dims '{}': expected comma-separated integers >= 2", text));
        dims.push_back(d);
        pos = end + 1;
    }
    if (dims.size() < 2) throw std::invalid_argument("dims needs at least 2 entries");
    return dims;
}

void emit(const ReportDocument& doc, bool as_json, std::ostream& out) {
    if (as_json)
        out << to_json(doc).dump(2) << '\n';
    else
        out << render_text(doc);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric genuine multipartite entanglement measures for pure states", "gme"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    std::vector<std::string> files;
    std::string measure = "all";
    double tol = default_zero_tolerance;
    bool normalize = false;
    bool eval_json = false;
    auto* eval = app.add_subcommand("eval", "Evaluate the measures of states read from files");
    eval->add_option("files", files, "State files")->required()->check(CLI::ExistingFile);
    eval->add_option("--measure", measure, "volume|cgme|triangle|all")
        ->check(CLI::IsMember({"volume", "cgme", "triangle", "all"}));
    eval->add_option("--tol", tol, "Zero tolerance on concurrences")->check(CLI::NonNegativeNumber);
    eval->add_flag("--normalize", normalize, "Rescale input amplitudes to unit norm");
    eval->add_flag("--json", eval_json, "Emit the JSON report");

    int parties = 0;
    auto* bip = app.add_subcommand("bipartitions", "List the canonical bipartitions of N parties");
    bip->add_option("N", parties, "Party count")->required()->check(CLI::Range(2, max_enumerated_parties));

    bool paper_json = false;
    auto* paper = app.add_subcommand("paper", "Reproduce the reference example values");
    paper->add_flag("--json", paper_json, "Emit the JSON report");

    std::string dims_text;
    std::uint64_t seed = 0;
    int trials = 100;
    std::string check_name;
    bool random_json = false;
    auto* random = app.add_subcommand("random", "Run a seeded randomized property check");
    random->add_option("--dims", dims_text, "Local dimensions, e.g. 2,2,2,2")->required();
    random->add_option("--seed", seed, "Root seed")->required();
    random->add_option("--trials", trials, "Trial count")->check(CLI::PositiveNumber);
    std::vector<std::string> check_names;
    for (auto c : verify::all_checks()) check_names.emplace_back(verify::to_string(c));
    random->add_option("--check", check_name, "Check name")->required()->check(CLI::IsMember(check_names));
    random->add_flag("--json", random_json, "Emit the JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            const auto selection = parse_measure_selection(measure);
            const auto mode = normalize ? Normalization::rescale : Normalization::verify;
            std::vector<std::future<MeasureReport>> jobs;
            for (const auto& f : files)
                jobs.push_back(std::async(std::launch::async, [&, f] {
                    auto state = read_state_file(f, mode);
                    if (measure == "volume" && state.parties() < 3)
                        throw measure_error("the pyramid volume needs at least 3 parties; use --measure cgme");
                    if (measure == "triangle" && state.parties() != 3)
                        throw measure_error("the triangle measure needs exactly 3 parties");
                    return evaluate(state, f, tol);
                }));
            ReportDocument doc;
            doc.zero_tolerance = tol;
            doc.selection = selection;
            int status = 0;
            for (std::size_t i = 0; i < jobs.size(); ++i) {
                try {
                    doc.states.push_back(jobs[i].get());
                } catch (const std::exception& e) {
                    err << fmt::format("error: {}: {}\n", files[i], e.what());
                    status = 1;
                }
            }
            if (status == 0) emit(doc, eval_json, out);
            return status;
        }
        if (bip->parsed()) {
            for (const auto& group : canonical_bipartitions(parties)) {
                out << fmt::format("# k={}\n", group.size);
                for (const auto& cut : group.cuts) out << cut.label() << '\n';
            }
            return 0;
        }
        if (paper->parsed()) {
            emit(reference_report(), paper_json, out);
            return 0;
        }
        if (random->parsed()) {
            verify::TrialConfig config;
            try {
                config.dims = parse_dims(dims_text);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << '\n';
                return 2;
            }
            config.trials = trials;
            config.seed = seed;
            const auto check = verify::parse_check(check_name);
            ReportDocument doc;
            doc.checks.push_back(verify::run_check(check, config));
            doc.check_dims = config.dims;
            doc.check_seed = seed;
            emit(doc, random_json, out);
            return doc.checks.front().passed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace gme
