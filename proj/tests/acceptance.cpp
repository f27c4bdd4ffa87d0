// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gme/bipartition.hpp"
#include "gme/concurrence.hpp"
#include "gme/fixtures.hpp"
#include "gme/measures.hpp"
#include "gme/verify.hpp"

using namespace gme;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& summary, const std::vector<std::string>& details = {}) {
    fmt::print("criterion {}: {}  {}\n", id, ok ? "PASS" : "FAIL", summary);
    for (const auto& d : details) fmt::print("    {}\n", d);
    if (!ok) ++failures;
}

double max_cut_deviation(const ConcurrenceSpectrum& sp, double target) {
    double worst = 0.0;
    for (double v : sp.values()) worst = std::max(worst, std::abs(v - target));
    return worst;
}

void ghz4() {
    const auto sp = full_spectrum(ghz_state(4));
    const double v = volume(sp).volume;
    const double cut_dev = max_cut_deviation(sp, 1.0);
    const bool ok = std::abs(v - 1.0 / 3.0) <= 1e-6 && std::abs(v - 0.3333) <= 5e-5 && sp.values().size() == 7 &&
                    cut_dev <= 1e-12;
    report(1, ok, fmt::format("GHZ4 V = {:.4f} ({:.3e} from 1/3), max |C - 1| over 7 cuts = {:.1e}", v,
                              std::abs(v - 1.0 / 3.0), cut_dev));
}

void reference_examples() {
    bool ok = true;
    std::vector<std::string> lines;
    for (const auto& ref : fixtures::reference_states()) {
        if (ref.id.rfind("psi_", 0) != 0) continue;
        const auto sp = full_spectrum(ref.state);
        const double v = volume(sp).volume;
        const double c = c_gme(sp);
        const double dv = std::abs(v - *ref.volume);
        const double dc = std::abs(c - *ref.c_gme);
        const bool row_ok = dv <= 2e-3 && dc <= 1e-4;
        ok = ok && row_ok;
        lines.push_back(fmt::format("{:6} V = {:.4f} (ref {:.4f}, dev {:.1e})  C_GME = {:.4f} (ref {:.4f}, dev {:.1e})  {}{}",
                                    ref.id, v, *ref.volume, dv, c, *ref.c_gme, dc, row_ok ? "ok" : "MISMATCH",
                                    ref.note.empty() ? "" : "  [" + ref.note + "]"));
    }
    report(2, ok, "example states reproduce V within 2e-3 and C_GME within 1e-4", lines);
}

void biseparable_example() {
    const auto r = evaluate(fixtures::phi_12345(), "phi");
    const auto& zeros = r.classification.zero_cuts;
    const bool has_13 = std::find(zeros.begin(), zeros.end(), Bipartition({1, 3}, 5)) != zeros.end();
    const double v = *r.volume();
    const bool ok = v <= 1e-12 && has_13 && r.classification.label == Separability::biseparable;
    std::string cuts;
    for (const auto& z : zeros) cuts += "{" + z.label() + "} ";
    report(3, ok, fmt::format("phi_12345 V = {:.1e}, {}, zero cuts {}", v, to_string(r.classification.label), cuts));
}

void ghz_w_ordering() {
    const auto w = fixtures::w4();
    const double vg = volume(full_spectrum(ghz_state(4))).volume;
    const double vw = volume(full_spectrum(w)).volume;

    // independent evaluation of every cut through the explicit reduced density matrix
    std::vector<SpectrumEntry> dense;
    for (auto& cut : canonical_bipartition_list(4)) {
        const double purity = dense_oracle_purity(w, cut);
        dense.push_back({std::move(cut), std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)))});
    }
    const double vw_dense = volume(ConcurrenceSpectrum(w.dims(), std::move(dense))).volume;
    const bool ok = vg > vw && std::abs(vw - 0.25) <= 1e-12 && std::abs(vw_dense - 0.25) <= 1e-12;
    report(4, ok, fmt::format("V(GHZ4) = {:.4f} > V(W4) = {:.4f}", vg, vw),
           {fmt::format("dense-oracle V(W4) = {:.15f}, |fast - dense| = {:.1e}", vw_dense, std::abs(vw - vw_dense)),
            fmt::format("published W4 value 0.1875 differs by {:.4f}; reported as a discrepancy", vw - 0.1875)});
}

void formula_identity() {
    const auto n4 = verify::run_check(verify::Check::n4_formula_equivalence, {{2, 2, 2, 2}, 100, 501, 1e-12});
    double worst3 = 0.0;
    verify::Rng rng(502);
    for (int t = 0; t < 100; ++t) {
        const std::vector<int> dims{2 + t % 2, 2, 2 + (t / 2) % 2};
        const auto sp = full_spectrum(verify::haar_random_state(dims, rng));
        const auto singles = sp.singleton_values();
        const double prod = singles[0] * singles[1] * singles[2];
        const double expected = std::sqrt(3.0) / 12.0 * std::pow(prod, 2.0 / 3.0);
        worst3 = std::max(worst3, std::abs(volume(sp).volume - expected));
    }
    report(5, n4.passed && worst3 <= 1e-12,
           fmt::format("N=4 general vs a^2 h/3 max dev {:.1e}; N=3 vs sqrt3/12 (prod C)^(2/3) max dev {:.1e}",
                       n4.max_deviation, worst3));
}

void property_suite() {
    using verify::Check;
    struct Run {
        Check check;
        std::vector<int> dims;
        double tol;
    };
    const std::vector<Run> runs{
        {Check::lu_invariance, {2, 2, 2, 2}, 1e-9},
        {Check::lu_invariance, {3, 2, 2}, 1e-9},
        {Check::permutation_invariance, {2, 2, 2, 2}, 1e-10},
        {Check::permutation_invariance, {3, 2, 2, 2}, 1e-10},
        {Check::oracle_agreement, {3, 2, 2}, 1e-12},
        {Check::oracle_agreement, {3, 3, 2, 2}, 1e-12},
        {Check::oracle_agreement, {2, 2, 2, 2, 2, 2}, 1e-12},
        {Check::oracle_agreement, {2, 3, 2, 2, 2}, 1e-12},
        {Check::biseparable_nullity, {2, 2, 2, 2}, 1e-9},
        {Check::biseparable_nullity, {2, 2, 2, 2, 2}, 1e-9},
    };
    bool ok = true;
    std::vector<std::string> lines;
    std::uint64_t seed = 600;
    for (const auto& r : runs) {
        const auto o = verify::run_check(r.check, {r.dims, 100, seed++, r.tol});
        ok = ok && o.passed;
        lines.push_back(fmt::format("{:24} dims {:12} max dev {:.1e} <= {:.0e}  {}", verify::to_string(r.check),
                                    fmt::format("{}", fmt::join(r.dims, ",")), o.max_deviation, r.tol,
                                    o.passed ? "ok" : "FAIL"));
    }
    report(6, ok, "seeded property suite, 100 trials per run", lines);
}

void ghz_closed_form() {
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 8; ++n) {
        const double v = volume(full_spectrum(ghz_state(n))).volume;
        const double expected = n / 12.0 / std::tan(std::numbers::pi / n);
        ok = ok && std::abs(v - expected) <= 1e-9;
        detail += fmt::format("N={} {:.4f} ", n, v);
    }
    report(7, ok, "GHZ_N volume equals (N/12) cot(pi/N) within 1e-9: " + detail);
}

void tripartite() {
    const auto g = full_spectrum(ghz_state(3));
    const double fg = triangle_measure(g);
    const double fw = triangle_measure(full_spectrum(w_state(3)));
    const double vg = volume(g).volume;
    const bool ok = std::abs(fg - 1.0) <= 1e-12 && std::abs(fw - 8.0 / 9.0) <= 1e-12 &&
                    std::abs(vg - std::sqrt(3.0) / 12.0) <= 1e-12;
    report(8, ok, fmt::format("F(GHZ3) = {:.12f}, F(W3) = {:.12f}, V(GHZ3) = {:.12f}", fg, fw, vg));
}

void bipartition_counts() {
    bool ok = true;
    for (int n = 2; n <= 12; ++n) {
        std::uint64_t total = 0;
        for (const auto& g : canonical_bipartitions(n)) {
            const auto expected = 2 * g.size == n ? binomial(n, g.size) / 2 : binomial(n, g.size);
            ok = ok && g.cuts.size() == expected;
            total += g.cuts.size();
        }
        ok = ok && total == (std::uint64_t{1} << (n - 1)) - 1;
    }
    report(9, ok, "canonical cut counts 2^(N-1) - 1 with per-size groups for N = 2..12");
}

} // namespace

int main() {
    ghz4();
    reference_examples();
    biseparable_example();
    ghz_w_ordering();
    formula_identity();
    property_suite();
    ghz_closed_form();
    tripartite();
    bipartition_counts();
    fmt::print("{} of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
