#include "gme/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace gme {

std::string_view to_string(Separability s) {
    switch (s) {
    case Separability::fully_separable: return "fully-separable";
    case Separability::biseparable: return "biseparable";
    case Separability::gme: return "GME";
    }
    return "unknown";
}

double geometric_mean(std::span<const double> values, double zero_tol) {
    if (values.empty()) throw measure_error("geometric mean of an empty set");
    double log_sum = 0.0;
    for (double v : values) {
        if (v <= zero_tol) return 0.0;
        log_sum += std::log(v);
    }
    return std::exp(log_sum / static_cast<double>(values.size()));
}

double polygon_cot(int parties) {
    if (parties < 3) throw measure_error(fmt::format("no regular polygon with {} sides", parties));
    if (parties == 4) return 1.0;
    return 1.0 / std::tan(std::numbers::pi / parties);
}

double base_edge(const ConcurrenceSpectrum& spectrum, double zero_tol) {
    const auto singles = spectrum.singleton_values();
    return geometric_mean(singles, zero_tol);
}

double height(const ConcurrenceSpectrum& spectrum, double zero_tol) {
    const int n = spectrum.parties();
    if (n == 3) return 1.0;
    if (n < 3) throw measure_error("the pyramid height needs at least 3 parties");
    const auto multi = spectrum.multi_party_values();
    return geometric_mean(multi, zero_tol);
}

double base_area(int parties, double edge) {
    if (parties < 3) throw measure_error("the base polygon needs at least 3 parties");
    if (edge < 0.0) throw measure_error("base edge must be nonnegative");
    return parties * edge * edge / 4.0 * polygon_cot(parties);
}

double rectangular_pyramid_volume(double edge, double height) { return edge * edge * height / 3.0; }

PyramidGeometry volume(const ConcurrenceSpectrum& spectrum, double zero_tol) {
    const int n = spectrum.parties();
    if (n < 3)
        throw measure_error(
            "the pyramid volume needs at least 3 parties; use C_GME for bipartite states");
    PyramidGeometry g;
    g.parties = n;
    g.base_edge = base_edge(spectrum, zero_tol);
    g.height = height(spectrum, zero_tol);
    g.base_area = base_area(n, g.base_edge);
    if (n == 3)
        g.volume = std::numbers::sqrt3 / 12.0 * g.base_edge * g.base_edge;
    else
        g.volume = n * g.base_edge * g.base_edge / 12.0 * polygon_cot(n) * g.height;
    return g;
}

double triangle_measure(const ConcurrenceSpectrum& spectrum) {
    if (spectrum.parties() != 3)
        throw measure_error(
            fmt::format("the triangle measure needs 3 parties, got {}", spectrum.parties()));
    const auto singles = spectrum.singleton_values();
    double q = 0.0;
    for (double c : singles) q += c * c;
    q /= 2.0;
    double product = 16.0 / 3.0 * q;
    for (double c : singles) {
        double side = q - c * c;
        if (side < 0.0) {
            if (side < -1e-12) throw measure_error("squared concurrences violate the triangle inequality");
            side = 0.0;
        }
        product *= side;
    }
    return std::pow(product, 0.25);
}

double c_gme(const ConcurrenceSpectrum& spectrum) {
    const auto values = spectrum.values();
    return *std::min_element(values.begin(), values.end());
}

Classification classify(const ConcurrenceSpectrum& spectrum, double tol) {
    Classification out{Separability::gme, {}};
    bool all_singletons_zero = true;
    for (const auto& e : spectrum.entries()) {
        const bool zero = e.value <= tol;
        if (zero) out.zero_cuts.push_back(e.cut);
        if (e.cut.is_singleton() && !zero) all_singletons_zero = false;
    }
    if (all_singletons_zero)
        out.label = Separability::fully_separable;
    else if (!out.zero_cuts.empty())
        out.label = Separability::biseparable;
    return out;
}

MeasureReport evaluate(ConcurrenceSpectrum spectrum, std::string id, double tol) {
    std::optional<PyramidGeometry> geometry;
    if (spectrum.parties() >= 3) geometry = volume(spectrum, tol);
    std::optional<double> triangle;
    if (spectrum.parties() == 3) triangle = triangle_measure(spectrum);
    const double cg = c_gme(spectrum);
    auto cls = classify(spectrum, tol);
    auto dims = spectrum.dims();
    return MeasureReport{std::move(id), std::move(dims), geometry, cg, triangle, std::move(cls),
                         std::move(spectrum), tol};
}

MeasureReport evaluate(const PureState& state, std::string id, double tol) {
    return evaluate(full_spectrum(state), std::move(id), tol);
}

} // namespace gme
