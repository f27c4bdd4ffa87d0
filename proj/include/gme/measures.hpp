#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gme/concurrence.hpp"

namespace gme {

/// Concurrences at or below this are treated as zero by default.
inline constexpr double default_zero_tolerance = 1e-9;

class measure_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Regular N-gon pyramid built from a concurrence spectrum.
struct PyramidGeometry {
    int parties = 0;
    double base_edge = 0.0;  // a
    double height = 0.0;     // h, fixed to 1 for three parties
    double base_area = 0.0;
    double volume = 0.0;
};

enum class Separability { fully_separable, biseparable, gme };

std::string_view to_string(Separability s);

struct Classification {
    Separability label;
    std::vector<Bipartition> zero_cuts;
};

/// Geometric mean, computed as exp(mean(log x)). Returns exactly 0 when any
/// factor is <= zero_tol, without taking its logarithm.
double geometric_mean(std::span<const double> values, double zero_tol = default_zero_tolerance);

/// cot(pi / n); exactly 1 for the square base.
double polygon_cot(int parties);

/// a = (prod_i C_{i|rest})^{1/N}.
double base_edge(const ConcurrenceSpectrum& spectrum, double zero_tol = default_zero_tolerance);

/// h = geometric mean over the 2^{N-1} - N - 1 canonical cuts with |S| >= 2; 1 for N = 3.
double height(const ConcurrenceSpectrum& spectrum, double zero_tol = default_zero_tolerance);

/// Area of the regular n-gon with side a: (n a^2 / 4) cot(pi/n).
double base_area(int parties, double edge);

/// Square pyramid volume a^2 h / 3.
double rectangular_pyramid_volume(double edge, double height);

/// Volume of the concurrence pyramid: (sqrt3/12) a^2 for N = 3,
/// (N a^2 / 12) cot(pi/N) h for N >= 4. Rejects N = 2.
PyramidGeometry volume(const ConcurrenceSpectrum& spectrum, double zero_tol = default_zero_tolerance);

/// Triangle measure on squared singleton concurrences; N = 3 only.
double triangle_measure(const ConcurrenceSpectrum& spectrum);

/// Minimum concurrence over all canonical cuts.
double c_gme(const ConcurrenceSpectrum& spectrum);

Classification classify(const ConcurrenceSpectrum& spectrum, double tol = default_zero_tolerance);

/// Everything computed for one state.
struct MeasureReport {
    std::string id;
    std::vector<int> dims;
    std::optional<PyramidGeometry> geometry;  // absent for N = 2
    double c_gme = 0.0;
    std::optional<double> triangle;           // N = 3 only
    Classification classification;
    ConcurrenceSpectrum spectrum;
    double tolerance = default_zero_tolerance;

    [[nodiscard]] int parties() const noexcept { return static_cast<int>(dims.size()); }
    [[nodiscard]] std::optional<double> volume() const {
        return geometry ? std::optional<double>(geometry->volume) : std::nullopt;
    }
};

MeasureReport evaluate(const PureState& state, std::string id, double tol = default_zero_tolerance);
MeasureReport evaluate(ConcurrenceSpectrum spectrum, std::string id, double tol = default_zero_tolerance);

} // namespace gme
