#include "gme/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "gme/bipartition.hpp"
#include "gme/concurrence.hpp"
#include "gme/measures.hpp"

namespace gme::verify {

namespace {

struct CheckInfo {
    Check check;
    std::string_view name;
    double tolerance;
};

constexpr std::array<CheckInfo, 6> check_table{{
    {Check::lu_invariance, "lu-invariance", 1e-9},
    {Check::permutation_invariance, "permutation-invariance", 1e-10},
    {Check::oracle_agreement, "oracle-agreement", 1e-12},
    {Check::biseparable_nullity, "biseparable-nullity", 1e-9},
    {Check::ghz_closed_form, "ghz-closed-form", 1e-9},
    {Check::n4_formula_equivalence, "n4-formula-equivalence", 1e-12},
}};

const CheckInfo& info(Check c) {
    return *std::find_if(check_table.begin(), check_table.end(),
                         [c](const CheckInfo& i) { return i.check == c; });
}

std::vector<complex_t> gaussian_vector(std::size_t n, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    std::vector<complex_t> v(n);
    for (auto& z : v) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
    }
    return v;
}

double pyramid_volume(const PureState& s) { return volume(full_spectrum(s)).volume; }

void require_parties(Check c, const TrialConfig& config, int min_parties) {
    if (static_cast<int>(config.dims.size()) < min_parties)
        throw verify_error(fmt::format("{} needs at least {} parties", to_string(c), min_parties));
}

// Product of a random |alpha>_S and |beta>_rest across a random cut.
PureState random_biseparable(std::span<const int> dims, Rng& rng) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::vector<bool> in_s(static_cast<std::size_t>(n), false);
    for (int i = 0; i < k; ++i) in_s[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - 1)] = true;

    std::vector<int> s_dims, rest_dims;
    for (int f = 0; f < n; ++f) (in_s[static_cast<std::size_t>(f)] ? s_dims : rest_dims).push_back(dims[static_cast<std::size_t>(f)]);
    const auto alpha = gaussian_vector(total_dimension(s_dims), rng);
    const auto beta = gaussian_vector(total_dimension(rest_dims), rng);

    std::vector<complex_t> amps(total_dimension(dims));
    std::vector<int> s_digits, rest_digits;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const auto digits = basis_digits(dims, i);
        s_digits.clear();
        rest_digits.clear();
        for (int f = 0; f < n; ++f)
            (in_s[static_cast<std::size_t>(f)] ? s_digits : rest_digits).push_back(digits[static_cast<std::size_t>(f)]);
        amps[i] = alpha[flat_index(s_dims, s_digits)] * beta[flat_index(rest_dims, rest_digits)];
    }
    return PureState(std::vector<int>(dims.begin(), dims.end()), std::move(amps), Normalization::rescale);
}

PureState random_local_rotation(PureState s, Rng& rng) {
    for (int site = 1; site <= s.parties(); ++site) {
        const auto u = random_local_unitary(s.dims()[static_cast<std::size_t>(site - 1)], rng);
        s = apply_local_unitary(s, site, u);
    }
    return s;
}

} // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) noexcept {
    return mix64(mix64(mix64(seed) ^ trial) ^ stream);
}

PureState haar_random_state(std::span<const int> dims, Rng& rng) {
    auto amps = gaussian_vector(total_dimension(dims), rng);
    return PureState(std::vector<int>(dims.begin(), dims.end()), std::move(amps), Normalization::rescale);
}

PureState haar_random_state(std::span<const int> dims, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_state(dims, rng);
}

std::vector<complex_t> random_local_unitary(int d, Rng& rng) {
    if (d < 1) throw verify_error("unitary dimension must be positive");
    const auto g = gaussian_vector(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), rng);
    Eigen::MatrixXcd ginibre(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) ginibre(r, c) = g[static_cast<std::size_t>(r * d + c)];

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& packed = qr.matrixQR();
    for (int c = 0; c < d; ++c) {
        const complex_t diag = packed(c, c);
        const double mag = std::abs(diag);
        if (mag > 0.0) q.col(c) *= diag / mag;
    }

    std::vector<complex_t> u(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) u[static_cast<std::size_t>(r * d + c)] = q(r, c);
    return u;
}

std::vector<complex_t> random_local_unitary(int d, std::uint64_t seed) {
    Rng rng(seed);
    return random_local_unitary(d, rng);
}

double unitarity_defect(std::span<const complex_t> u, int d) {
    const auto n = static_cast<std::size_t>(d);
    double worst = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            complex_t acc{};
            for (std::size_t k = 0; k < n; ++k) acc += u[r * n + k] * std::conj(u[c * n + k]);
            worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
        }
    return worst;
}

std::string_view to_string(Check c) { return info(c).name; }

Check parse_check(std::string_view name) {
    for (const auto& i : check_table)
        if (i.name == name) return i.check;
    throw verify_error(fmt::format("unknown check '{}'", name));
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = [] {
        std::vector<Check> out;
        for (const auto& i : check_table) out.push_back(i.check);
        return out;
    }();
    return checks;
}

double default_tolerance(Check c) { return info(c).tolerance; }

double run_trial(Check check, const TrialConfig& config, int trial) {
    Rng rng(substream_seed(config.seed, static_cast<std::uint64_t>(trial)));
    const auto& dims = config.dims;

    switch (check) {
    case Check::lu_invariance: {
        require_parties(check, config, 3);
        const auto s = haar_random_state(dims, rng);
        const auto rotated = random_local_rotation(s, rng);
        return std::abs(pyramid_volume(rotated) - pyramid_volume(s));
    }
    case Check::permutation_invariance: {
        require_parties(check, config, 3);
        const auto s = haar_random_state(dims, rng);
        std::vector<int> perm(dims.size());
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto before = evaluate(s, "original");
        const auto after = evaluate(permute_subsystems(s, perm), "permuted");
        double dev = std::abs(*after.volume() - *before.volume());
        dev = std::max(dev, std::abs(after.c_gme - before.c_gme));
        if (before.triangle) dev = std::max(dev, std::abs(*after.triangle - *before.triangle));
        return dev;
    }
    case Check::oracle_agreement: {
        const auto s = haar_random_state(dims, rng);
        double dev = 0.0;
        for (const auto& cut : canonical_bipartition_list(s.parties())) {
            dev = std::max(dev, std::abs(reduced_purity(s, cut) - dense_oracle_purity(s, cut)));
            const auto rest = complement(cut);
            std::size_t rest_dim = 1;
            for (int p : rest) rest_dim *= static_cast<std::size_t>(dims[static_cast<std::size_t>(p - 1)]);
            if (rest_dim <= dense_oracle_cap)
                dev = std::max(dev, std::abs(reduced_purity(s, rest) - dense_oracle_purity(s, rest)));
        }
        return dev;
    }
    case Check::biseparable_nullity: {
        require_parties(check, config, 3);
        return pyramid_volume(random_biseparable(dims, rng));
    }
    case Check::ghz_closed_form: {
        const int n_max = static_cast<int>(dims.size());
        if (n_max < 4 || std::any_of(dims.begin(), dims.end(), [](int d) { return d != 2; }))
            throw verify_error("ghz-closed-form needs a qubit profile with at least 4 parties");
        const int n = 4 + trial % (n_max - 3);
        const auto s = random_local_rotation(ghz_state(n), rng);
        const double expected = n / 12.0 / std::tan(std::numbers::pi / n);
        return std::abs(pyramid_volume(s) - expected);
    }
    case Check::n4_formula_equivalence: {
        if (dims.size() != 4) throw verify_error("n4-formula-equivalence needs exactly 4 parties");
        const auto spectrum = full_spectrum(haar_random_state(dims, rng));
        const auto g = volume(spectrum);
        return std::abs(g.volume - rectangular_pyramid_volume(g.base_edge, g.height));
    }
    }
    throw verify_error("unhandled check");
}

TrialOutcome run_check(Check check, const TrialConfig& config) {
    if (config.trials < 1) throw verify_error("trial count must be at least 1");
    if (config.dims.size() < 2) throw verify_error("dims profile needs at least 2 parties");
    total_dimension(config.dims);

    TrialOutcome out;
    out.check = check;
    out.tolerance = config.tolerance.value_or(default_tolerance(check));
    for (int t = 0; t < config.trials; ++t) {
        const double dev = run_trial(check, config, t);
        if (t == 0 || dev > out.max_deviation) {
            out.max_deviation = dev;
            out.worst_trial = t;
        }
        ++out.trials;
    }
    out.passed = out.max_deviation <= out.tolerance;
    return out;
}

} // namespace gme::verify
