#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gme/state.hpp"

namespace gme::verify {

class verify_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of substream `stream` of trial `trial` under a root seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0) noexcept;

using Rng = std::mt19937_64;

/// Normalized complex Gaussian amplitudes (Haar-uniform on the unit sphere).
PureState haar_random_state(std::span<const int> dims, std::uint64_t seed);
PureState haar_random_state(std::span<const int> dims, Rng& rng);

/// Haar unitary from the QR factors of a complex Ginibre matrix with the
/// diagonal phases of R folded into Q. Row-major d*d entries.
std::vector<complex_t> random_local_unitary(int d, std::uint64_t seed);
std::vector<complex_t> random_local_unitary(int d, Rng& rng);

/// max |(u u^dagger - I)_{rc}|.
double unitarity_defect(std::span<const complex_t> u, int d);

enum class Check {
    lu_invariance,
    permutation_invariance,
    oracle_agreement,
    biseparable_nullity,
    ghz_closed_form,
    n4_formula_equivalence,
};

std::string_view to_string(Check c);
Check parse_check(std::string_view name);
const std::vector<Check>& all_checks();

/// Default pass threshold of each check.
double default_tolerance(Check c);

struct TrialConfig {
    std::vector<int> dims;
    int trials = 100;
    std::uint64_t seed = 0;
    std::optional<double> tolerance;  // default_tolerance when unset
};

struct TrialOutcome {
    Check check;
    int trials = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    int worst_trial = 0;  // trial index whose substream produced max_deviation
};

TrialOutcome run_check(Check check, const TrialConfig& config);

/// Deviation observed in a single trial (exposed so failures can be replayed).
double run_trial(Check check, const TrialConfig& config, int trial);

} // namespace gme::verify
