#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gme/bipartition.hpp"
#include "gme/state.hpp"

namespace gme {

/// Largest reduced dimension prod_{f in S} d_f handled by the dense oracle.
inline constexpr std::size_t dense_oracle_cap = 4096;

/// Tr(rho_S^2) via the squared Frobenius norm of the Gram matrix of the
/// amplitudes reshaped to (prod_{f in S} d_f) x (prod_{f not in S} d_f).
/// `subset` is any nonempty proper subset of 1..N, not necessarily canonical.
double reduced_purity(const PureState& state, std::span<const int> subset);
double reduced_purity(const PureState& state, const Bipartition& cut);

/// Radicands 2 (1 - purity) at or below this are rounding noise and map to C = 0.
/// Purity carries ~1e-16 absolute error, which the square root would inflate to ~1e-8.
inline constexpr double radicand_floor = 1e-12;

/// sqrt(2 (1 - Tr rho_S^2)); 0 when the radicand is at or below radicand_floor.
double concurrence(const PureState& state, std::span<const int> subset);
double concurrence(const PureState& state, const Bipartition& cut);

/// Independent reference: builds rho_S by explicit summation over the
/// complement and returns Tr(rho_S rho_S). Throws when the reduced dimension
/// exceeds dense_oracle_cap.
double dense_oracle_purity(const PureState& state, std::span<const int> subset);
double dense_oracle_purity(const PureState& state, const Bipartition& cut);

/// Largest concurrence a pure state can carry across a cut with smaller side dimension m.
double max_concurrence(std::size_t m);

struct SpectrumEntry {
    Bipartition cut;
    double value;
};

/// Concurrence of every canonical cut, in canonical_bipartition_list order.
class ConcurrenceSpectrum {
  public:
    ConcurrenceSpectrum(std::vector<int> dims, std::vector<SpectrumEntry> entries);

    [[nodiscard]] int parties() const noexcept { return static_cast<int>(dims_.size()); }
    [[nodiscard]] const std::vector<int>& dims() const noexcept { return dims_; }
    [[nodiscard]] const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }

    /// Value for a cut given by either side.
    [[nodiscard]] double at(std::span<const int> subset) const;
    [[nodiscard]] double at(const Bipartition& cut) const;

    /// C_{i|rest} for i = 1..N.
    [[nodiscard]] std::vector<double> singleton_values() const;
    /// Concurrences of every canonical cut with |S| >= 2.
    [[nodiscard]] std::vector<double> multi_party_values() const;
    [[nodiscard]] std::vector<double> values() const;

  private:
    std::vector<int> dims_;
    std::vector<SpectrumEntry> entries_;
};

/// Evaluates every canonical cut. `threads` = 0 picks a count from the
/// hardware for large states; the result does not depend on it.
ConcurrenceSpectrum full_spectrum(const PureState& state, unsigned threads = 0);

} // namespace gme
