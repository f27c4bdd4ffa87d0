#include "gme/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace gme {

namespace {

using RowMajorMatrix = Eigen::Matrix<complex_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Below this many amplitudes the spectrum sweep stays on the calling thread.
constexpr std::size_t parallel_threshold = std::size_t{1} << 14;

struct CutLayout {
    std::vector<bool> in_subset;  // 0-based party -> side
    std::size_t rows = 1;         // prod_{f in S} d_f
    std::size_t cols = 1;
};

CutLayout layout_for(const PureState& state, std::span<const int> subset) {
    const int n = state.parties();
    CutLayout layout;
    layout.in_subset.assign(static_cast<std::size_t>(n), false);
    for (int p : subset) {
        if (p < 1 || p > n) throw std::invalid_argument(fmt::format("party {} outside 1..{}", p, n));
        if (layout.in_subset[static_cast<std::size_t>(p - 1)])
            throw std::invalid_argument(fmt::format("party {} repeated in cut", p));
        layout.in_subset[static_cast<std::size_t>(p - 1)] = true;
    }
    if (subset.empty() || subset.size() == static_cast<std::size_t>(n))
        throw std::invalid_argument("a cut needs parties on both sides");
    for (int f = 0; f < n; ++f)
        (layout.in_subset[static_cast<std::size_t>(f)] ? layout.rows : layout.cols) *=
            static_cast<std::size_t>(state.dims()[static_cast<std::size_t>(f)]);
    return layout;
}

double gram_purity(const Eigen::Ref<const RowMajorMatrix>& m) {
    const double purity = m.rows() <= m.cols() ? (m * m.adjoint()).squaredNorm()
                                               : (m.adjoint() * m).squaredNorm();
    return std::clamp(purity, 0.0, 1.0);
}

} // namespace

double reduced_purity(const PureState& state, std::span<const int> subset) {
    const auto layout = layout_for(state, subset);
    const auto& dims = state.dims();
    const auto n = dims.size();
    const auto amps = state.amplitudes();

    // A side made of leading parties is already a row-major reshape.
    const auto leading = static_cast<std::size_t>(
        std::find(layout.in_subset.begin(), layout.in_subset.end(), !layout.in_subset.front()) -
        layout.in_subset.begin());
    if (std::all_of(layout.in_subset.begin() + static_cast<std::ptrdiff_t>(leading),
                    layout.in_subset.end(),
                    [&](bool b) { return b != layout.in_subset.front(); })) {
        const auto rows = layout.in_subset.front() ? layout.rows : layout.cols;
        const auto cols = amps.size() / rows;
        Eigen::Map<const RowMajorMatrix> m(amps.data(), static_cast<Eigen::Index>(rows),
                                           static_cast<Eigen::Index>(cols));
        return gram_purity(m);
    }

    // Weight of each party inside its side's mixed-radix index.
    std::vector<std::size_t> weight(n);
    std::size_t row_acc = 1, col_acc = 1;
    for (std::size_t f = n; f-- > 0;) {
        auto& acc = layout.in_subset[f] ? row_acc : col_acc;
        weight[f] = acc;
        acc *= static_cast<std::size_t>(dims[f]);
    }

    RowMajorMatrix m(static_cast<Eigen::Index>(layout.rows), static_cast<Eigen::Index>(layout.cols));
    complex_t* out = m.data();
    std::vector<int> digits(n, 0);
    std::size_t r = 0, c = 0;
    for (std::size_t src = 0; src < amps.size(); ++src) {
        out[r * layout.cols + c] = amps[src];
        for (std::size_t f = n; f-- > 0;) {
            auto& pos = layout.in_subset[f] ? r : c;
            if (++digits[f] < dims[f]) {
                pos += weight[f];
                break;
            }
            pos -= weight[f] * static_cast<std::size_t>(dims[f] - 1);
            digits[f] = 0;
        }
    }
    return gram_purity(m);
}

double reduced_purity(const PureState& state, const Bipartition& cut) {
    if (cut.parties() != state.parties())
        throw std::invalid_argument("cut party count differs from the state");
    return reduced_purity(state, cut.subset());
}

double concurrence(const PureState& state, std::span<const int> subset) {
    const double radicand = 2.0 * (1.0 - reduced_purity(state, subset));
    return radicand > radicand_floor ? std::sqrt(radicand) : 0.0;
}

double concurrence(const PureState& state, const Bipartition& cut) {
    if (cut.parties() != state.parties())
        throw std::invalid_argument("cut party count differs from the state");
    return concurrence(state, cut.subset());
}

double dense_oracle_purity(const PureState& state, std::span<const int> subset) {
    const auto layout = layout_for(state, subset);
    if (layout.rows > dense_oracle_cap)
        throw std::invalid_argument(fmt::format("reduced dimension {} exceeds the dense oracle cap {}",
                                                layout.rows, dense_oracle_cap));
    const auto& dims = state.dims();
    const auto n = dims.size();

    std::vector<int> kept_dims, traced_dims;
    std::vector<std::size_t> kept_pos, traced_pos;
    for (std::size_t f = 0; f < n; ++f) {
        if (layout.in_subset[f]) {
            kept_dims.push_back(dims[f]);
            kept_pos.push_back(f);
        } else {
            traced_dims.push_back(dims[f]);
            traced_pos.push_back(f);
        }
    }

    // rho[r][r'] = sum_c psi(r, c) conj(psi(r', c)), assembled digit by digit.
    const auto d_s = layout.rows;
    std::vector<complex_t> rho(d_s * d_s);
    std::vector<int> full(n);
    std::vector<complex_t> psi_rc(d_s);
    for (std::size_t c = 0; c < layout.cols; ++c) {
        const auto traced_digits = basis_digits(traced_dims, c);
        for (std::size_t t = 0; t < traced_pos.size(); ++t) full[traced_pos[t]] = traced_digits[t];
        for (std::size_t r = 0; r < d_s; ++r) {
            const auto kept_digits = basis_digits(kept_dims, r);
            for (std::size_t k = 0; k < kept_pos.size(); ++k) full[kept_pos[k]] = kept_digits[k];
            psi_rc[r] = state.amplitude(full);
        }
        for (std::size_t r = 0; r < d_s; ++r)
            for (std::size_t rp = 0; rp < d_s; ++rp) rho[r * d_s + rp] += psi_rc[r] * std::conj(psi_rc[rp]);
    }

    double trace = 0.0;
    for (std::size_t r = 0; r < d_s; ++r)
        for (std::size_t rp = 0; rp < d_s; ++rp) trace += (rho[r * d_s + rp] * rho[rp * d_s + r]).real();
    return trace;
}

double dense_oracle_purity(const PureState& state, const Bipartition& cut) {
    return dense_oracle_purity(state, cut.subset());
}

double max_concurrence(std::size_t m) {
    const auto md = static_cast<double>(m);
    return std::sqrt(2.0 * (md - 1.0) / md);
}

ConcurrenceSpectrum::ConcurrenceSpectrum(std::vector<int> dims, std::vector<SpectrumEntry> entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
    const auto n = static_cast<int>(dims_.size());
    const auto expected = (std::size_t{1} << (n - 1)) - 1;
    if (entries_.size() != expected)
        throw std::invalid_argument(
            fmt::format("spectrum over {} parties needs {} cuts, got {}", n, expected, entries_.size()));
    for (const auto& e : entries_)
        if (e.cut.parties() != n) throw std::invalid_argument("spectrum cut party count mismatch");
}

double ConcurrenceSpectrum::at(const Bipartition& cut) const {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const SpectrumEntry& e) { return e.cut == cut; });
    if (it == entries_.end()) throw std::out_of_range(fmt::format("cut {} not in spectrum", cut.label()));
    return it->value;
}

double ConcurrenceSpectrum::at(std::span<const int> subset) const {
    return at(canonical_cut(std::vector<int>(subset.begin(), subset.end()), parties()));
}

std::vector<double> ConcurrenceSpectrum::singleton_values() const {
    std::vector<double> out;
    for (const auto& e : entries_)
        if (e.cut.is_singleton()) out.push_back(e.value);
    return out;
}

std::vector<double> ConcurrenceSpectrum::multi_party_values() const {
    std::vector<double> out;
    for (const auto& e : entries_)
        if (!e.cut.is_singleton()) out.push_back(e.value);
    return out;
}

std::vector<double> ConcurrenceSpectrum::values() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.value);
    return out;
}

ConcurrenceSpectrum full_spectrum(const PureState& state, unsigned threads) {
    auto cuts = canonical_bipartition_list(state.parties());
    std::vector<double> values(cuts.size());

    if (threads == 0)
        threads = state.size() >= parallel_threshold ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cuts.size()));

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < cuts.size(); i += stride) values[i] = concurrence(state, cuts[i]);
    };
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }

    std::vector<SpectrumEntry> entries;
    entries.reserve(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) entries.push_back({std::move(cuts[i]), values[i]});
    return ConcurrenceSpectrum(state.dims(), std::move(entries));
}

} // namespace gme
