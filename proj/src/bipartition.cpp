#include "gme/bipartition.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace gme {

Bipartition::Bipartition(std::vector<int> subset, int parties)
    : subset_(std::move(subset)), parties_(parties) {
    if (parties_ < 2) throw std::invalid_argument("a bipartition needs at least 2 parties");
    const auto k = static_cast<int>(subset_.size());
    if (k < 1 || k > parties_ / 2)
        throw std::invalid_argument(
            fmt::format("cut size {} outside 1..{} for {} parties", k, parties_ / 2, parties_));
    for (std::size_t i = 0; i < subset_.size(); ++i) {
        if (subset_[i] < 1 || subset_[i] > parties_)
            throw std::invalid_argument(fmt::format("party {} outside 1..{}", subset_[i], parties_));
        if (i > 0 && subset_[i] <= subset_[i - 1])
            throw std::invalid_argument("cut labels must be strictly increasing");
    }
    if (2 * k == parties_ && subset_.front() != 1)
        throw std::invalid_argument("a half-size cut must contain party 1");
}

std::string Bipartition::label() const { return fmt::format("{}", fmt::join(subset_, ",")); }

std::uint64_t Bipartition::mask() const noexcept {
    std::uint64_t m = 0;
    for (int p : subset_) m |= std::uint64_t{1} << (p - 1);
    return m;
}

std::vector<int> complement(std::span<const int> subset, int parties) {
    std::vector<bool> in(static_cast<std::size_t>(parties) + 1, false);
    for (int p : subset) {
        if (p < 1 || p > parties)
            throw std::invalid_argument(fmt::format("party {} outside 1..{}", p, parties));
        in[static_cast<std::size_t>(p)] = true;
    }
    std::vector<int> out;
    for (int p = 1; p <= parties; ++p)
        if (!in[static_cast<std::size_t>(p)]) out.push_back(p);
    return out;
}

std::vector<int> complement(const Bipartition& cut) { return complement(cut.subset(), cut.parties()); }

Bipartition canonical_cut(std::vector<int> subset, int parties) {
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("cut labels must be distinct");
    auto rest = complement(subset, parties);
    if (subset.empty() || rest.empty())
        throw std::invalid_argument("a cut needs parties on both sides");
    const bool flip = rest.size() < subset.size() ||
                      (rest.size() == subset.size() && rest.front() == 1);
    return flip ? Bipartition(std::move(rest), parties) : Bipartition(std::move(subset), parties);
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<BipartitionGroup> canonical_bipartitions(int parties) {
    if (parties < 2) throw std::invalid_argument("bipartitions need at least 2 parties");
    if (parties > max_enumerated_parties)
        throw std::invalid_argument(
            fmt::format("party count {} exceeds the enumeration cap {}", parties, max_enumerated_parties));

    std::vector<BipartitionGroup> groups;
    for (int k = 1; 2 * k <= parties; ++k) {
        BipartitionGroup group{k, {}};
        // Lexicographic k-combinations of 1..n.
        std::vector<int> combo(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            if (2 * k != parties || combo.front() == 1) group.cuts.emplace_back(combo, parties);
            int i = k - 1;
            while (i >= 0 && combo[static_cast<std::size_t>(i)] == parties - k + i + 1) --i;
            if (i < 0) break;
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

std::vector<Bipartition> canonical_bipartition_list(int parties) {
    std::vector<Bipartition> out;
    for (auto& g : canonical_bipartitions(parties))
        std::move(g.cuts.begin(), g.cuts.end(), std::back_inserter(out));
    return out;
}

} // namespace gme
