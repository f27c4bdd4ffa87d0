#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gme {

/// Largest party count accepted by the enumeration (2^{n-1} - 1 cuts).
inline constexpr int max_enumerated_parties = 26;

/// A canonical cut S | complement of parties 1..n.
///
/// Invariants: 1 <= |S| <= floor(n/2), labels strictly increasing in [1, n],
/// and when |S| = n/2 the subset contains party 1.
class Bipartition {
  public:
    Bipartition(std::vector<int> subset, int parties);

    [[nodiscard]] const std::vector<int>& subset() const noexcept { return subset_; }
    [[nodiscard]] int parties() const noexcept { return parties_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(subset_.size()); }
    [[nodiscard]] bool is_singleton() const noexcept { return subset_.size() == 1; }

    /// Comma-joined labels, e.g. "1,3".
    [[nodiscard]] std::string label() const;

    /// Bitmask with bit (i-1) set for party i.
    [[nodiscard]] std::uint64_t mask() const noexcept;

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;

  private:
    std::vector<int> subset_;
    int parties_;
};

/// Canonical cut for an arbitrary nonempty proper subset (either side of the cut).
Bipartition canonical_cut(std::vector<int> subset, int parties);

/// {1..n} \ S, sorted.
std::vector<int> complement(const Bipartition& cut);
std::vector<int> complement(std::span<const int> subset, int parties);

struct BipartitionGroup {
    int size;
    std::vector<Bipartition> cuts;
};

/// Canonical cuts grouped by |S| = 1..floor(n/2), lexicographic within a group.
std::vector<BipartitionGroup> canonical_bipartitions(int parties);

/// Same cuts flattened in group order.
std::vector<Bipartition> canonical_bipartition_list(int parties);

/// Binomial coefficient C(n, k) in 64-bit arithmetic.
std::uint64_t binomial(int n, int k);

} // namespace gme
