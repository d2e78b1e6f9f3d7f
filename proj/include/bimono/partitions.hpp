#ifndef BIMONO_PARTITIONS_HPP
#define BIMONO_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bimono {

enum class Side : std::uint8_t { left, right };

/// Left/right designation of each position of a product a_1 ... a_n.
/// Positions are 1-based throughout the public interface.
class ChiWord {
public:
    ChiWord() = default;
    explicit ChiWord(std::vector<Side> sides) : sides_(std::move(sides)) {}

    /// Parses a string over {L, R}; the empty string gives the empty word.
    static ChiWord parse(std::string_view text);
    static ChiWord grid(std::size_t lefts, std::size_t rights);

    std::size_t size() const noexcept { return sides_.size(); }
    bool empty() const noexcept { return sides_.empty(); }
    Side operator[](std::size_t position) const { return sides_.at(position - 1); }
    const std::vector<Side>& sides() const noexcept { return sides_; }

    std::size_t count(Side side) const noexcept;
    std::string str() const;

    /// The word read off the given positions in increasing index order.
    ChiWord restrict(const std::vector<int>& positions) const;

    friend bool operator==(const ChiWord&, const ChiWord&) = default;
    friend auto operator<=>(const ChiWord& a, const ChiWord& b) { return a.str() <=> b.str(); }

private:
    std::vector<Side> sides_;
};

/// Family label of each position; only the relative order of labels matters.
struct OmegaWord {
    std::vector<int> labels;

    /// Comma-separated integers, e.g. "2,1,2".
    static OmegaWord parse(std::string_view text);
    std::size_t size() const noexcept { return labels.size(); }
};

using Subset = std::vector<int>;
using Block = std::vector<int>;

/// Positions listed in increasing chi-order: left positions ascending, then
/// right positions descending.
struct ChiPermutation {
    std::vector<int> order;
    std::vector<int> rank; // rank[p] = index of position p in `order`; rank[0] unused

    bool precedes(int p, int q) const { return rank.at(p) < rank.at(q); }
};

struct SetPartition {
    std::vector<Block> blocks; // each block ascending; blocks sorted by least element

    std::size_t size() const noexcept { return blocks.size(); }
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

struct OrderedPartition {
    SetPartition partition;
    std::vector<int> rank; // rank[i] in 1..|pi| for partition.blocks[i]

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
    friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

struct ChiIntervalSet {
    std::vector<Subset> intervals;
};

inline constexpr std::size_t default_enumeration_bound = 12;
/// Ordered partitions grow like n!; the default for BM enumeration is lower.
inline constexpr std::size_t default_ordered_enumeration_bound = 10;

ChiPermutation chi_order(const ChiWord& chi);

/// All nonempty chi-intervals, by length and then by chi-order of their start.
ChiIntervalSet chi_intervals(const ChiWord& chi);

/// Maximal chi-order runs of constant omega, listed in chi-order.
std::vector<Block> pi_chi_omega(const ChiWord& chi, const OmegaWord& omega);

/// The nonempty gaps left by `subset` along the chi-order, prefix and suffix included.
ChiIntervalSet complement_intervals(const ChiWord& chi, const Subset& subset);

bool is_interior(const ChiWord& chi, const Subset& inner, const Subset& outer);

std::vector<SetPartition> enumerate_bnc(const ChiWord& chi,
                                        std::size_t bound = default_enumeration_bound);

std::vector<OrderedPartition> enumerate_bm(const ChiWord& chi,
                                           std::size_t bound = default_ordered_enumeration_bound);

/// Nesting forest of a bi-non-crossing partition: parent[i] is the innermost
/// block that block i is interior to, or -1 for roots.
struct NestingForest {
    std::vector<int> parent;
    std::vector<int> subtree_size;

    /// Number of block orderings that rank every parent below its children,
    /// |pi|! / prod(subtree sizes).
    std::uint64_t linear_extension_count() const;
};

NestingForest nesting_forest(const ChiWord& chi, const SetPartition& pi);

std::uint64_t catalan(std::size_t n);

namespace detail {

/// Non-crossing partitions of {0, ..., n-1} as restricted growth strings,
/// in a fixed generation order. Cached per n.
const std::vector<std::vector<std::uint8_t>>& noncrossing_rgs(std::size_t n);

} // namespace detail

} // namespace bimono

#endif
