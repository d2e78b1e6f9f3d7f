#ifndef BIMONO_CUMULANTS_HPP
#define BIMONO_CUMULANTS_HPP

#include "bimono/distributions.hpp"
#include "bimono/partitions.hpp"
#include "bimono/time_polynomial.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace bimono {

/// K[m][n] for the words L^m R^n; the (0, 0) entry is unused and kept at 0.
class CumulantGrid {
public:
    CumulantGrid() : CumulantGrid(0) {}
    explicit CumulantGrid(std::size_t order) : order_(order), values_((order + 1) * (order + 1), Rational(0)) {}

    std::size_t order() const noexcept { return order_; }
    const Rational& operator()(std::size_t m, std::size_t n) const { return values_.at(m * (order_ + 1) + n); }
    Rational& operator()(std::size_t m, std::size_t n) { return values_.at(m * (order_ + 1) + n); }

    friend bool operator==(const CumulantGrid&, const CumulantGrid&) = default;

private:
    std::size_t order_;
    std::vector<Rational> values_;
};

/// Bi-monotonic cumulants K_chi of one two-faced pair, keyed by chi-word.
/// Entries may be missing; evaluation that needs one raises incomplete-table.
class CumulantTable {
public:
    CumulantTable() : CumulantTable(0) {}
    explicit CumulantTable(std::size_t max_len);

    /// Commuting pairs: K_chi depends only on (#L, #R). Every word up to
    /// max_len with both counts within the grid order is filled.
    static CumulantTable from_grid(const CumulantGrid& grid, std::size_t max_len);

    std::size_t max_len() const noexcept { return max_len_; }
    bool contains(const ChiWord& chi) const;
    const Rational& at(const ChiWord& chi) const;
    const Rational& at(std::size_t length, std::uint32_t bits) const;
    void set(const ChiWord& chi, Rational value);
    void set(std::size_t length, std::uint32_t bits, Rational value);

    /// K[m][n] read from the words L^m R^n.
    CumulantGrid grid(std::size_t order) const;

    friend bool operator==(const CumulantTable&, const CumulantTable&) = default;

private:
    std::size_t max_len_;
    std::vector<std::optional<Rational>> values_;
};

/// Sum over bi-monotonic partitions of prod K / |pi|!, evaluated by grouping
/// the orderings of each bi-non-crossing partition (hook-length weights).
Rational moment_from_cumulants(const CumulantTable& k, const ChiWord& chi);

/// Every moment up to the table's max_len.
WordDistribution moments_from_cumulants(const CumulantTable& k);
GridDistribution moments_from_cumulants(const CumulantGrid& k);

Rational cumulant_from_moments(const WordDistribution& d, const ChiWord& chi);

/// Every cumulant up to d.max_len().
CumulantTable cumulants_from_moments(const WordDistribution& d);
CumulantGrid cumulants_from_moments(const GridDistribution& g);

/// phi_t(a_1, ..., a_n) as a polynomial in t, from the differential
/// recursion over chi-intervals. Vanishes at t = 0 for nonempty chi.
TimePolynomial phi_t(const CumulantTable& k, const ChiWord& chi);

/// phi(N.a_1 ... N.a_n) from the (N-1)-fold self-convolution of d.
Rational dot_moment(const WordDistribution& d, const ChiWord& chi, unsigned n);

/// The distribution of the dotted pair (N.a, N.b).
WordDistribution dot_distribution(const WordDistribution& d, unsigned n);

/// One weighted term of the grouped partition sum: a bi-non-crossing
/// partition with weight 1 / prod(subtree sizes) of its nesting forest.
struct WeightedPartition {
    Rational weight;
    std::vector<std::size_t> block_lengths;
    std::vector<std::uint32_t> block_bits; // letters of each block as a word
};

/// Cached per chi; safe to call concurrently.
const std::vector<WeightedPartition>& weighted_partitions(const ChiWord& chi);

} // namespace bimono

#endif
