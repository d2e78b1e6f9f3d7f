#ifndef BIMONO_DISTRIBUTIONS_HPP
#define BIMONO_DISTRIBUTIONS_HPP

#include "bimono/partitions.hpp"
#include "bimono/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bimono {

/// Dense index of a word over {L, R}: words of length n occupy
/// [2^n - 1, 2^(n+1) - 1), with bit i set when letter i+1 is R.
inline std::size_t word_index(std::size_t length, std::uint32_t right_bits) {
    return (std::size_t{1} << length) - 1 + right_bits;
}

std::uint32_t right_bits(const ChiWord& word);
ChiWord word_from_bits(std::size_t length, std::uint32_t bits);

inline constexpr std::size_t default_max_len = 8;
inline constexpr std::size_t default_grid_order = 8;
inline constexpr std::size_t max_word_len = 20;

/// Moments phi(c_1 ... c_n) of one two-faced pair (a, b) for every word
/// c over {L=a, R=b} of length at most max_len. The empty word maps to 1.
class WordDistribution {
public:
    WordDistribution() : WordDistribution(0) {}
    explicit WordDistribution(std::size_t max_len);

    /// Fills every nonempty word from `moment`.
    static WordDistribution from_function(std::size_t max_len, const std::function<Rational(const ChiWord&)>& moment);

    std::size_t max_len() const noexcept { return max_len_; }

    const Rational& at(const ChiWord& word) const;
    const Rational& at(std::size_t length, std::uint32_t bits) const { return values_[word_index(length, bits)]; }
    void set(const ChiWord& word, Rational value);
    void set(std::size_t length, std::uint32_t bits, Rational value);

    friend bool operator==(const WordDistribution&, const WordDistribution&) = default;

private:
    std::size_t max_len_;
    std::vector<Rational> values_;
};

/// M[m][n] = phi(a^m b^n) for a commuting pair, 0 <= m, n <= order.
class GridDistribution {
public:
    GridDistribution() : GridDistribution(0) {}
    explicit GridDistribution(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    const Rational& operator()(std::size_t m, std::size_t n) const { return values_.at(m * (order_ + 1) + n); }
    Rational& operator()(std::size_t m, std::size_t n) { return values_.at(m * (order_ + 1) + n); }

    /// The same data at a lower order.
    GridDistribution truncated(std::size_t order) const;

    friend bool operator==(const GridDistribution&, const GridDistribution&) = default;

private:
    std::size_t order_;
    std::vector<Rational> values_;
};

struct Atom {
    Rational s;
    Rational t;
    Rational weight;
};

/// Finitely many weighted points of Q^2. The total mass is not normalized.
class AtomicPlanarMeasure {
public:
    AtomicPlanarMeasure() = default;
    explicit AtomicPlanarMeasure(std::vector<Atom> atoms);

    static AtomicPlanarMeasure dirac(Rational s, Rational t);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    Rational total_mass() const;

    AtomicPlanarMeasure scaled(const Rational& factor) const;
    /// Sum of measures; coinciding atoms merge and cancelled atoms are dropped.
    friend AtomicPlanarMeasure operator+(const AtomicPlanarMeasure& a, const AtomicPlanarMeasure& b);

private:
    std::vector<Atom> atoms_;
};

GridDistribution grid_from_measure(const AtomicPlanarMeasure& mu, std::size_t order);

/// Commuting pairs only: a word w maps to M[#L(w)][#R(w)].
WordDistribution word_from_grid(const GridDistribution& g, std::size_t max_len);
inline WordDistribution word_from_grid(const GridDistribution& g) { return word_from_grid(g, g.order()); }

/// Restriction of a word distribution to the words L^m R^n.
GridDistribution grid_from_words(const WordDistribution& d, std::size_t order);

/// Moment of the subword of chi read off `subset` in increasing index order.
Rational moment_of(const WordDistribution& d, const ChiWord& chi, const Subset& subset);

} // namespace bimono

#endif
