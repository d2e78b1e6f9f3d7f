#ifndef BIMONO_CONVOLUTION_HPP
#define BIMONO_CONVOLUTION_HPP

#include "bimono/distributions.hpp"
#include "bimono/partitions.hpp"

#include <vector>

namespace bimono {

/// Distributions of bi-monotonically independent pairs (type I), listed in
/// increasing family order. Family labels are 1-based indices into `members`.
struct OrderedFamily {
    std::vector<WordDistribution> members;
};

/// Mixed moment when positions labelled 1 come from d1 and positions labelled
/// 2 from d2: d1 applied to all label-1 positions, times d2 on every label-2
/// block of pi_{chi,omega}.
Rational two_family_moment(const WordDistribution& d1, const WordDistribution& d2, const ChiWord& chi,
                           const OmegaWord& omega);

enum class Association {
    peel_top,    ///< ((d1 |> d2) |> d3) ...: the top family against the merged rest
    peel_bottom, ///< d1 |> (d2 |> (d3 ...)): the bottom family against the merged rest
};

Rational multi_family_moment(const OrderedFamily& family, const ChiWord& chi, const OmegaWord& omega,
                             Association association = Association::peel_top);

/// Distribution of (a1 + a2, b1 + b2) for bi-monotonically independent pairs
/// (a1, b1) ~ d1 followed by (a2, b2) ~ d2.
WordDistribution convolve(const WordDistribution& d1, const WordDistribution& d2);

/// The same operation restricted to commuting pairs, evaluated directly on
/// the grid of moments phi(a^m b^n).
GridDistribution grid_convolve(const GridDistribution& g1, const GridDistribution& g2);

/// n-fold convolution of d with itself (n >= 1).
WordDistribution convolution_power(const WordDistribution& d, unsigned n);
GridDistribution convolution_power(const GridDistribution& g, unsigned n);

} // namespace bimono

#endif
