#include "bimono/convolution.hpp"

#include "bimono/error.hpp"

#include <algorithm>
#include <bit>

namespace bimono {

namespace {

void check_labels(const ChiWord& chi, const OmegaWord& omega, int lo, int hi) {
    if (chi.size() != omega.size()) fail(ErrorKind::invalid_input, "chi and omega lengths differ");
    for (int label : omega.labels)
        if (label < lo || label > hi)
            fail(ErrorKind::invalid_input, "omega label " + std::to_string(label) + " outside [" + std::to_string(lo) +
                                               ", " + std::to_string(hi) + "]");
}

Subset positions_where(const OmegaWord& omega, auto predicate) {
    Subset out;
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (predicate(omega.labels[i])) out.push_back(static_cast<int>(i + 1));
    return out;
}

OmegaWord restrict(const OmegaWord& omega, const Subset& positions) {
    OmegaWord out;
    for (int p : positions) out.labels.push_back(omega.labels[static_cast<std::size_t>(p - 1)]);
    return out;
}

Rational fold_moment(const OrderedFamily& family, const ChiWord& chi, const OmegaWord& omega,
                     Association association) {
    if (chi.empty()) return Rational(1);
    auto [lo_it, hi_it] = std::minmax_element(omega.labels.begin(), omega.labels.end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    if (lo == hi) return family.members[static_cast<std::size_t>(lo - 1)].at(chi);

    if (association == Association::peel_top) {
        // Top family is "2", the product of all lower ones is "1".
        OmegaWord split;
        for (int label : omega.labels) split.labels.push_back(label == hi ? 2 : 1);
        Subset rest = positions_where(omega, [hi](int label) { return label != hi; });
        Rational value = fold_moment(family, chi.restrict(rest), restrict(omega, rest), association);
        const auto& top = family.members[static_cast<std::size_t>(hi - 1)];
        for (const auto& block : pi_chi_omega(chi, split))
            if (omega.labels[static_cast<std::size_t>(block.front() - 1)] == hi) value *= top.at(chi.restrict(block));
        return value;
    }

    // Bottom family is "1", the product of all higher ones is "2".
    OmegaWord split;
    for (int label : omega.labels) split.labels.push_back(label == lo ? 1 : 2);
    Subset bottom = positions_where(omega, [lo](int label) { return label == lo; });
    Rational value = family.members[static_cast<std::size_t>(lo - 1)].at(chi.restrict(bottom));
    for (const auto& block : pi_chi_omega(chi, split))
        if (omega.labels[static_cast<std::size_t>(block.front() - 1)] != lo)
            value *= fold_moment(family, chi.restrict(block), restrict(omega, block), association);
    return value;
}

/// Compresses the letters of `word_bits` at the positions in `mask` into a
/// shorter word, keeping index order.
std::uint32_t compress(std::uint32_t word_bits, std::uint32_t mask) {
    std::uint32_t out = 0;
    int k = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        int p = std::countr_zero(m);
        if ((word_bits >> p) & 1U) out |= std::uint32_t{1} << k;
        ++k;
    }
    return out;
}

/// Square-and-multiply; powers of one distribution commute by associativity.
template <class D, class Op>
D repeated(const D& d, unsigned n, Op op) {
    D result = d;
    D base = d;
    unsigned rest = n - 1;
    while (rest > 0) {
        if (rest & 1U) result = op(result, base);
        rest >>= 1U;
        if (rest > 0) base = op(base, base);
    }
    return result;
}

} // namespace

Rational two_family_moment(const WordDistribution& d1, const WordDistribution& d2, const ChiWord& chi,
                           const OmegaWord& omega) {
    check_labels(chi, omega, 1, 2);
    Subset first = positions_where(omega, [](int label) { return label == 1; });
    Rational value = d1.at(chi.restrict(first));
    for (const auto& block : pi_chi_omega(chi, omega))
        if (omega.labels[static_cast<std::size_t>(block.front() - 1)] == 2) value *= d2.at(chi.restrict(block));
    return value;
}

Rational multi_family_moment(const OrderedFamily& family, const ChiWord& chi, const OmegaWord& omega,
                             Association association) {
    if (family.members.empty()) fail(ErrorKind::invalid_input, "ordered family must be nonempty");
    check_labels(chi, omega, 1, static_cast<int>(family.members.size()));
    return fold_moment(family, chi, omega, association);
}

WordDistribution convolve(const WordDistribution& d1, const WordDistribution& d2) {
    if (d1.max_len() != d2.max_len()) fail(ErrorKind::invalid_input, "convolve: max_len mismatch");
    const std::size_t max_len = d1.max_len();
    WordDistribution out(max_len);
    std::vector<int> order;
    for (std::size_t n = 1; n <= max_len; ++n) {
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
            // chi-order of the word, 0-based positions.
            order.clear();
            for (std::size_t p = 0; p < n; ++p)
                if (!((bits >> p) & 1U)) order.push_back(static_cast<int>(p));
            for (std::size_t p = n; p-- > 0;)
                if ((bits >> p) & 1U) order.push_back(static_cast<int>(p));

            Rational total(0);
            for (std::uint32_t chosen = 0; chosen < (std::uint32_t{1} << n); ++chosen) {
                Rational term = d1.at(static_cast<std::size_t>(std::popcount(chosen)), compress(bits, chosen));
                std::uint32_t gap = 0;
                auto flush = [&] {
                    if (gap != 0 && term != 0) term *= d2.at(static_cast<std::size_t>(std::popcount(gap)), compress(bits, gap));
                    gap = 0;
                };
                for (int p : order) {
                    if ((chosen >> p) & 1U)
                        flush();
                    else
                        gap |= std::uint32_t{1} << p;
                }
                flush();
                total += term;
            }
            out.set(n, bits, std::move(total));
        }
    }
    return out;
}

GridDistribution grid_convolve(const GridDistribution& g1, const GridDistribution& g2) {
    if (g1.order() != g2.order()) fail(ErrorKind::invalid_input, "grid_convolve: order mismatch");
    const std::size_t order = g1.order();

    // On the word L^m R^n the chi-order reads m left letters, then n right
    // letters. Choosing i left and j right letters from the first pair splits
    // the rest into pure-left gaps, pure-right gaps, and one gap straddling the
    // boundary. compositions[side][k][s] sums the products of the marginal
    // moments of g2 over all ways to write s as k ordered gap lengths.
    using Table = std::vector<std::vector<Rational>>;
    auto compositions = [&](bool right) {
        Table table(order + 1, std::vector<Rational>(order + 1, Rational(0)));
        table[0][0] = 1;
        for (std::size_t k = 1; k <= order; ++k)
            for (std::size_t s = 0; s <= order; ++s)
                for (std::size_t g = 0; g <= s; ++g) {
                    const Rational& moment = right ? g2(0, g) : g2(g, 0);
                    if (moment != 0 && table[k - 1][s - g] != 0) table[k][s] += moment * table[k - 1][s - g];
                }
        return table;
    };
    const Table left_parts = compositions(false);
    const Table right_parts = compositions(true);

    GridDistribution out(order);
    for (std::size_t m = 0; m <= order; ++m) {
        for (std::size_t n = 0; n <= order; ++n) {
            if (m + n == 0) continue;
            Rational total(0);
            for (std::size_t i = 0; i <= m; ++i) {
                for (std::size_t j = 0; j <= n; ++j) {
                    if (g1(i, j) == 0) continue;
                    // a left letters and b right letters straddle the boundary.
                    Rational weight(0);
                    for (std::size_t a = (i == 0 ? m : 0); a <= m - i; ++a) {
                        const Rational& lw = i == 0 ? Rational(1) : left_parts[i][m - i - a];
                        if (lw == 0) continue;
                        for (std::size_t b = (j == 0 ? n : 0); b <= n - j; ++b) {
                            const Rational& rw = j == 0 ? Rational(1) : right_parts[j][n - j - b];
                            if (rw == 0) continue;
                            weight += lw * rw * g2(a, b);
                        }
                    }
                    total += g1(i, j) * weight;
                }
            }
            out(m, n) = total;
        }
    }
    return out;
}

WordDistribution convolution_power(const WordDistribution& d, unsigned n) {
    if (n == 0) fail(ErrorKind::invalid_input, "convolution power must be at least 1");
    return repeated(d, n, [](const WordDistribution& a, const WordDistribution& b) { return convolve(a, b); });
}

GridDistribution convolution_power(const GridDistribution& g, unsigned n) {
    if (n == 0) fail(ErrorKind::invalid_input, "convolution power must be at least 1");
    return repeated(g, n, [](const GridDistribution& a, const GridDistribution& b) { return grid_convolve(a, b); });
}

} // namespace bimono
