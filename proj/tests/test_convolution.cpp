#include "oracles.hpp"

#include "bimono/convolution.hpp"
#include "bimono/error.hpp"

#include <doctest.h>

using namespace bimono;

namespace {

const Rational half(1, 2);

GridDistribution coin(std::size_t order) {
    return grid_from_measure(AtomicPlanarMeasure({{Rational(0), Rational(1), half}, {Rational(1), Rational(0), half}}), order);
}

std::vector<OmegaWord> all_omegas(std::size_t n, int labels) {
    std::vector<OmegaWord> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(labels);
    for (std::size_t code = 0; code < total; ++code) {
        OmegaWord w;
        for (std::size_t i = 0, c = code; i < n; ++i, c /= static_cast<std::size_t>(labels))
            w.labels.push_back(static_cast<int>(c % static_cast<std::size_t>(labels)) + 1);
        out.push_back(w);
    }
    return out;
}

Subset remove(std::size_t n, const Subset& block) {
    Subset out;
    for (int p = 1; p <= static_cast<int>(n); ++p)
        if (std::find(block.begin(), block.end(), p) == block.end()) out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("two_family_moment on small words") {
    std::mt19937 rng(21);
    const auto d1 = oracle::random_words(rng, 3), d2 = oracle::random_words(rng, 3);
    const ChiWord L = ChiWord::parse("L"), R = ChiWord::parse("R");
    CHECK(two_family_moment(d1, d2, ChiWord::parse("LLR"), OmegaWord::parse("2,1,2")) == d1.at(L) * d2.at(L) * d2.at(R));
    CHECK(two_family_moment(d1, d2, ChiWord::parse("RLL"), OmegaWord::parse("2,1,2")) ==
          d1.at(L) * d2.at(ChiWord::parse("RL")));
    CHECK(two_family_moment(d1, d2, ChiWord::parse("RLR"), OmegaWord::parse("1,1,1")) == d1.at(ChiWord::parse("RLR")));
    CHECK(two_family_moment(d1, d2, ChiWord::parse("RLR"), OmegaWord::parse("2,2,2")) == d2.at(ChiWord::parse("RLR")));
    CHECK_THROWS_AS(two_family_moment(d1, d2, ChiWord::parse("LR"), OmegaWord::parse("1,3")), Error);
    CHECK_THROWS_AS(two_family_moment(d1, d2, ChiWord::parse("LR"), OmegaWord::parse("1")), Error);
}

TEST_CASE("left letters of one family and right letters of another factorize") {
    std::mt19937 rng(22);
    const auto d1 = oracle::random_words(rng, 5), d2 = oracle::random_words(rng, 5);
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
            const ChiWord chi = word_from_bits(n, bits);
            for (int left_label : {1, 2}) {
                OmegaWord omega;
                Subset lefts, rights;
                for (std::size_t p = 1; p <= n; ++p) {
                    const bool left = chi[p] == Side::left;
                    omega.labels.push_back(left ? left_label : 3 - left_label);
                    (left ? lefts : rights).push_back(static_cast<int>(p));
                }
                const auto& dl = left_label == 1 ? d1 : d2;
                const auto& dr = left_label == 1 ? d2 : d1;
                CHECK(two_family_moment(d1, d2, chi, omega) == dl.at(chi.restrict(lefts)) * dr.at(chi.restrict(rights)));
            }
        }
}

TEST_CASE("multi-family moments: both association orders agree") {
    std::mt19937 rng(23);
    OrderedFamily family{{oracle::random_words(rng, 6), oracle::random_words(rng, 6), oracle::random_words(rng, 6)}};
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
            const ChiWord chi = word_from_bits(n, bits);
            for (const auto& omega : all_omegas(n, 3))
                CHECK(multi_family_moment(family, chi, omega, Association::peel_top) ==
                      multi_family_moment(family, chi, omega, Association::peel_bottom));
        }
    const ChiWord chi = ChiWord::parse("LRRLRL");
    for (const auto& omega : all_omegas(6, 3))
        CHECK(multi_family_moment(family, chi, omega, Association::peel_top) ==
              multi_family_moment(family, chi, omega, Association::peel_bottom));
    CHECK(multi_family_moment(family, chi, OmegaWord::parse("3,3,3,3,3,3")) == family.members[2].at(chi));
    OrderedFamily two{{family.members[0], family.members[1]}};
    CHECK(multi_family_moment(two, chi, OmegaWord::parse("1,2,2,1,2,1")) ==
          two_family_moment(family.members[0], family.members[1], chi, OmegaWord::parse("1,2,2,1,2,1")));
    CHECK_THROWS_AS(multi_family_moment(OrderedFamily{}, chi, OmegaWord::parse("1,1,1,1,1,1")), Error);
}

TEST_CASE("a block that peaks above both neighbours peels off") {
    std::mt19937 rng(24);
    OrderedFamily family{{oracle::random_words(rng, 6), oracle::random_words(rng, 6), oracle::random_words(rng, 6)}};
    int peaks = 0;
    for (const char* w : {"LLRRL", "RLRLRL", "LLLLLL", "RRLRR"}) {
        const ChiWord chi = ChiWord::parse(w);
        for (const auto& omega : all_omegas(chi.size(), 3)) {
            const auto blocks = pi_chi_omega(chi, omega);
            auto label = [&](std::size_t k) { return omega.labels[static_cast<std::size_t>(blocks[k].front() - 1)]; };
            for (std::size_t k = 0; k < blocks.size(); ++k) {
                const bool above_prev = k == 0 || label(k - 1) < label(k);
                const bool above_next = k + 1 == blocks.size() || label(k + 1) < label(k);
                if (!above_prev || !above_next || blocks.size() == 1) continue;
                ++peaks;
                const Subset rest = remove(chi.size(), blocks[k]);
                OmegaWord rest_omega;
                for (int p : rest) rest_omega.labels.push_back(omega.labels[static_cast<std::size_t>(p - 1)]);
                const Rational expected = family.members[static_cast<std::size_t>(label(k) - 1)].at(chi.restrict(blocks[k])) *
                                          multi_family_moment(family, chi.restrict(rest), rest_omega);
                CHECK(multi_family_moment(family, chi, omega) == expected);
            }
        }
    }
    CHECK(peaks > 100);
}

TEST_CASE("convolve: identity, point masses, coin") {
    std::mt19937 rng(25);
    const auto d = oracle::random_words(rng, 5);
    const auto zero = word_from_grid(grid_from_measure(AtomicPlanarMeasure::dirac(Rational(0), Rational(0)), 5));
    CHECK(convolve(d, zero) == d);
    CHECK(convolve(zero, d) == d);

    for (int trial = 0; trial < 10; ++trial) {
        const Rational s1 = oracle::random_rational(rng), t1 = oracle::random_rational(rng);
        const Rational s2 = oracle::random_rational(rng), t2 = oracle::random_rational(rng);
        const auto a = grid_from_measure(AtomicPlanarMeasure::dirac(s1, t1), 5);
        const auto b = grid_from_measure(AtomicPlanarMeasure::dirac(s2, t2), 5);
        const auto sum = grid_from_measure(AtomicPlanarMeasure::dirac(s1 + s2, t1 + t2), 5);
        CHECK(grid_convolve(a, b) == sum);
        CHECK(convolve(word_from_grid(a), word_from_grid(b)) == word_from_grid(sum));
    }

    const auto x = grid_from_words(convolve(word_from_grid(coin(4)), word_from_grid(coin(4))), 2);
    CHECK(x(2, 0) == Rational(3, 2));
    CHECK(x(1, 1) == half);
    CHECK(x(2, 1) == Rational(5, 8));
    CHECK(x(2, 2) == Rational(3, 4));
    CHECK(grid_convolve(coin(2), coin(2)) == x);
    CHECK_THROWS_AS(convolve(WordDistribution(2), WordDistribution(3)), Error);
    CHECK_THROWS_AS(grid_convolve(GridDistribution(2), GridDistribution(3)), Error);
}

TEST_CASE("convolve agrees with the two-family moment formula") {
    // (a1 + a2)(...) expands into a sum of mixed moments over label assignments.
    std::mt19937 rng(26);
    const auto d1 = oracle::random_words(rng, 4), d2 = oracle::random_words(rng, 4);
    const auto d = convolve(d1, d2);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
            const ChiWord chi = word_from_bits(n, bits);
            Rational total(0);
            for (const auto& omega : all_omegas(n, 2)) total += two_family_moment(d1, d2, chi, omega);
            CHECK(d.at(chi) == total);
        }
}

TEST_CASE("grid_convolve agrees with word-level convolve on commuting pairs") {
    std::mt19937 rng(27);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g1 = oracle::random_grid(rng, 3), g2 = oracle::random_grid(rng, 3);
        const auto words = convolve(word_from_grid(g1, 3), word_from_grid(g2, 3));
        const auto g = grid_convolve(g1, g2);
        for (std::size_t m = 0; m <= 3; ++m)
            for (std::size_t n = 0; m + n <= 3; ++n)
                if (m + n > 0) CHECK(g(m, n) == words.at(ChiWord::grid(m, n)));
    }
}

TEST_CASE("marginals undergo monotone convolution") {
    std::mt19937 rng(28);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g1 = oracle::random_grid(rng, 6), g2 = oracle::random_grid(rng, 6);
        const auto g = grid_convolve(g1, g2);
        for (bool right : {false, true}) {
            std::vector<Rational> m1, m2;
            for (std::size_t k = 0; k <= 6; ++k) {
                m1.push_back(right ? g1(0, k) : g1(k, 0));
                m2.push_back(right ? g2(0, k) : g2(k, 0));
            }
            const auto want = oracle::monotone_convolve(m1, m2);
            for (std::size_t k = 0; k <= 6; ++k) CHECK((right ? g(0, k) : g(k, 0)) == want[k]);
        }
    }
}

TEST_CASE("associativity") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 3; ++trial) {
        const auto a = oracle::random_words(rng, 5), b = oracle::random_words(rng, 5), c = oracle::random_words(rng, 5);
        CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
        const auto x = oracle::random_grid(rng, 5), y = oracle::random_grid(rng, 5), z = oracle::random_grid(rng, 5);
        CHECK(grid_convolve(grid_convolve(x, y), z) == grid_convolve(x, grid_convolve(y, z)));
    }
}

TEST_CASE("convolution powers") {
    std::mt19937 rng(30);
    const auto d = oracle::random_words(rng, 4);
    CHECK(convolution_power(d, 1) == d);
    CHECK(convolution_power(d, 3) == convolve(convolve(d, d), d));
    const auto g = oracle::random_grid(rng, 4);
    CHECK(convolution_power(g, 5) == grid_convolve(grid_convolve(grid_convolve(grid_convolve(g, g), g), g), g));
    CHECK_THROWS_AS(convolution_power(g, 0), Error);
}
