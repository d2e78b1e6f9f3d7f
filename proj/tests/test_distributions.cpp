#include "oracles.hpp"

#include "bimono/distributions.hpp"
#include "bimono/error.hpp"

#include <doctest.h>

using namespace bimono;

namespace {

const Rational half(1, 2);

AtomicPlanarMeasure coin() { return AtomicPlanarMeasure({{Rational(0), Rational(1), half}, {Rational(1), Rational(0), half}}); }

AtomicPlanarMeasure tau() {
    return AtomicPlanarMeasure({{Rational(1), Rational(1), Rational(15)},
                                {Rational(-1), Rational(1), Rational(15)},
                                {Rational(1), Rational(-1), Rational(15)}});
}

} // namespace

TEST_CASE("grid_from_measure") {
    const GridDistribution g = grid_from_measure(coin(), 4);
    CHECK(g(0, 0) == 1);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(g(k, 0) == half);
        CHECK(g(0, k) == half);
        for (std::size_t j = 1; j <= 4; ++j) CHECK(g(k, j) == 0);
    }

    const GridDistribution origin = grid_from_measure(AtomicPlanarMeasure::dirac(Rational(0), Rational(0)), 3);
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 3; ++n) CHECK(origin(m, n) == (m + n == 0 ? 1 : 0));

    const GridDistribution t = grid_from_measure(tau(), 5);
    CHECK(tau().total_mass() == 45);
    for (std::size_t m = 0; m <= 5; ++m)
        for (std::size_t n = 0; n <= 5; ++n)
            if (m + n > 0) CHECK(t(m, n) == 15 * (m % 2 ? -1 : 1) + 15 * (n % 2 ? -1 : 1) + 15);
}

TEST_CASE("grid_from_measure is linear and factors over product measures") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = oracle::random_probability(rng, 3);
        const auto b = oracle::random_probability(rng, 2);
        const Rational c = oracle::random_rational(rng);
        if (c == 0) continue;
        const auto ga = grid_from_measure(a, 4), gb = grid_from_measure(b, 4);
        const auto gsum = grid_from_measure(a + b.scaled(c), 4);
        for (std::size_t m = 0; m <= 4; ++m)
            for (std::size_t n = 0; n <= 4; ++n)
                if (m + n > 0) CHECK(gsum(m, n) == ga(m, n) + c * gb(m, n));

        // Product of the s-marginal of a with the t-marginal of b.
        std::vector<Atom> atoms;
        for (const auto& x : a.atoms())
            for (const auto& y : b.atoms()) atoms.push_back({x.s, y.t, x.weight * y.weight});
        AtomicPlanarMeasure product;
        for (const auto& atom : atoms) product = product + AtomicPlanarMeasure({atom});
        const auto gp = grid_from_measure(product, 4);
        for (std::size_t m = 0; m <= 4; ++m)
            for (std::size_t n = 0; n <= 4; ++n) CHECK(gp(m, n) == ga(m, 0) * gb(0, n));
    }
}

TEST_CASE("atomic measures validate their atoms") {
    CHECK_THROWS_AS(AtomicPlanarMeasure({{Rational(0), Rational(0), Rational(0)}}), Error);
    CHECK_THROWS_AS(AtomicPlanarMeasure({{Rational(1), Rational(0), half}, {Rational(1), Rational(0), half}}), Error);
    const auto cancelled = coin() + coin().scaled(Rational(-1));
    CHECK(cancelled.atoms().empty());
}

TEST_CASE("word_from_grid reduces words to letter counts") {
    const auto point = word_from_grid(grid_from_measure(AtomicPlanarMeasure::dirac(Rational(1), Rational(1)), 4));
    CHECK(point.at(ChiWord::parse("LRLR")) == 1);
    const auto c = word_from_grid(grid_from_measure(coin(), 4));
    CHECK(c.at(ChiWord::parse("LR")) == 0);
    CHECK(c.at(ChiWord::parse("LL")) == half);
    CHECK(c.at(ChiWord{}) == 1);

    std::mt19937 rng(5);
    const auto g = oracle::random_grid(rng, 5);
    const auto d = word_from_grid(g);
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
            const auto r = static_cast<std::size_t>(std::popcount(bits));
            CHECK(d.at(n, bits) == g(n - r, r));
        }
    CHECK(grid_from_words(word_from_grid(g, 5), 2) == g.truncated(2));
    CHECK_THROWS_AS(word_from_grid(g, 6), Error);
}

TEST_CASE("moment_of reads subwords in index order") {
    const ChiWord llr = ChiWord::parse("LLR");
    const auto d = word_from_grid(grid_from_measure(AtomicPlanarMeasure::dirac(Rational(2), Rational(3)), 3));
    CHECK(moment_of(d, llr, {}) == 1);
    CHECK(moment_of(d, llr, {1, 3}) == 6);
    CHECK(moment_of(word_from_grid(grid_from_measure(coin(), 3)), llr, {1, 2, 3}) == 0);
    try {
        WordDistribution small(2);
        (void)moment_of(small, llr, {1, 2, 3});
        FAIL("expected resource_limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
    }
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK(to_string(Rational(-1, 32)) == "-1/32");
    CHECK(to_string(Rational(5)) == "5");
    for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "1/-2", "x"}) CHECK_THROWS_AS(parse_rational(bad), Error);
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(factorial(5) == 120);
}
