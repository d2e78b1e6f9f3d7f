#include "oracles.hpp"

#include "bimono/convolution.hpp"
#include "bimono/error.hpp"
#include "bimono/series.hpp"

#include <doctest.h>

using namespace bimono;

namespace {

Series1Q from(std::vector<Rational> c) {
    Series1Q s(c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) s[i] = c[i];
    return s;
}

CumulantGrid clt_grid(const Rational& alpha, const Rational& beta, const Rational& gamma, std::size_t order) {
    CumulantGrid k(order);
    k(2, 0) = alpha;
    k(0, 2) = beta;
    k(1, 1) = gamma;
    return k;
}

CumulantGrid compound_tau(std::size_t order) {
    CumulantGrid k(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n)
            if (m + n > 0) k(m, n) = 15 * (m % 2 ? -1 : 1) + 15 * (n % 2 ? -1 : 1) + 15;
    return k;
}

CumulantGrid random_cumulant_grid(std::mt19937& rng, std::size_t order) {
    CumulantGrid k(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n)
            if (m + n > 0) k(m, n) = oracle::random_rational(rng);
    return k;
}

} // namespace

TEST_CASE("one-variable series arithmetic") {
    const Series1Q one_minus_u = from({Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)});
    const Series1Q geometric = reciprocal(one_minus_u);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(geometric[k] == 1);
    CHECK(geometric * one_minus_u == from({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)}));

    // u = r + r^2 is solved by r = sum (-1)^(k-1) C_(k-1) u^k.
    const Series1Q f = from({Rational(0), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
    const Series1Q r = reverse(f);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(r[k] == (k % 2 ? 1 : -1) * Rational(catalan(k - 1)));
    CHECK(compose(f, r) == Series1Q::variable(6));
    CHECK(compose(r, f) == Series1Q::variable(6));

    const Series1Q root = power(from({Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)}), Rational(1, 2));
    CHECK(root * root == from({Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)}));
    CHECK(power(one_minus_u, Rational(-1)) == geometric);

    try {
        (void)reciprocal(Series1Q::variable(3));
        FAIL("expected singular_series");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::singular_series);
    }
    CHECK_THROWS_AS(compose(f, one_minus_u.truncated(6)), Error);
    CHECK_THROWS_AS(one_minus_u + f, Error);
    CHECK_THROWS_AS(power(f, Rational(2)), Error);
}

TEST_CASE("two-variable series: bicompose against term-by-term substitution") {
    std::mt19937 rng(31);
    const std::size_t n = 4;
    Series2Q g(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) g(i, j) = oracle::random_rational(rng);
    Series1Q f1(n), f2(n);
    for (std::size_t i = 1; i <= n; ++i) {
        f1[i] = oracle::random_rational(rng);
        f2[i] = oracle::random_rational(rng);
    }
    Series2Q want(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            Series1Q a = from({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)}), b = a;
            for (std::size_t k = 0; k < i; ++k) a = a * f1;
            for (std::size_t k = 0; k < j; ++k) b = b * f2;
            want += embed(a) * embed(b, true) * g(i, j);
        }
    CHECK(bicompose(g, f1, f2) == want);

    Series2Q h = Series2Q::uv(n);
    h(0, 0) = 1;
    h(1, 0) = oracle::random_rational(rng);
    const Series2Q sq = power(h, Rational(1, 2));
    CHECK(sq * sq == h);
    CHECK(divide_by_uv(multiply_by_uv(g)) + Series2Q(n) != g); // the top row and column are lost
    CHECK_THROWS_AS(divide_by_uv(g), Error);
}

TEST_CASE("Cauchy and F-transforms of point masses") {
    const Rational s(2, 3), t(-5);
    const auto g = grid_from_measure(AtomicPlanarMeasure::dirac(s, t), 5);
    const Series2Q cauchy = cauchy_from_grid(g);
    CHECK(cauchy.order() == 6);
    CHECK(grid_from_cauchy(cauchy) == g);
    const Series1Q left = left_marginal(cauchy);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(left[k] == pow(s, static_cast<unsigned>(k - 1)));
    const Series1Q mult = f_transform(left);
    CHECK(mult.order() == 5);
    CHECK(mult == from({Rational(1), -s, Rational(0), Rational(0), Rational(0), Rational(0)}));
    CHECK(inverse_f(mult) == left);
    const Series1Q right = right_marginal(cauchy);
    CHECK(f_transform(right) == from({Rational(1), -t, Rational(0), Rational(0), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(f_transform(Series1Q::variable(3) * Rational(2)), Error);
}

TEST_CASE("transform-level convolution matches grid_convolve") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 8; ++trial) {
        const auto g1 = oracle::random_grid(rng, 4), g2 = oracle::random_grid(rng, 4);
        CHECK(convolve_transform(cauchy_from_grid(g1), cauchy_from_grid(g2)) == cauchy_from_grid(grid_convolve(g1, g2)));
    }
    CHECK_THROWS_AS(convolve_transform(Series2Q(3), Series2Q(4)), Error);
}

TEST_CASE("generating functions") {
    const auto gf = generating_functions(clt_grid(Rational(2), Rational(3), Rational(1, 2), 3));
    CHECK(gf.a1 == from({Rational(0), Rational(2), Rational(0)}));
    CHECK(gf.a2 == from({Rational(0), Rational(3), Rational(0)}));
    CHECK(gf.atilde(2, 0) == 2);
    CHECK(gf.atilde(0, 2) == 3);
    CHECK(gf.atilde(1, 1) == Rational(1, 2));
    CHECK(gf.a(1, 1) == Rational(1, 2));
    CHECK(gf.a(2, 0) == 0);
    std::mt19937 rng(33);
    const auto k = random_cumulant_grid(rng, 4);
    CHECK(grid_from_atilde(generating_functions(k).atilde) == k);
    CHECK_THROWS_AS(generating_functions(CumulantGrid(0)), Error);

    const AtomicPlanarMeasure tau({{Rational(1), Rational(1), Rational(15)},
                                   {Rational(-1), Rational(1), Rational(15)},
                                   {Rational(1), Rational(-1), Rational(15)}});
    CHECK(grid_from_atilde(compound_poisson_generating(Rational(1), tau, 5)) == compound_tau(5));
}

TEST_CASE("marginal flows") {
    // Arcsine moments binom(2k, k) (alpha t / 2)^k.
    const Rational alpha(3, 2);
    const MarginalFlow flow = evolve_marginal(from({Rational(0), alpha, Rational(0), Rational(0), Rational(0), Rational(0)}));
    CHECK(flow.cauchy.order() == 7);
    CHECK(flow.multiplier.order() == 6);
    for (std::size_t k = 0; 2 * k + 1 <= 7; ++k)
        CHECK(flow.cauchy[2 * k + 1] == TimePolynomial::monomial(binomial(Rational(2 * static_cast<long>(k)), static_cast<unsigned>(k)) *
                                                                     pow(alpha / 2, static_cast<unsigned>(k)),
                                                                 k));
    CHECK(flow.cauchy[2].is_zero());

    const auto gf = generating_functions(compound_tau(2));
    const MarginalFlow compound = evolve_marginal(gf.a1);
    CHECK(compound.cauchy[1].str() == "1");
    CHECK(compound.cauchy[2].str() == "15t");
    CHECK(compound.cauchy[3].str() == "45t + 225t^2");
}

TEST_CASE("evolve_joint: compound Poisson moments") {
    const Series2T g = evolve_joint(compound_tau(8));
    CHECK(g.order() == 9);
    const auto m = grid_from_cauchy(evaluate(g, Rational(1)));
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 0) == 15);
    CHECK(m(0, 1) == 15);
    CHECK(m(2, 0) == 270);
    CHECK(m(1, 1) == 210);
    CHECK(m(0, 2) == 270);
    CHECK(m(2, 1) == Rational(7455, 2));
    CHECK(m(1, 2) == Rational(7455, 2));
    CHECK(m(2, 2) == Rational(131715, 2));
}

TEST_CASE("evolve_joint agrees with the moment-cumulant map at every t") {
    std::mt19937 rng(34);
    const auto k = random_cumulant_grid(rng, 4);
    const Series2T g = evolve_joint(k);
    for (const Rational t : {Rational(1), Rational(2), Rational(-3, 4), Rational(0)}) {
        CumulantGrid scaled(4);
        for (std::size_t m = 0; m <= 4; ++m)
            for (std::size_t n = 0; n <= 4; ++n) scaled(m, n) = t * k(m, n);
        CHECK(grid_from_cauchy(evaluate(g, t)) == moments_from_cumulants(scaled));
    }
    // dG/dt at t = 0 is uv Atilde.
    const auto atilde = generating_functions(k).atilde;
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; j <= 4; ++j) CHECK(g(i + 1, j + 1).coefficient(1) == atilde(i, j));
}

TEST_CASE("semigroup identities") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 3; ++trial) {
        const auto k = random_cumulant_grid(rng, 3);
        const auto report = semigroup_check(k, oracle::random_rational(rng), oracle::random_rational(rng));
        CHECK(report.cauchy);
        CHECK(report.h);
        CHECK(report.left);
        CHECK(report.right);
    }
    const auto k = compound_tau(3);
    const auto gf = generating_functions(k);
    const Series2T h = h_transform(evolve_joint(k), evolve_marginal(gf.a1), evolve_marginal(gf.a2));
    CHECK(h(0, 0) == TimePolynomial(1));
    CHECK(h(1, 0).is_zero());
    CHECK(h(0, 1).is_zero());
    CHECK(h(1, 1).coefficient(1) == k(1, 1));
}

TEST_CASE("CLT closed form equals the ODE solution") {
    for (const Rational alpha : {Rational(1), Rational(5, 2)})
        for (const Rational gamma : {Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3)}) {
            const Series2T closed = clt_closed_form(alpha, alpha, gamma, 7);
            CHECK(closed == evolve_joint(clt_grid(alpha, alpha, gamma, 6)));
        }
    // gamma = 0: the two coordinates are independent arcsine variables.
    const auto m = grid_from_cauchy(evaluate(clt_closed_form(Rational(1), Rational(1), Rational(0), 7), Rational(1)));
    for (std::size_t a = 0; a <= 6; ++a)
        for (std::size_t b = 0; b <= 6; ++b) CHECK(m(a, b) == m(a, 0) * m(0, b));
    try {
        (void)clt_closed_form(Rational(1), Rational(2), Rational(0), 4);
        FAIL("expected unsupported_parameters");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported_parameters);
    }
    CHECK_THROWS_AS(clt_closed_form(Rational(0), Rational(0), Rational(0), 4), Error);
}
