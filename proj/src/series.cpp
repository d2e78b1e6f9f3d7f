#include "bimono/series.hpp"

namespace bimono {

namespace {

template <class R>
Series2<R> truncated(const Series2<R>& s, std::size_t order) {
    Series2<R> out(order);
    for (std::size_t i = 0; i <= std::min(order, s.order()); ++i)
        for (std::size_t j = 0; j <= std::min(order, s.order()); ++j) out(i, j) = s(i, j);
    return out;
}

} // namespace

Series1Q evaluate(const Series1T& s, const Rational& t) {
    Series1Q out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) out[i] = s[i](t);
    return out;
}

Series2Q evaluate(const Series2T& s, const Rational& t) {
    Series2Q out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i)
        for (std::size_t j = 0; j <= s.order(); ++j) out(i, j) = s(i, j)(t);
    return out;
}

Series1T lift(const Series1Q& s) {
    Series1T out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) out[i] = TimePolynomial(s[i]);
    return out;
}

Series2T lift(const Series2Q& s) {
    Series2T out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i)
        for (std::size_t j = 0; j <= s.order(); ++j) out(i, j) = TimePolynomial(s(i, j));
    return out;
}

Series2Q cauchy_from_grid(const GridDistribution& g) {
    Series2Q out(g.order() + 1);
    for (std::size_t m = 0; m <= g.order(); ++m)
        for (std::size_t n = 0; n <= g.order(); ++n) out(m + 1, n + 1) = g(m, n);
    return out;
}

GridDistribution grid_from_cauchy(const Series2Q& cauchy) {
    if (cauchy.order() == 0) fail(ErrorKind::invalid_input, "Cauchy series of order 0 carries no moments");
    const Series2Q shifted = divide_by_uv(cauchy);
    GridDistribution out(cauchy.order() - 1);
    for (std::size_t m = 0; m < cauchy.order(); ++m)
        for (std::size_t n = 0; n < cauchy.order(); ++n) out(m, n) = shifted(m, n);
    return out;
}

GeneratingFunctions generating_functions(const CumulantGrid& k) {
    const std::size_t order = k.order();
    if (order == 0) fail(ErrorKind::invalid_input, "generating functions need a cumulant grid of order >= 1");
    GeneratingFunctions gf{Series1Q(order - 1), Series1Q(order - 1), Series2Q(order), Series2Q(order)};
    for (std::size_t m = 1; m <= order; ++m) {
        gf.a1[m - 1] = k(m, 0);
        gf.a2[m - 1] = k(0, m);
    }
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n) {
            if (m + n == 0) continue;
            gf.atilde(m, n) = k(m, n);
            if (m > 0 && n > 0) gf.a(m, n) = k(m, n);
        }
    return gf;
}

CumulantGrid grid_from_atilde(const Series2Q& atilde) {
    CumulantGrid k(atilde.order());
    for (std::size_t m = 0; m <= atilde.order(); ++m)
        for (std::size_t n = 0; n <= atilde.order(); ++n)
            if (m + n > 0) k(m, n) = atilde(m, n);
    return k;
}

MarginalFlow evolve_marginal(const Series1Q& a_j) {
    // With g = 1/F the equation dF/dt = -A(F) becomes dg/dt = sum_m K_m g^(m+1),
    // g(0) = u. The u^d coefficient of the right side only involves g_1..g_(d-1).
    const std::size_t cumulants = a_j.order() + 1; // K_1 .. K_cumulants
    const std::size_t order = cumulants + 1;
    Series1T g = Series1T::variable(order);
    for (std::size_t d = 2; d <= order; ++d) {
        TimePolynomial rate;
        Series1T power = g;
        for (std::size_t m = 1; m <= cumulants && m < d; ++m) {
            power = power * g;
            if (a_j[m - 1] != 0) rate += power[d] * a_j[m - 1];
        }
        g[d] = rate.integral();
    }
    return {g, f_transform(g)};
}

Series2T evolve_joint(const CumulantGrid& k) {
    const std::size_t order = k.order();
    const GeneratingFunctions gf = generating_functions(k);
    const MarginalFlow left = evolve_marginal(gf.a1);
    const MarginalFlow right = evolve_marginal(gf.a2);

    // G_t = uv P_t with dP/dt = P E, E = Atilde(F_1t, F_2t), P_0 = 1. The total
    // degree d part of P E only needs P below degree d, since E(0, 0) = 0.
    const Series2T rate = bicompose(lift(gf.atilde), left.cauchy.truncated(order), right.cauchy.truncated(order));
    Series2T p(order);
    p(0, 0) = TimePolynomial(1);
    for (std::size_t d = 1; d <= 2 * order; ++d)
        for (std::size_t i = (d > order ? d - order : 0); i <= std::min(d, order); ++i) {
            const std::size_t j = d - i;
            TimePolynomial derivative;
            for (std::size_t a = 0; a <= i; ++a)
                for (std::size_t b = 0; b <= j; ++b) {
                    if (a + b == 0) continue;
                    const TimePolynomial& e = rate(a, b);
                    if (e.is_zero()) continue;
                    const TimePolynomial& lower = p(i - a, j - b);
                    if (!lower.is_zero()) derivative += e * lower;
                }
            p(i, j) = derivative.integral();
        }

    Series2T g(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        for (std::size_t j = 0; j <= order; ++j) g(i + 1, j + 1) = p(i, j);
    return g;
}

Series2T h_transform(const Series2T& g_t, const MarginalFlow& left, const MarginalFlow& right) {
    const std::size_t order = g_t.order();
    if (order == 0) fail(ErrorKind::invalid_input, "h_transform: series order must be >= 1");
    const Series2T p = truncated(divide_by_uv(g_t), order - 1);
    return p * embed(left.multiplier.truncated(order - 1)) * embed(right.multiplier.truncated(order - 1), true);
}

SemigroupReport semigroup_check(const CumulantGrid& k, const Rational& s, const Rational& t) {
    const Series2T g = evolve_joint(k);
    const GeneratingFunctions gf = generating_functions(k);
    const MarginalFlow left = evolve_marginal(gf.a1);
    const MarginalFlow right = evolve_marginal(gf.a2);
    const Rational st = s + t;

    SemigroupReport report;
    report.cauchy = convolve_transform(evaluate(g, s), evaluate(g, t), evaluate(left.multiplier, t),
                                       evaluate(right.multiplier, t)) == evaluate(g, st);
    report.left = compose(evaluate(left.cauchy, s), evaluate(left.cauchy, t)) == evaluate(left.cauchy, st);
    report.right = compose(evaluate(right.cauchy, s), evaluate(right.cauchy, t)) == evaluate(right.cauchy, st);

    const Series2T h = h_transform(g, left, right);
    const std::size_t n = h.order();
    const Series2Q composed = bicompose(evaluate(h, s), evaluate(left.cauchy, t).truncated(n),
                                        evaluate(right.cauchy, t).truncated(n));
    report.h = composed * evaluate(h, t) == evaluate(h, st);
    return report;
}

Series2T clt_closed_form(const Rational& alpha, const Rational& beta, const Rational& gamma, std::size_t order) {
    if (alpha != beta) fail(ErrorKind::unsupported_parameters, "closed-form CLT transform needs alpha = beta");
    if (alpha <= 0) fail(ErrorKind::invalid_input, "CLT variances must be positive");
    if (order == 0) return Series2T(0);

    // (1 - 2 alpha t x^2) as a series in x. The quotient below reaches u^i v^j
    // with i + j up to 2 order, so the root is needed that far.
    Series1T base(2 * order);
    base[0] = TimePolynomial(1);
    if (order >= 1) base[2] = TimePolynomial::monomial(-2 * alpha, 1);
    const Series1T root = power(base, Rational(1, 2));
    const Series1T marginal = power(base, Rational(-1, 2)).truncated(order);

    // (z S(u) - w S(v)) / (z - w) = (v S(u) - u S(v)) / (v - u)
    //                             = 1 - uv sum_{k>=2} s_k sum_{i+j=k-2} u^i v^j.
    Series2T quotient(order);
    quotient(0, 0) = TimePolynomial(1);
    for (std::size_t k = 2; k <= 2 * order; ++k) {
        if (root[k].is_zero()) continue;
        for (std::size_t i = 0; i + 2 <= k; ++i) {
            const std::size_t j = k - 2 - i;
            if (i + 1 <= order && j + 1 <= order) quotient(i + 1, j + 1) -= root[k];
        }
    }
    return multiply_by_uv(embed(marginal) * embed(marginal, true) * power(quotient, Rational(gamma / alpha)));
}

Series2Q compound_poisson_generating(const Rational& lambda, const AtomicPlanarMeasure& nu, std::size_t order) {
    const GridDistribution moments = grid_from_measure(nu, order);
    Series2Q out(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n)
            if (m + n > 0) out(m, n) = lambda * moments(m, n);
    return out;
}

} // namespace bimono
