#ifndef BIMONO_SERIES_HPP
#define BIMONO_SERIES_HPP

#include "bimono/cumulants.hpp"
#include "bimono/distributions.hpp"
#include "bimono/error.hpp"
#include "bimono/rational.hpp"
#include "bimono/time_polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

// Truncated power series in u = 1/z (one variable) or u, v = 1/z, 1/w (two
// variables). Coefficients are either exact rationals or polynomials in t.

namespace bimono {

template <class R>
class Series1 {
public:
    Series1() : Series1(0) {}
    explicit Series1(std::size_t order) : c_(order + 1, R(0)) {}

    /// The series u.
    static Series1 variable(std::size_t order) {
        Series1 s(order);
        if (order >= 1) s[1] = R(1);
        return s;
    }

    std::size_t order() const noexcept { return c_.size() - 1; }
    const R& operator[](std::size_t i) const { return c_.at(i); }
    R& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<R>& coefficients() const noexcept { return c_; }

    /// Index of the first nonzero coefficient, or order() + 1 for zero.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return i;
        return c_.size();
    }

    Series1 truncated(std::size_t order) const {
        Series1 s(order);
        for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) s[i] = c_[i];
        return s;
    }

    Series1& operator+=(const Series1& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series1& operator-=(const Series1& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Series1& operator*=(const Rational& scalar) {
        for (auto& c : c_) c *= scalar;
        return *this;
    }

    friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
    friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
    friend Series1 operator*(Series1 a, const Rational& s) { return a *= s; }
    friend Series1 operator*(const Rational& s, Series1 a) { return a *= s; }

    friend Series1 operator*(const Series1& a, const Series1& b) {
        a.check_order(b);
        Series1 out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                if (!is_zero(b.c_[j])) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }
    Series1& operator*=(const Series1& o) { return *this = *this * o; }

    friend bool operator==(const Series1&, const Series1&) = default;

private:
    void check_order(const Series1& o) const {
        if (o.order() != order()) fail(ErrorKind::invalid_input, "series truncation orders differ");
    }
    std::vector<R> c_;
};

template <class R>
class Series2 {
public:
    Series2() : Series2(0) {}
    explicit Series2(std::size_t order) : order_(order), c_((order + 1) * (order + 1), R(0)) {}

    /// The series u v.
    static Series2 uv(std::size_t order) {
        Series2 s(order);
        if (order >= 1) s(1, 1) = R(1);
        return s;
    }

    std::size_t order() const noexcept { return order_; }
    const R& operator()(std::size_t i, std::size_t j) const { return c_.at(i * (order_ + 1) + j); }
    R& operator()(std::size_t i, std::size_t j) { return c_.at(i * (order_ + 1) + j); }

    Series2& operator+=(const Series2& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series2& operator-=(const Series2& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Series2& operator*=(const Rational& scalar) {
        for (auto& c : c_) c *= scalar;
        return *this;
    }

    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
    friend Series2 operator*(Series2 a, const Rational& s) { return a *= s; }

    friend Series2 operator*(const Series2& a, const Series2& b) {
        a.check_order(b);
        const std::size_t n = a.order_;
        Series2 out(n);
        for (std::size_t i1 = 0; i1 <= n; ++i1)
            for (std::size_t j1 = 0; j1 <= n; ++j1) {
                const R& x = a(i1, j1);
                if (is_zero(x)) continue;
                for (std::size_t i2 = 0; i1 + i2 <= n; ++i2)
                    for (std::size_t j2 = 0; j1 + j2 <= n; ++j2) {
                        const R& y = b(i2, j2);
                        if (!is_zero(y)) out(i1 + i2, j1 + j2) += x * y;
                    }
            }
        return out;
    }
    Series2& operator*=(const Series2& o) { return *this = *this * o; }

    friend bool operator==(const Series2&, const Series2&) = default;

private:
    void check_order(const Series2& o) const {
        if (o.order_ != order_) fail(ErrorKind::invalid_input, "series truncation orders differ");
    }
    std::size_t order_;
    std::vector<R> c_;
};

using Series1Q = Series1<Rational>;
using Series2Q = Series2<Rational>;
using Series1T = Series1<TimePolynomial>;
using Series2T = Series2<TimePolynomial>;

/// 1/f; the constant coefficient must be invertible.
template <class R>
Series1<R> reciprocal(const Series1<R>& f) {
    auto inv = try_inverse(f[0]);
    if (!inv) fail(ErrorKind::singular_series, "reciprocal: constant coefficient is not invertible");
    Series1<R> out(f.order());
    out[0] = *inv;
    for (std::size_t k = 1; k <= f.order(); ++k) {
        R acc(0);
        for (std::size_t i = 1; i <= k; ++i)
            if (!is_zero(f[i])) acc += f[i] * out[k - i];
        out[k] = -(acc * *inv);
    }
    return out;
}

/// f(g(u)); g must have zero constant coefficient.
template <class R>
Series1<R> compose(const Series1<R>& f, const Series1<R>& g) {
    if (!is_zero(g[0])) fail(ErrorKind::singular_series, "compose: inner series has a constant term");
    if (f.order() != g.order()) fail(ErrorKind::invalid_input, "series truncation orders differ");
    Series1<R> out(f.order());
    for (std::size_t k = f.order() + 1; k-- > 0;) {
        out = out * g;
        out[0] += f[k];
    }
    return out;
}

/// Compositional inverse r with f(r(u)) = u; f must have valuation exactly 1.
template <class R>
Series1<R> reverse(const Series1<R>& f) {
    if (f.order() == 0) return f;
    if (!is_zero(f[0])) fail(ErrorKind::singular_series, "reverse: series has a constant term");
    auto inv = try_inverse(f[1]);
    if (!inv) fail(ErrorKind::singular_series, "reverse: linear coefficient is not invertible");
    Series1<R> r(f.order());
    r[1] = *inv;
    // Each pass fixes one more coefficient.
    for (std::size_t k = 2; k <= f.order(); ++k) {
        const Series1<R> residual = compose(f, r);
        r[k] = -(residual[k] * *inv);
    }
    return r;
}

/// f^exponent for f with constant coefficient 1, via the binomial series.
template <class R>
Series1<R> power(const Series1<R>& f, const Rational& exponent) {
    if (!(f[0] == R(1))) fail(ErrorKind::singular_series, "power: constant coefficient must be 1");
    Series1<R> h = f;
    h[0] = R(0);
    Series1<R> out(f.order());
    Series1<R> term(f.order());
    term[0] = R(1);
    for (std::size_t k = 0; k <= f.order(); ++k) {
        out += term * binomial(exponent, static_cast<unsigned>(k));
        term = term * h;
    }
    return out;
}

/// (1 + h)^exponent for a two-variable h with h(0, 0) = 0.
template <class R>
Series2<R> power(const Series2<R>& f, const Rational& exponent) {
    if (!(f(0, 0) == R(1))) fail(ErrorKind::singular_series, "power: constant coefficient must be 1");
    Series2<R> h = f;
    h(0, 0) = R(0);
    Series2<R> out(f.order());
    Series2<R> term(f.order());
    term(0, 0) = R(1);
    for (std::size_t k = 0; k <= 2 * f.order(); ++k) {
        out += term * binomial(exponent, static_cast<unsigned>(k));
        term = term * h;
    }
    return out;
}

/// G(f1(u), f2(v)); both inner series need zero constant coefficient.
template <class R>
Series2<R> bicompose(const Series2<R>& g, const Series1<R>& f1, const Series1<R>& f2) {
    const std::size_t n = g.order();
    if (f1.order() != n || f2.order() != n) fail(ErrorKind::invalid_input, "series truncation orders differ");
    if (!is_zero(f1[0]) || !is_zero(f2[0])) fail(ErrorKind::singular_series, "bicompose: inner series has a constant term");
    std::vector<Series1<R>> p1{Series1<R>(n)}, p2{Series1<R>(n)};
    p1[0][0] = R(1);
    p2[0][0] = R(1);
    for (std::size_t k = 1; k <= n; ++k) {
        p1.push_back(p1.back() * f1);
        p2.push_back(p2.back() * f2);
    }
    Series2<R> out(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            const R& c = g(i, j);
            if (is_zero(c)) continue;
            for (std::size_t a = p1[i].valuation(); a <= n; ++a) {
                if (is_zero(p1[i][a])) continue;
                R ca = c * p1[i][a];
                for (std::size_t b = p2[j].valuation(); b <= n; ++b)
                    if (!is_zero(p2[j][b])) out(a, b) += ca * p2[j][b];
            }
        }
    return out;
}

/// Embeds a one-variable series as a function of u (or of v when `in_v`).
template <class R>
Series2<R> embed(const Series1<R>& f, bool in_v = false) {
    Series2<R> out(f.order());
    for (std::size_t i = 0; i <= f.order(); ++i) (in_v ? out(0, i) : out(i, 0)) = f[i];
    return out;
}

/// Division by u v, keeping the box order; the top row and column become 0.
template <class R>
Series2<R> divide_by_uv(const Series2<R>& g) {
    const std::size_t n = g.order();
    Series2<R> out(n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            if ((i == 0 || j == 0) && !is_zero(g(i, j))) fail(ErrorKind::singular_series, "series is not divisible by uv");
            if (i > 0 && j > 0) out(i - 1, j - 1) = g(i, j);
        }
    return out;
}

template <class R>
Series2<R> multiply_by_uv(const Series2<R>& g) {
    const std::size_t n = g.order();
    Series2<R> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i + 1, j + 1) = g(i, j);
    return out;
}

Series1Q evaluate(const Series1T& s, const Rational& t);
Series2Q evaluate(const Series2T& s, const Rational& t);
Series1T lift(const Series1Q& s);
Series2T lift(const Series2Q& s);

// -- Cauchy and F transforms -------------------------------------------------

/// G(u, v) = sum M[m][n] u^(m+1) v^(n+1); the series order is grid order + 1.
Series2Q cauchy_from_grid(const GridDistribution& g);
GridDistribution grid_from_cauchy(const Series2Q& cauchy);

/// G_a(u) = sum M[m][0] u^(m+1), read off the coefficient of v.
template <class R>
Series1<R> left_marginal(const Series2<R>& cauchy) {
    Series1<R> out(cauchy.order());
    if (cauchy.order() >= 1)
        for (std::size_t i = 0; i <= cauchy.order(); ++i) out[i] = cauchy(i, 1);
    return out;
}

template <class R>
Series1<R> right_marginal(const Series2<R>& cauchy) {
    Series1<R> out(cauchy.order());
    if (cauchy.order() >= 1)
        for (std::size_t j = 0; j <= cauchy.order(); ++j) out[j] = cauchy(1, j);
    return out;
}

/// F(z) = 1 / G(z) written as F(z) = z S(u). Returns S, which is known to
/// one order below the marginal G(u) = u + ... it is computed from.
template <class R>
Series1<R> f_transform(const Series1<R>& marginal) {
    const std::size_t n = marginal.order();
    if (n == 0 || !is_zero(marginal[0]) || !(marginal[1] == R(1)))
        fail(ErrorKind::singular_series, "f_transform: marginal Cauchy transform must start with u");
    Series1<R> unit(n - 1);
    for (std::size_t i = 0; i < n; ++i) unit[i] = marginal[i + 1];
    return reciprocal(unit);
}

/// 1/F(z) as a series in u, recovered from the multiplier S of F(z) = z S(u).
template <class R>
Series1<R> inverse_f(const Series1<R>& multiplier) {
    const Series1<R> r = reciprocal(multiplier);
    Series1<R> out(multiplier.order() + 1);
    for (std::size_t i = 0; i <= multiplier.order(); ++i) out[i + 1] = r[i];
    return out;
}

/// G_sum(z, w) = G1(F2a(z), F2b(w)) G2(z, w) F2a(z) F2b(w) with F2a, F2b
/// given as multipliers (order G.order() - 1) of G2's marginals.
template <class R>
Series2<R> convolve_transform(const Series2<R>& g1, const Series2<R>& g2, const Series1<R>& f2a,
                              const Series1<R>& f2b) {
    const std::size_t n = g1.order();
    if (g2.order() != n || f2a.order() + 1 != n || f2b.order() + 1 != n)
        fail(ErrorKind::invalid_input, "convolve_transform: mismatched truncation orders");
    const Series2<R> inner = bicompose(g1, inverse_f(f2a), inverse_f(f2b));
    return inner * divide_by_uv(g2) * embed(f2a.truncated(n)) * embed(f2b.truncated(n), true);
}

template <class R>
Series2<R> convolve_transform(const Series2<R>& g1, const Series2<R>& g2) {
    return convolve_transform(g1, g2, f_transform(left_marginal(g2)), f_transform(right_marginal(g2)));
}

// -- Cumulant generating functions and the semigroup -------------------------

/// A1 = sum K[m][0] u^(m-1), A2 = sum K[0][n] v^(n-1) (order K - 1),
/// A = sum_{m,n>=1} K[m][n] u^m v^n and Atilde = u A1 + v A2 + A (order K).
struct GeneratingFunctions {
    Series1Q a1;
    Series1Q a2;
    Series2Q a;
    Series2Q atilde;
};

GeneratingFunctions generating_functions(const CumulantGrid& k);

/// Inverse of the Atilde construction: K[m][n] is the u^m v^n coefficient.
CumulantGrid grid_from_atilde(const Series2Q& atilde);

/// The marginal flow for a cumulant series A_j: `cauchy` is G_{j,t}(u) = 1/F_{j,t}
/// (order K + 1 for A_j of order K - 1) and `multiplier` is S with F_{j,t}(z) = z S(u).
struct MarginalFlow {
    Series1T cauchy;
    Series1T multiplier;
};

MarginalFlow evolve_marginal(const Series1Q& a_j);

/// G_t for the cumulant grid K, exact in t, series order K.order() + 1.
Series2T evolve_joint(const CumulantGrid& k);

/// H_t = G_t F_{1,t} F_{2,t}, a series with constant coefficient 1.
Series2T h_transform(const Series2T& g_t, const MarginalFlow& left, const MarginalFlow& right);

struct SemigroupReport {
    bool cauchy = false;   ///< G_{s+t} = G_s(F_{1,t}, F_{2,t}) G_t F_{1,t} F_{2,t}
    bool h = false;        ///< H_{s+t} = H_s(F_{1,t}, F_{2,t}) H_t
    bool left = false;     ///< G_{1,s+t} = G_{1,s} o F_{1,t}
    bool right = false;    ///< G_{2,s+t} = G_{2,s} o F_{2,t}
    bool ok() const noexcept { return cauchy && h && left && right; }
};

SemigroupReport semigroup_check(const CumulantGrid& k, const Rational& s, const Rational& t);

/// Closed-form G_t for cumulants K20 = alpha, K02 = beta, K11 = gamma and all
/// others zero; only alpha = beta > 0 is supported. Series order `order`.
Series2T clt_closed_form(const Rational& alpha, const Rational& beta, const Rational& gamma, std::size_t order);

/// Atilde = lambda * integral (1 / ((1 - s u)(1 - t v)) - 1) dnu(s, t), box order `order`.
Series2Q compound_poisson_generating(const Rational& lambda, const AtomicPlanarMeasure& nu, std::size_t order);

} // namespace bimono

#endif
