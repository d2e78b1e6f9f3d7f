#ifndef BIMONO_TIME_POLYNOMIAL_HPP
#define BIMONO_TIME_POLYNOMIAL_HPP

#include "bimono/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bimono {

/// Polynomial in the time parameter t with exact rational coefficients.
/// Trailing zero coefficients are never stored.
class TimePolynomial {
public:
    TimePolynomial() = default;
    TimePolynomial(const Rational& constant); // NOLINT: constants promote implicitly
    TimePolynomial(int constant) : TimePolynomial(Rational(constant)) {} // NOLINT
    explicit TimePolynomial(std::vector<Rational> coefficients);

    static TimePolynomial monomial(const Rational& coefficient, std::size_t power);

    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : Rational(0); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    Rational operator()(const Rational& t) const;
    /// Antiderivative vanishing at t = 0.
    TimePolynomial integral() const;
    TimePolynomial derivative() const;

    TimePolynomial& operator+=(const TimePolynomial& other);
    TimePolynomial& operator-=(const TimePolynomial& other);
    TimePolynomial& operator*=(const TimePolynomial& other);
    TimePolynomial& operator*=(const Rational& scalar);

    friend TimePolynomial operator+(TimePolynomial a, const TimePolynomial& b) { return a += b; }
    friend TimePolynomial operator-(TimePolynomial a, const TimePolynomial& b) { return a -= b; }
    friend TimePolynomial operator-(TimePolynomial a) { return a *= Rational(-1); }
    friend TimePolynomial operator*(const TimePolynomial& a, const TimePolynomial& b);
    friend TimePolynomial operator*(TimePolynomial a, const Rational& s) { return a *= s; }
    friend TimePolynomial operator*(const Rational& s, TimePolynomial a) { return a *= s; }

    friend bool operator==(const TimePolynomial&, const TimePolynomial&) = default;

    /// Human-readable form such as "45t + 225t^2".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Multiplicative inverse when it exists in Q[t], i.e. for nonzero constants.
std::optional<TimePolynomial> try_inverse(const TimePolynomial& p);
std::optional<Rational> try_inverse(const Rational& q);

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const TimePolynomial& p) { return p.is_zero(); }

} // namespace bimono

#endif
