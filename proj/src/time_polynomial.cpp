#include "bimono/time_polynomial.hpp"

namespace bimono {

TimePolynomial::TimePolynomial(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

TimePolynomial::TimePolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

TimePolynomial TimePolynomial::monomial(const Rational& coefficient, std::size_t power) {
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = coefficient;
    return TimePolynomial(std::move(c));
}

void TimePolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational TimePolynomial::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

TimePolynomial TimePolynomial::integral() const {
    if (c_.empty()) return {};
    std::vector<Rational> out(c_.size() + 1, Rational(0));
    for (std::size_t p = 0; p < c_.size(); ++p) out[p + 1] = c_[p] / Rational(static_cast<long>(p + 1));
    return TimePolynomial(std::move(out));
}

TimePolynomial TimePolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t p = 1; p < c_.size(); ++p) out[p - 1] = c_[p] * Rational(static_cast<long>(p));
    return TimePolynomial(std::move(out));
}

TimePolynomial& TimePolynomial::operator+=(const TimePolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
    for (std::size_t p = 0; p < other.c_.size(); ++p) c_[p] += other.c_[p];
    trim();
    return *this;
}

TimePolynomial& TimePolynomial::operator-=(const TimePolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
    for (std::size_t p = 0; p < other.c_.size(); ++p) c_[p] -= other.c_[p];
    trim();
    return *this;
}

TimePolynomial operator*(const TimePolynomial& a, const TimePolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return TimePolynomial(std::move(out));
}

TimePolynomial& TimePolynomial::operator*=(const TimePolynomial& other) { return *this = *this * other; }

TimePolynomial& TimePolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= scalar;
    return *this;
}

std::string TimePolynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t p = 0; p < c_.size(); ++p) {
        if (c_[p] == 0) continue;
        Rational mag = abs(c_[p]);
        if (out.empty())
            out += c_[p] < 0 ? "-" : "";
        else
            out += c_[p] < 0 ? " - " : " + ";
        bool unit = mag == 1 && p > 0;
        if (!unit) out += to_string(mag);
        if (p >= 1) out += "t";
        if (p >= 2) out += "^" + std::to_string(p);
    }
    return out;
}

std::optional<TimePolynomial> try_inverse(const TimePolynomial& p) {
    if (!p.is_constant() || p.is_zero()) return std::nullopt;
    return TimePolynomial(Rational(1) / p.coefficient(0));
}

std::optional<Rational> try_inverse(const Rational& q) {
    if (q == 0) return std::nullopt;
    return Rational(1) / q;
}

} // namespace bimono
