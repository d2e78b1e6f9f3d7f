#include "bimono/rational.hpp"

#include "bimono/error.hpp"

#include <cctype>

namespace bimono {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::incomplete_table: return "incomplete-table";
    case ErrorKind::singular_series: return "singular-series";
    case ErrorKind::unsupported_parameters: return "unsupported-parameters";
    }
    return "unknown";
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorKind::invalid_input, "not a rational literal: '" + std::string(text) + "'");
    std::string n(num.front() == '+' ? num.substr(1) : num);
    Integer d{std::string(den)};
    if (d == 0) fail(ErrorKind::invalid_input, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(n), d);
    q.canonicalize();
    return q;
}

Rational factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return Rational(out);
}

Rational binomial(const Rational& r, unsigned k) {
    Rational out(1);
    for (unsigned i = 0; i < k; ++i) {
        out *= r - i;
        out /= i + 1;
    }
    return out;
}

} // namespace bimono
