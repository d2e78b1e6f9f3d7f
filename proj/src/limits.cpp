#include "bimono/limits.hpp"

#include "bimono/convolution.hpp"
#include "bimono/error.hpp"
#include "bimono/series.hpp"

namespace bimono {

std::string_view to_string(LimitKind kind) noexcept {
    switch (kind) {
    case LimitKind::clt: return "clt";
    case LimitKind::poisson: return "poisson";
    case LimitKind::compound: return "compound";
    }
    return "?";
}

LimitKind parse_limit_kind(std::string_view text) {
    if (text == "clt") return LimitKind::clt;
    if (text == "poisson") return LimitKind::poisson;
    if (text == "compound") return LimitKind::compound;
    fail(ErrorKind::invalid_input, "unknown limit kind '" + std::string(text) + "'");
}

LimitSpec LimitSpec::clt(Rational alpha, Rational beta, Rational gamma) {
    LimitSpec s;
    s.kind = LimitKind::clt;
    s.alpha = std::move(alpha);
    s.beta = std::move(beta);
    s.gamma = std::move(gamma);
    return s;
}

LimitSpec LimitSpec::poisson(Rational lambda, Rational alpha, Rational beta) {
    LimitSpec s;
    s.kind = LimitKind::poisson;
    s.lambda = std::move(lambda);
    s.alpha = std::move(alpha);
    s.beta = std::move(beta);
    return s;
}

LimitSpec LimitSpec::compound(Rational lambda, AtomicPlanarMeasure nu) {
    LimitSpec s;
    s.kind = LimitKind::compound;
    s.lambda = std::move(lambda);
    s.nu = std::move(nu);
    return s;
}

void LimitSpec::validate() const {
    switch (kind) {
    case LimitKind::clt:
        if (alpha <= 0 || beta <= 0) fail(ErrorKind::invalid_input, "clt needs alpha > 0 and beta > 0");
        break;
    case LimitKind::poisson:
    case LimitKind::compound:
        if (lambda <= 0) fail(ErrorKind::invalid_input, "poisson rate lambda must be positive");
        break;
    }
}

bool LimitSpec::clt_correlation_admissible() const { return gamma * gamma <= alpha * beta; }

namespace {

/// The jump measure of a Poisson-type spec.
AtomicPlanarMeasure jumps(const LimitSpec& spec) {
    return spec.kind == LimitKind::poisson ? AtomicPlanarMeasure::dirac(spec.alpha, spec.beta) : spec.nu;
}

CumulantGrid scaled(const CumulantGrid& k, const Rational& factor) {
    CumulantGrid out(k.order());
    for (std::size_t m = 0; m <= k.order(); ++m)
        for (std::size_t n = 0; n <= k.order(); ++n) out(m, n) = k(m, n) * factor;
    return out;
}

Rational power_of(unsigned base, std::size_t exponent) { return pow(Rational(base), static_cast<unsigned>(exponent)); }

} // namespace

CumulantGrid limit_cumulants(const LimitSpec& spec, std::size_t order) {
    spec.validate();
    CumulantGrid k(order);
    if (spec.kind == LimitKind::clt) {
        if (order >= 2) {
            k(2, 0) = spec.alpha;
            k(0, 2) = spec.beta;
        }
        if (order >= 1) k(1, 1) = spec.gamma;
        return k;
    }
    const GridDistribution moments = grid_from_measure(jumps(spec), order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n)
            if (m + n > 0) k(m, n) = spec.lambda * moments(m, n);
    return k;
}

GridDistribution limit_generator(const LimitSpec& spec, unsigned n, std::size_t order) {
    spec.validate();
    if (n == 0) fail(ErrorKind::invalid_input, "N must be at least 1");
    if (spec.kind == LimitKind::clt) {
        if (spec.alpha != 1 || spec.beta != 1)
            fail(ErrorKind::unsupported_parameters, "the built-in CLT generator needs alpha = beta = 1; pass a generator");
        const Rational same = (1 + spec.gamma) / 4;
        const Rational opposite = (1 - spec.gamma) / 4;
        std::vector<Atom> atoms;
        for (int s : {1, -1})
            for (int t : {1, -1}) {
                const Rational& w = s == t ? same : opposite;
                if (w != 0) atoms.push_back({Rational(s), Rational(t), w});
            }
        return grid_from_measure(AtomicPlanarMeasure(std::move(atoms)), order);
    }
    // delta_0 + (lambda / N)(nu - |nu| delta_0): every moment except M[0][0]
    // is (lambda / N) times the moment of nu.
    const GridDistribution jump = grid_from_measure(jumps(spec), order);
    const Rational rate = spec.lambda / Rational(n);
    GridDistribution g(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t k = 0; k <= order; ++k)
            if (m + k > 0) g(m, k) = rate * jump(m, k);
    return g;
}

ConvergenceReport limit_convergence_check(const LimitSpec& spec, unsigned n, std::size_t order,
                                          const std::optional<GridDistribution>& generator) {
    spec.validate();
    if (n == 0) fail(ErrorKind::invalid_input, "N must be at least 1");
    ConvergenceReport report;
    report.n = n;
    report.limit = limit_cumulants(spec, order);

    auto summand = [&](unsigned count) {
        if (!generator) return limit_generator(spec, count, order);
        if (spec.kind != LimitKind::clt) fail(ErrorKind::invalid_input, "custom generators are only taken for clt");
        if (generator->order() != order) fail(ErrorKind::invalid_input, "generator grid order differs from the requested order");
        return *generator;
    };

    const GridDistribution g = summand(n);
    report.generator = cumulants_from_moments(g);
    report.sum = cumulants_from_moments(convolution_power(g, n));
    report.extensive = report.sum == scaled(report.generator, Rational(n));
    report.deviation = CumulantGrid(order);

    if (spec.kind == LimitKind::clt) {
        const auto& k = report.generator;
        if (order >= 2 && (k(1, 0) != 0 || k(0, 1) != 0 || k(2, 0) != spec.alpha || k(0, 2) != spec.beta || k(1, 1) != spec.gamma))
            fail(ErrorKind::invalid_input, "CLT generator must be centered with second cumulants (alpha, beta, gamma)");
        // K(S_N) = N^(-(m+n)/2) K(sum); odd degrees only appear squared.
        report.rate_ok = true;
        for (std::size_t m = 0; m <= order; ++m)
            for (std::size_t j = 0; j <= order; ++j) {
                const std::size_t d = m + j;
                if (d == 0) continue;
                Rational dev;
                if (d % 2 == 0) {
                    const Rational x = report.sum(m, j) / power_of(n, d / 2) - report.limit(m, j);
                    dev = x * x;
                } else {
                    dev = report.sum(m, j) * report.sum(m, j) / power_of(n, d);
                }
                report.deviation(m, j) = dev;
                const Rational expected = d <= 2 ? Rational(0) : k(m, j) * k(m, j) / power_of(n, d - 2);
                if (dev != expected) report.rate_ok = false;
            }
        return report;
    }

    const CumulantGrid doubled = cumulants_from_moments(convolution_power(summand(2 * n), 2 * n));
    report.deviation_doubled = CumulantGrid(order);
    report.rate_ok = true;
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t j = 0; j <= order; ++j) {
            if (m + j == 0) continue;
            report.deviation(m, j) = report.sum(m, j) - report.limit(m, j);
            report.deviation_doubled(m, j) = doubled(m, j) - report.limit(m, j);
            if (abs(report.deviation_doubled(m, j)) * 4 > abs(report.deviation(m, j)) * 3) report.rate_ok = false;
        }
    return report;
}

LimitPipeline limit_pipeline(const LimitSpec& spec, std::size_t order) {
    LimitPipeline out;
    out.cumulants = limit_cumulants(spec, order);
    out.moments = grid_from_cauchy(evaluate(evolve_joint(out.cumulants), Rational(1)));
    out.matrix = moment_matrix(out.moments, order / 2);
    out.determinant = det_exact(out.matrix);
    out.verdict = psd_check(out.matrix);
    return out;
}

} // namespace bimono
