#ifndef BIMONO_LIMITS_HPP
#define BIMONO_LIMITS_HPP

#include "bimono/cumulants.hpp"
#include "bimono/distributions.hpp"
#include "bimono/positivity.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace bimono {

enum class LimitKind { clt, poisson, compound };

std::string_view to_string(LimitKind kind) noexcept;
LimitKind parse_limit_kind(std::string_view text);

struct LimitSpec {
    LimitKind kind = LimitKind::clt;
    // clt: variances alpha, beta and covariance gamma.
    // poisson: rate lambda and jump (alpha, beta).
    Rational alpha{1};
    Rational beta{1};
    Rational gamma{0};
    Rational lambda{1};
    // compound: rate lambda and jump measure nu (total mass not normalized).
    AtomicPlanarMeasure nu;

    static LimitSpec clt(Rational alpha, Rational beta, Rational gamma);
    static LimitSpec poisson(Rational lambda, Rational alpha, Rational beta);
    static LimitSpec compound(Rational lambda, AtomicPlanarMeasure nu);

    /// Throws invalid_input on a malformed spec.
    void validate() const;
    /// gamma^2 <= alpha beta; recorded, not enforced.
    bool clt_correlation_admissible() const;
};

CumulantGrid limit_cumulants(const LimitSpec& spec, std::size_t order);

/// The pair whose N-fold convolution is examined. CLT: the four atoms
/// (+-1, +-1) with covariance gamma (needs alpha = beta = 1). Poisson and
/// compound: delta_0 + (lambda / N)(nu - |nu| delta_0).
GridDistribution limit_generator(const LimitSpec& spec, unsigned n, std::size_t order);

struct ConvergenceReport {
    unsigned n = 1;
    CumulantGrid limit;
    CumulantGrid generator;  ///< cumulants of one summand
    CumulantGrid sum;        ///< cumulants of the unnormalized N-fold sum
    bool extensive = false;  ///< sum == N * generator, exactly
    /// CLT: (K(S_N) - K_limit)^2, where S_N carries the 1/sqrt(N) scaling.
    /// Poisson and compound: K(S_N) - K_limit.
    CumulantGrid deviation;
    /// Poisson and compound: the same deviation at 2N.
    CumulantGrid deviation_doubled;
    /// CLT: deviation == N^(2-(m+n)) K(a)^2 for m+n >= 3 and 0 for m+n <= 2.
    /// Poisson and compound: each deviation at least halves, up to a factor
    /// 3/2, when N doubles (the 1/N rate; meaningful once N is large).
    bool rate_ok = false;
};

/// `generator` (clt only) overrides limit_generator; it must be centered with
/// second cumulants (alpha, beta, gamma).
ConvergenceReport limit_convergence_check(const LimitSpec& spec, unsigned n, std::size_t order,
                                          const std::optional<GridDistribution>& generator = std::nullopt);

struct LimitPipeline {
    CumulantGrid cumulants;
    GridDistribution moments;   ///< from the semigroup ODE at t = 1
    RationalMatrix matrix;      ///< moment matrix of size (order/2 + 1)^2
    Rational determinant;
    PsdVerdict verdict;
};

LimitPipeline limit_pipeline(const LimitSpec& spec, std::size_t order);

} // namespace bimono

#endif
