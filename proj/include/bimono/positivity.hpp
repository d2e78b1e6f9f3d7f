#ifndef BIMONO_POSITIVITY_HPP
#define BIMONO_POSITIVITY_HPP

#include "bimono/distributions.hpp"
#include "bimono/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bimono {

/// Dense square matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t size) : n_(size), a_(size * size, Rational(0)) {}
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix identity(std::size_t size);

    std::size_t size() const noexcept { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_.at(i * n_ + j); }
    Rational& operator()(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }

    bool is_symmetric() const;
    RationalMatrix transposed() const;
    std::vector<std::vector<Rational>> rows() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

/// Row/column position of the bidegree (i1, i2) in a moment matrix of size
/// (n+1)^2: i1 varies fastest, so n = 1 gives (0,0), (1,0), (0,1), (1,1).
inline std::size_t moment_index(std::size_t i1, std::size_t i2, std::size_t n) { return i2 * (n + 1) + i1; }

/// X[(i1,i2),(j1,j2)] = M[i1+j1][i2+j2]; needs grid order >= 2n.
RationalMatrix moment_matrix(const GridDistribution& g, std::size_t n);

/// Fraction-free (Bareiss) elimination with row pivoting.
Rational det_exact(const RationalMatrix& x);

/// <X v, v>
Rational quadratic_form(const RationalMatrix& x, const std::vector<Rational>& v);

struct PsdVerdict {
    bool is_psd = false;
    /// Present when not PSD; <X w, w> < 0.
    std::optional<std::vector<Rational>> witness;
    std::optional<Rational> witness_value;
    /// Present when PSD: C X C^T = diag(diagonal), C invertible.
    std::optional<RationalMatrix> transform;
    std::optional<std::vector<Rational>> diagonal;
};

/// Exact verdict by symmetric pivoted elimination. Asymmetric input raises invalid_input.
PsdVerdict psd_check(const RationalMatrix& x);

} // namespace bimono

#endif
