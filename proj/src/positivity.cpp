#include "bimono/positivity.hpp"

#include "bimono/error.hpp"

#include <utility>

namespace bimono {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) fail(ErrorKind::invalid_input, "matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
    RationalMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<Rational>> RationalMatrix::rows() const {
    std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.n_ != b.n_) fail(ErrorKind::invalid_input, "matrix sizes differ");
    RationalMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k)
            if (a(i, k) != 0)
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

RationalMatrix moment_matrix(const GridDistribution& g, std::size_t n) {
    if (g.order() < 2 * n)
        fail(ErrorKind::invalid_input, "moment matrix of size n = " + std::to_string(n) + " needs grid order >= " +
                                           std::to_string(2 * n));
    RationalMatrix x((n + 1) * (n + 1));
    for (std::size_t i1 = 0; i1 <= n; ++i1)
        for (std::size_t i2 = 0; i2 <= n; ++i2)
            for (std::size_t j1 = 0; j1 <= n; ++j1)
                for (std::size_t j2 = 0; j2 <= n; ++j2)
                    x(moment_index(i1, i2, n), moment_index(j1, j2, n)) = g(i1 + j1, i2 + j2);
    return x;
}

Rational det_exact(const RationalMatrix& x) {
    const std::size_t n = x.size();
    if (n == 0) return Rational(1);
    // Clear denominators row by row, then run Bareiss over the integers.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = x(i, j).get_num() * (l / x(i, j).get_den());
        scale *= l;
    }
    int sign = 1;
    Integer previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

Rational quadratic_form(const RationalMatrix& x, const std::vector<Rational>& v) {
    if (v.size() != x.size()) fail(ErrorKind::invalid_input, "vector length does not match the matrix");
    Rational total(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (v[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < x.size(); ++j) row += x(i, j) * v[j];
        total += v[i] * row;
    }
    return total;
}

PsdVerdict psd_check(const RationalMatrix& x) {
    if (!x.is_symmetric()) fail(ErrorKind::invalid_input, "psd_check needs a symmetric matrix");
    const std::size_t n = x.size();
    // Invariant: a = c x c^T. Each pivot clears its row and column among the
    // indices still open.
    RationalMatrix a = x;
    RationalMatrix c = RationalMatrix::identity(n);
    std::vector<bool> open(n, true);
    PsdVerdict verdict;

    auto row_of = [&](std::size_t i) {
        std::vector<Rational> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = c(i, j);
        return r;
    };
    auto reject = [&](std::vector<Rational> w) {
        verdict.is_psd = false;
        verdict.witness_value = quadratic_form(x, w);
        verdict.witness = std::move(w);
        return verdict;
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (!open[i]) continue;
            if (a(i, i) < 0) return reject(row_of(i));
            if (a(i, i) > 0 && !pivot) pivot = i;
        }
        if (!pivot) {
            // Zero diagonal on the open block: any nonzero entry b = a(j, k)
            // gives (-b c_j + c_k) with value -2 b^2.
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (open[j] && open[k] && j != k && a(j, k) != 0) {
                        const Rational b = a(j, k);
                        std::vector<Rational> w(n);
                        for (std::size_t m = 0; m < n; ++m) w[m] = -b * c(j, m) + c(k, m);
                        return reject(std::move(w));
                    }
            break;
        }
        const std::size_t p = *pivot;
        open[p] = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!open[q] || a(q, p) == 0) continue;
            const Rational f = a(q, p) / a(p, p);
            for (std::size_t m = 0; m < n; ++m) {
                a(q, m) -= f * a(p, m);
                c(q, m) -= f * c(p, m);
            }
            for (std::size_t m = 0; m < n; ++m) a(m, q) -= f * a(m, p);
        }
    }

    verdict.is_psd = true;
    std::vector<Rational> diagonal(n);
    for (std::size_t i = 0; i < n; ++i) diagonal[i] = a(i, i);
    verdict.diagonal = std::move(diagonal);
    verdict.transform = std::move(c);
    return verdict;
}

} // namespace bimono
