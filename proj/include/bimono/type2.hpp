#ifndef BIMONO_TYPE2_HPP
#define BIMONO_TYPE2_HPP

#include "bimono/partitions.hpp"
#include "bimono/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

// Finite-dimensional model of the monotonic product space with left and right
// actions. Family labels are 1-based and ordered by value.

namespace bimono {

/// X_k with basis e_0 = xi_k, e_1 .. e_{d-1} spanning the complement.
struct PointedSpace {
    std::size_t dimension = 1;
};

using RationalMatrixData = std::vector<std::vector<Rational>>;

/// An operator on X_k given by its matrix in the basis above.
struct LocalOperator {
    int family = 1;
    RationalMatrixData matrix;

    static LocalOperator identity(int family, std::size_t dimension);
    /// Matrix product: (a * b) applies b first.
    friend LocalOperator operator*(const LocalOperator& a, const LocalOperator& b);
};

/// One tensor factor: basis vector e_index (index >= 1) of X_family.
struct TensorFactor {
    int family;
    std::size_t index;
    friend auto operator<=>(const TensorFactor&, const TensorFactor&) = default;
};

/// Empty word = xi; otherwise family labels strictly decrease along the word.
using TensorWord = std::vector<TensorFactor>;

class ProductVector {
public:
    ProductVector() = default;
    static ProductVector xi();

    /// Adds c * word; throws invalid_input unless the labels strictly decrease.
    void add(TensorWord word, const Rational& c);

    const std::map<TensorWord, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(const TensorWord& word) const;
    Rational xi_coefficient() const { return coefficient({}); }
    std::size_t max_word_length() const;

    friend bool operator==(const ProductVector&, const ProductVector&) = default;

private:
    std::map<TensorWord, Rational> terms_; // zero coefficients never stored
};

/// lambda_k(T) v. Words longer than `max_len` raise resource_limit.
ProductVector lambda_action(const std::vector<PointedSpace>& spaces, const LocalOperator& t, const ProductVector& v,
                            std::size_t max_len);
/// rho_k(T) v, acting on the tail of each word.
ProductVector rho_action(const std::vector<PointedSpace>& spaces, const LocalOperator& t, const ProductVector& v,
                         std::size_t max_len);

struct Type2Letter {
    Side side;
    LocalOperator op;
};

/// phi_xi of the product of the represented letters (the last letter acts
/// first). max_len = 0 means the word length.
Rational type2_moment(const std::vector<PointedSpace>& spaces, const std::vector<Type2Letter>& word,
                      std::size_t max_len = 0);

} // namespace bimono

#endif
