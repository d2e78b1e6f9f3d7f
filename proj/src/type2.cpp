#include "bimono/type2.hpp"

#include "bimono/error.hpp"

#include <algorithm>

namespace bimono {

LocalOperator LocalOperator::identity(int family, std::size_t dimension) {
    LocalOperator op{family, RationalMatrixData(dimension, std::vector<Rational>(dimension, Rational(0)))};
    for (std::size_t i = 0; i < dimension; ++i) op.matrix[i][i] = 1;
    return op;
}

LocalOperator operator*(const LocalOperator& a, const LocalOperator& b) {
    if (a.family != b.family || a.matrix.size() != b.matrix.size())
        fail(ErrorKind::invalid_input, "operators act on different spaces");
    const std::size_t d = a.matrix.size();
    LocalOperator out{a.family, RationalMatrixData(d, std::vector<Rational>(d, Rational(0)))};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (a.matrix[i][k] != 0)
                for (std::size_t j = 0; j < d; ++j) out.matrix[i][j] += a.matrix[i][k] * b.matrix[k][j];
    return out;
}

ProductVector ProductVector::xi() {
    ProductVector v;
    v.add({}, Rational(1));
    return v;
}

void ProductVector::add(TensorWord word, const Rational& c) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i].index == 0) fail(ErrorKind::invalid_input, "tensor factors must lie in the complement of xi");
        if (i > 0 && word[i - 1].family <= word[i].family)
            fail(ErrorKind::invalid_input, "tensor word labels must strictly decrease");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(word), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational ProductVector::coefficient(const TensorWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t ProductVector::max_word_length() const {
    std::size_t n = 0;
    for (const auto& [word, c] : terms_) n = std::max(n, word.size());
    return n;
}

namespace {

const RationalMatrixData& checked_matrix(const std::vector<PointedSpace>& spaces, const LocalOperator& t) {
    if (t.family < 1 || static_cast<std::size_t>(t.family) > spaces.size())
        fail(ErrorKind::invalid_input, "operator family " + std::to_string(t.family) + " has no space");
    const std::size_t d = spaces[static_cast<std::size_t>(t.family - 1)].dimension;
    if (d == 0) fail(ErrorKind::invalid_input, "pointed spaces need dimension >= 1");
    if (t.matrix.size() != d) fail(ErrorKind::invalid_input, "operator matrix does not match its space");
    for (const auto& row : t.matrix)
        if (row.size() != d) fail(ErrorKind::invalid_input, "operator matrix must be square");
    return t.matrix;
}

void check_length(std::size_t length, std::size_t max_len) {
    if (length > max_len)
        fail(ErrorKind::resource_limit, "tensor word of length " + std::to_string(length) + " exceeds max_len " +
                                            std::to_string(max_len));
}

/// Applies T to the basis vector e_b of X_k at one end of `rest`: the xi part
/// contracts to `rest`, the complement part is attached as a new factor.
void act_on_factor(const RationalMatrixData& m, int k, std::size_t b, const TensorWord& rest, bool front,
                   const Rational& c, std::size_t max_len, ProductVector& out) {
    out.add(rest, c * m[0][b]);
    for (std::size_t j = 1; j < m.size(); ++j) {
        if (m[j][b] == 0) continue;
        TensorWord w;
        w.reserve(rest.size() + 1);
        if (front) w.push_back({k, j});
        w.insert(w.end(), rest.begin(), rest.end());
        if (!front) w.push_back({k, j});
        check_length(w.size(), max_len);
        out.add(std::move(w), c * m[j][b]);
    }
}

} // namespace

ProductVector lambda_action(const std::vector<PointedSpace>& spaces, const LocalOperator& t, const ProductVector& v,
                            std::size_t max_len) {
    const auto& m = checked_matrix(spaces, t);
    const int k = t.family;
    ProductVector out;
    for (const auto& [word, c] : v.terms()) {
        if (word.empty() || k > word.front().family) {
            act_on_factor(m, k, 0, word, true, c, max_len, out);
        } else if (k == word.front().family) {
            act_on_factor(m, k, word.front().index, TensorWord(word.begin() + 1, word.end()), true, c, max_len, out);
        }
    }
    return out;
}

ProductVector rho_action(const std::vector<PointedSpace>& spaces, const LocalOperator& t, const ProductVector& v,
                         std::size_t max_len) {
    const auto& m = checked_matrix(spaces, t);
    const int k = t.family;
    ProductVector out;
    for (const auto& [word, c] : v.terms()) {
        if (word.empty() || k < word.back().family) {
            act_on_factor(m, k, 0, word, false, c, max_len, out);
        } else if (k == word.back().family) {
            act_on_factor(m, k, word.back().index, TensorWord(word.begin(), word.end() - 1), false, c, max_len, out);
        }
    }
    return out;
}

Rational type2_moment(const std::vector<PointedSpace>& spaces, const std::vector<Type2Letter>& word,
                      std::size_t max_len) {
    if (max_len == 0) max_len = word.size();
    ProductVector v = ProductVector::xi();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = it->side == Side::left ? lambda_action(spaces, it->op, v, max_len) : rho_action(spaces, it->op, v, max_len);
    return v.xi_coefficient();
}

} // namespace bimono
