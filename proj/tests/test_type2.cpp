#include "oracles.hpp"

#include "bimono/convolution.hpp"
#include "bimono/error.hpp"
#include "bimono/type2.hpp"

#include <doctest.h>

using namespace bimono;

namespace {

const std::vector<PointedSpace> spaces{{2}, {3}, {2}};

LocalOperator random_operator(std::mt19937& rng, int family) {
    const std::size_t d = spaces[static_cast<std::size_t>(family - 1)].dimension;
    LocalOperator t{family, RationalMatrixData(d, std::vector<Rational>(d))};
    for (auto& row : t.matrix)
        for (auto& x : row) x = oracle::random_rational(rng);
    return t;
}

/// xi plus a few random words with strictly decreasing labels.
ProductVector random_vector(std::mt19937& rng) {
    ProductVector v = ProductVector::xi();
    v.add({}, oracle::random_rational(rng) + 1);
    const std::vector<TensorWord> words{{{1, 1}}, {{2, 2}}, {{3, 1}, {1, 1}}, {{3, 1}, {2, 1}, {1, 1}}, {{2, 1}, {1, 1}}};
    for (const auto& w : words) v.add(w, oracle::random_rational(rng));
    return v;
}

/// phi_xi_k(T^n) for every n, as a distribution of the constant words.
WordDistribution powers(const LocalOperator& t, std::size_t max_len) {
    WordDistribution d(max_len);
    LocalOperator p = t;
    for (std::size_t n = 1; n <= max_len; ++n, p = p * t) {
        d.set(ChiWord::parse(std::string(n, 'L')), p.matrix[0][0]);
        d.set(ChiWord::parse(std::string(n, 'R')), p.matrix[0][0]);
    }
    return d;
}

std::vector<std::vector<int>> all_label_words(std::size_t n, int labels) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int l = 1; l <= labels; ++l) {
                next.push_back(w);
                next.back().push_back(l);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("product vectors keep labels strictly decreasing") {
    ProductVector v;
    v.add({{2, 1}, {1, 1}}, Rational(3));
    v.add({{2, 1}, {1, 1}}, Rational(-3));
    CHECK(v.terms().empty());
    CHECK_THROWS_AS(v.add({{1, 1}, {2, 1}}, Rational(1)), Error);
    CHECK_THROWS_AS(v.add({{1, 1}, {1, 1}}, Rational(1)), Error);
    CHECK_THROWS_AS(v.add({{1, 0}}, Rational(1)), Error);
    CHECK(ProductVector::xi().xi_coefficient() == 1);
}

TEST_CASE("case formulas") {
    std::mt19937 rng(41);
    const auto t = random_operator(rng, 1);
    ProductVector v;
    v.add({{2, 1}}, Rational(1));
    CHECK(lambda_action(spaces, t, v, 4).terms().empty()); // k < k1
    const auto t3 = random_operator(rng, 3);
    CHECK(rho_action(spaces, t3, v, 4).terms().empty()); // k > kn

    // On xi: phi(T) xi plus the complement part of T xi_k.
    const auto on_xi = lambda_action(spaces, t, ProductVector::xi(), 4);
    CHECK(on_xi.xi_coefficient() == t.matrix[0][0]);
    CHECK(on_xi.coefficient({{1, 1}}) == t.matrix[1][0]);
    CHECK(rho_action(spaces, t, ProductVector::xi(), 4) == on_xi);

    // Acting on the first factor of a word of the same family.
    ProductVector w;
    w.add({{1, 1}}, Rational(1));
    const auto acted = lambda_action(spaces, t, w, 4);
    CHECK(acted.xi_coefficient() == t.matrix[0][1]);
    CHECK(acted.coefficient({{1, 1}}) == t.matrix[1][1]);

    for (int k = 1; k <= 3; ++k) {
        const auto id = LocalOperator::identity(k, spaces[static_cast<std::size_t>(k - 1)].dimension);
        // The identity fixes xi and every word that the family can reach; the
        // representations are not unital on the rest.
        const auto x = random_vector(rng);
        ProductVector head, tail;
        for (const auto& [word, c] : x.terms()) {
            if (word.empty() || word.front().family <= k) head.add(word, c);
            if (word.empty() || word.back().family >= k) tail.add(word, c);
        }
        CHECK(lambda_action(spaces, id, head, 4) == head);
        CHECK(rho_action(spaces, id, tail, 4) == tail);
        if (k < 3) CHECK(lambda_action(spaces, id, x, 4) != x);
    }
}

TEST_CASE("both representations are multiplicative") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10; ++trial)
        for (int k = 1; k <= 3; ++k) {
            const auto s = random_operator(rng, k), t = random_operator(rng, k);
            const auto v = random_vector(rng);
            CHECK(lambda_action(spaces, s * t, v, 4) == lambda_action(spaces, s, lambda_action(spaces, t, v, 4), 4));
            CHECK(rho_action(spaces, s * t, v, 4) == rho_action(spaces, s, rho_action(spaces, t, v, 4), 4));
        }
}

TEST_CASE("single letters see the vector state of their space") {
    std::mt19937 rng(43);
    for (int k = 1; k <= 3; ++k) {
        const auto t = random_operator(rng, k);
        CHECK(type2_moment(spaces, {{Side::left, t}}) == t.matrix[0][0]);
        CHECK(type2_moment(spaces, {{Side::right, t}}) == t.matrix[0][0]);
    }
    CHECK(type2_moment(spaces, {}) == 1);
}

TEST_CASE("abab factorizes completely, unlike a^2 b^2") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_operator(rng, 1), b = random_operator(rng, 2);
        const Type2Letter la{Side::left, a}, rb{Side::right, b};
        const Rational fa = a.matrix[0][0], fb = b.matrix[0][0];
        CHECK(type2_moment(spaces, {la, rb, la, rb}) == fa * fa * fb * fb);
        const Rational fa2 = (a * a).matrix[0][0], fb2 = (b * b).matrix[0][0];
        CHECK(type2_moment(spaces, {la, la, rb, rb}) == fa2 * fb2);
        if (fa2 != fa * fa && fb2 != fb * fb) CHECK(fa * fa * fb * fb != fa2 * fb2);

        // Type I puts the pairs in the opposite relative order on the right.
        OrderedFamily family{{powers(a, 4), powers(b, 4)}};
        CHECK(multi_family_moment(family, ChiWord::parse("LRLR"), OmegaWord::parse("1,2,1,2")) == fa2 * fb2);
    }
}

TEST_CASE("left letters are monotonically independent") {
    std::mt19937 rng(45);
    std::vector<LocalOperator> ops;
    for (int k = 1; k <= 3; ++k) ops.push_back(random_operator(rng, k));
    OrderedFamily family{{powers(ops[0], 4), powers(ops[1], 4), powers(ops[2], 4)}};
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& labels : all_label_words(n, 3)) {
            std::vector<Type2Letter> word;
            for (int l : labels) word.push_back({Side::left, ops[static_cast<std::size_t>(l - 1)]});
            CHECK(type2_moment(spaces, word) ==
                  multi_family_moment(family, ChiWord::parse(std::string(n, 'L')), OmegaWord{labels}));
        }
}

TEST_CASE("right letters are anti-monotonically independent") {
    std::mt19937 rng(46);
    std::vector<LocalOperator> ops;
    for (int k = 1; k <= 3; ++k) ops.push_back(random_operator(rng, k));
    OrderedFamily reversed{{powers(ops[2], 5), powers(ops[1], 5), powers(ops[0], 5)}};
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& labels : all_label_words(n, 3)) {
            std::vector<Type2Letter> word;
            OmegaWord flipped;
            for (int l : labels) {
                word.push_back({Side::right, ops[static_cast<std::size_t>(l - 1)]});
                flipped.labels.push_back(4 - l);
            }
            CHECK(type2_moment(spaces, word) == multi_family_moment(reversed, ChiWord::parse(std::string(n, 'R')), flipped));
        }
}

TEST_CASE("truncation overflow is reported") {
    std::mt19937 rng(47);
    const auto a = random_operator(rng, 1), b = random_operator(rng, 2), c = random_operator(rng, 3);
    try {
        (void)type2_moment(spaces, {{Side::left, c}, {Side::left, b}, {Side::left, a}}, 1);
        FAIL("expected resource_limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
    }
    CHECK_NOTHROW(type2_moment(spaces, {{Side::left, c}, {Side::left, b}, {Side::left, a}}));
    LocalOperator bad{1, {{Rational(1)}}};
    CHECK_THROWS_AS(type2_moment(spaces, {{Side::left, bad}}), Error);
    LocalOperator outside{4, {{Rational(1)}}};
    CHECK_THROWS_AS(type2_moment(spaces, {{Side::left, outside}}), Error);
}
