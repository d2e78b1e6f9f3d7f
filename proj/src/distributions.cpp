#include "bimono/distributions.hpp"

#include "bimono/error.hpp"

#include <algorithm>
#include <bit>

namespace bimono {

std::uint32_t right_bits(const ChiWord& word) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word.sides()[i] == Side::right) bits |= std::uint32_t{1} << i;
    return bits;
}

ChiWord word_from_bits(std::size_t length, std::uint32_t bits) {
    std::vector<Side> sides(length);
    for (std::size_t i = 0; i < length; ++i) sides[i] = (bits >> i) & 1U ? Side::right : Side::left;
    return ChiWord(std::move(sides));
}

WordDistribution::WordDistribution(std::size_t max_len) : max_len_(max_len) {
    if (max_len > max_word_len)
        fail(ErrorKind::resource_limit, "word distribution length above " + std::to_string(max_word_len));
    values_.assign(word_index(max_len + 1, 0), Rational(0));
    values_[0] = 1;
}

WordDistribution WordDistribution::from_function(std::size_t max_len,
                                                 const std::function<Rational(const ChiWord&)>& moment) {
    WordDistribution d(max_len);
    for (std::size_t n = 1; n <= max_len; ++n)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits)
            d.set(n, bits, moment(word_from_bits(n, bits)));
    return d;
}

const Rational& WordDistribution::at(const ChiWord& word) const {
    if (word.size() > max_len_)
        fail(ErrorKind::resource_limit, "word '" + word.str() + "' longer than max_len " + std::to_string(max_len_));
    return values_[word_index(word.size(), right_bits(word))];
}

void WordDistribution::set(const ChiWord& word, Rational value) { set(word.size(), right_bits(word), std::move(value)); }

void WordDistribution::set(std::size_t length, std::uint32_t bits, Rational value) {
    if (length > max_len_) fail(ErrorKind::resource_limit, "word longer than max_len");
    if (length == 0 && value != 1) fail(ErrorKind::invalid_input, "the empty word has moment 1");
    values_[word_index(length, bits)] = std::move(value);
}

GridDistribution::GridDistribution(std::size_t order) : order_(order), values_((order + 1) * (order + 1), Rational(0)) {
    values_[0] = 1;
}

GridDistribution GridDistribution::truncated(std::size_t order) const {
    if (order > order_) fail(ErrorKind::invalid_input, "cannot extend a grid by truncation");
    GridDistribution g(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n) g(m, n) = (*this)(m, n);
    return g;
}

AtomicPlanarMeasure::AtomicPlanarMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].weight == 0) fail(ErrorKind::invalid_input, "atom weights must be nonzero");
        for (std::size_t j = 0; j < i; ++j)
            if (atoms_[i].s == atoms_[j].s && atoms_[i].t == atoms_[j].t)
                fail(ErrorKind::invalid_input, "atoms must be distinct");
    }
}

AtomicPlanarMeasure AtomicPlanarMeasure::dirac(Rational s, Rational t) {
    return AtomicPlanarMeasure({Atom{std::move(s), std::move(t), Rational(1)}});
}

Rational AtomicPlanarMeasure::total_mass() const {
    Rational total(0);
    for (const auto& a : atoms_) total += a.weight;
    return total;
}

AtomicPlanarMeasure AtomicPlanarMeasure::scaled(const Rational& factor) const {
    if (factor == 0) return {};
    auto atoms = atoms_;
    for (auto& a : atoms) a.weight *= factor;
    return AtomicPlanarMeasure(std::move(atoms));
}

AtomicPlanarMeasure operator+(const AtomicPlanarMeasure& a, const AtomicPlanarMeasure& b) {
    auto atoms = a.atoms_;
    for (const auto& atom : b.atoms_) {
        auto it = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& x) { return x.s == atom.s && x.t == atom.t; });
        if (it == atoms.end())
            atoms.push_back(atom);
        else
            it->weight += atom.weight;
    }
    std::erase_if(atoms, [](const Atom& x) { return x.weight == 0; });
    return AtomicPlanarMeasure(std::move(atoms));
}

GridDistribution grid_from_measure(const AtomicPlanarMeasure& mu, std::size_t order) {
    GridDistribution g(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n) {
            if (m == 0 && n == 0) continue;
            Rational sum(0);
            for (const auto& a : mu.atoms()) sum += a.weight * pow(a.s, static_cast<unsigned>(m)) * pow(a.t, static_cast<unsigned>(n));
            g(m, n) = sum;
        }
    return g;
}

WordDistribution word_from_grid(const GridDistribution& g, std::size_t max_len) {
    if (max_len > g.order())
        fail(ErrorKind::invalid_input, "max_len exceeds the grid order; words like L^max_len are not covered");
    WordDistribution d(max_len);
    for (std::size_t n = 1; n <= max_len; ++n)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
            auto rights = static_cast<std::size_t>(std::popcount(bits));
            d.set(n, bits, g(n - rights, rights));
        }
    return d;
}

GridDistribution grid_from_words(const WordDistribution& d, std::size_t order) {
    GridDistribution g(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n) {
            if (m + n == 0) continue;
            if (m + n > d.max_len()) fail(ErrorKind::resource_limit, "grid order needs words longer than max_len");
            g(m, n) = d.at(ChiWord::grid(m, n));
        }
    return g;
}

Rational moment_of(const WordDistribution& d, const ChiWord& chi, const Subset& subset) {
    Subset sorted_subset = subset;
    std::sort(sorted_subset.begin(), sorted_subset.end());
    for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
        if (sorted_subset[i] < 1 || sorted_subset[i] > static_cast<int>(chi.size()))
            fail(ErrorKind::invalid_input, "moment_of: position out of range");
        if (i > 0 && sorted_subset[i] == sorted_subset[i - 1])
            fail(ErrorKind::invalid_input, "moment_of: repeated position");
    }
    return d.at(chi.restrict(sorted_subset));
}

} // namespace bimono
