#include "bimono/cumulants.hpp"

#include "bimono/convolution.hpp"
#include "bimono/error.hpp"

#include <bit>
#include <map>
#include <mutex>

namespace bimono {

CumulantTable::CumulantTable(std::size_t max_len) : max_len_(max_len) {
    if (max_len > max_word_len) fail(ErrorKind::resource_limit, "cumulant table length above limit");
    values_.assign(word_index(max_len + 1, 0), std::nullopt);
}

CumulantTable CumulantTable::from_grid(const CumulantGrid& grid, std::size_t max_len) {
    CumulantTable table(max_len);
    for (std::size_t n = 1; n <= max_len; ++n)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
            auto rights = static_cast<std::size_t>(std::popcount(bits));
            auto lefts = n - rights;
            if (lefts <= grid.order() && rights <= grid.order()) table.set(n, bits, grid(lefts, rights));
        }
    return table;
}

bool CumulantTable::contains(const ChiWord& chi) const {
    return !chi.empty() && chi.size() <= max_len_ && values_[word_index(chi.size(), right_bits(chi))].has_value();
}

const Rational& CumulantTable::at(std::size_t length, std::uint32_t bits) const {
    if (length == 0 || length > max_len_ || !values_[word_index(length, bits)])
        fail(ErrorKind::incomplete_table, "missing cumulant for word '" + word_from_bits(length, bits).str() + "'");
    return *values_[word_index(length, bits)];
}

const Rational& CumulantTable::at(const ChiWord& chi) const { return at(chi.size(), right_bits(chi)); }

void CumulantTable::set(const ChiWord& chi, Rational value) { set(chi.size(), right_bits(chi), std::move(value)); }

void CumulantTable::set(std::size_t length, std::uint32_t bits, Rational value) {
    if (length == 0) fail(ErrorKind::invalid_input, "cumulants are indexed by nonempty words");
    if (length > max_len_) fail(ErrorKind::resource_limit, "word longer than the table's max_len");
    values_[word_index(length, bits)] = std::move(value);
}

CumulantGrid CumulantTable::grid(std::size_t order) const {
    CumulantGrid g(order);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t n = 0; n <= order; ++n)
            if (m + n > 0) g(m, n) = at(ChiWord::grid(m, n));
    return g;
}

namespace {

std::uint32_t compress(std::uint32_t word_bits, std::uint32_t mask) {
    std::uint32_t out = 0;
    int k = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        int p = std::countr_zero(m);
        if ((word_bits >> p) & 1U) out |= std::uint32_t{1} << k;
        ++k;
    }
    return out;
}

std::vector<int> chi_order_zero_based(std::size_t n, std::uint32_t bits) {
    std::vector<int> order;
    order.reserve(n);
    for (std::size_t p = 0; p < n; ++p)
        if (!((bits >> p) & 1U)) order.push_back(static_cast<int>(p));
    for (std::size_t p = n; p-- > 0;)
        if ((bits >> p) & 1U) order.push_back(static_cast<int>(p));
    return order;
}

std::vector<WeightedPartition> build_weighted(const ChiWord& chi) {
    std::vector<WeightedPartition> out;
    const std::uint32_t bits = right_bits(chi);
    for (const auto& pi : enumerate_bnc(chi, max_word_len)) {
        const auto forest = nesting_forest(chi, pi);
        WeightedPartition term;
        Integer denominator(1);
        for (int size : forest.subtree_size) denominator *= size;
        term.weight = Rational(Integer(1), denominator);
        for (const auto& block : pi.blocks) {
            std::uint32_t mask = 0;
            for (int p : block) mask |= std::uint32_t{1} << (p - 1);
            term.block_lengths.push_back(block.size());
            term.block_bits.push_back(compress(bits, mask));
        }
        out.push_back(std::move(term));
    }
    return out;
}

} // namespace

const std::vector<WeightedPartition>& weighted_partitions(const ChiWord& chi) {
    static std::mutex mutex;
    static std::map<std::string, std::vector<WeightedPartition>> cache;
    const std::string key = chi.str();
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = build_weighted(chi);
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(built)).first->second;
}

Rational moment_from_cumulants(const CumulantTable& k, const ChiWord& chi) {
    if (chi.empty()) return Rational(1);
    Rational total(0);
    for (const auto& term : weighted_partitions(chi)) {
        Rational product = term.weight;
        for (std::size_t b = 0; b < term.block_lengths.size(); ++b) product *= k.at(term.block_lengths[b], term.block_bits[b]);
        total += product;
    }
    return total;
}

WordDistribution moments_from_cumulants(const CumulantTable& k) {
    return WordDistribution::from_function(k.max_len(), [&](const ChiWord& chi) { return moment_from_cumulants(k, chi); });
}

namespace {

/// K_chi = phi(chi) minus every multi-block term of the partition sum; the
/// shorter cumulants are filled into `table` on demand.
const Rational& cumulant_memo(const WordDistribution& d, std::size_t length, std::uint32_t bits, CumulantTable& table) {
    if (table.contains(word_from_bits(length, bits))) return table.at(length, bits);
    const ChiWord chi = word_from_bits(length, bits);
    Rational value = d.at(length, bits);
    for (const auto& term : weighted_partitions(chi)) {
        if (term.block_lengths.size() < 2) continue;
        Rational product = term.weight;
        for (std::size_t b = 0; b < term.block_lengths.size(); ++b)
            product *= cumulant_memo(d, term.block_lengths[b], term.block_bits[b], table);
        value -= product;
    }
    table.set(length, bits, std::move(value));
    return table.at(length, bits);
}

} // namespace

Rational cumulant_from_moments(const WordDistribution& d, const ChiWord& chi) {
    if (chi.empty()) fail(ErrorKind::invalid_input, "cumulants are indexed by nonempty words");
    if (chi.size() > d.max_len()) fail(ErrorKind::resource_limit, "word longer than the distribution's max_len");
    CumulantTable table(chi.size());
    return cumulant_memo(d, chi.size(), right_bits(chi), table);
}

CumulantTable cumulants_from_moments(const WordDistribution& d) {
    CumulantTable table(d.max_len());
    for (std::size_t n = 1; n <= d.max_len(); ++n)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) cumulant_memo(d, n, bits, table);
    return table;
}

namespace {

/// phi_t memoized by word; index 0 (empty word) is the constant 1.
const TimePolynomial& phi_t_memo(const CumulantTable& k, std::size_t length, std::uint32_t bits,
                                 std::vector<std::optional<TimePolynomial>>& memo) {
    auto& slot = memo[word_index(length, bits)];
    if (slot) return *slot;
    if (length == 0) return *(slot = TimePolynomial(1));
    const auto order = chi_order_zero_based(length, bits);
    const std::uint32_t full = (length == 32) ? ~0U : ((std::uint32_t{1} << length) - 1);
    TimePolynomial derivative;
    for (std::size_t len = 1; len <= length; ++len)
        for (std::size_t start = 0; start + len <= length; ++start) {
            std::uint32_t interval = 0;
            for (std::size_t i = start; i < start + len; ++i) interval |= std::uint32_t{1} << order[i];
            const Rational& cumulant = k.at(len, compress(bits, interval));
            if (cumulant == 0) continue;
            const std::uint32_t rest = full & ~interval;
            derivative += phi_t_memo(k, length - len, compress(bits, rest), memo) * cumulant;
        }
    return *(slot = derivative.integral());
}

} // namespace

TimePolynomial phi_t(const CumulantTable& k, const ChiWord& chi) {
    std::vector<std::optional<TimePolynomial>> memo(word_index(chi.size() + 1, 0));
    return phi_t_memo(k, chi.size(), right_bits(chi), memo);
}

namespace {

/// The same recursion specialized to the words L^m R^n, whose chi-order is m
/// left letters followed by n right letters; removing an interval leaves a
/// word of the same shape.
class GridPhiT {
public:
    explicit GridPhiT(const CumulantGrid& k) : k_(k), memo_((k.order() + 1) * (k.order() + 1)) {}

    /// When `skip_top` is set the single-block term K_{m,n} t of the cell is left out.
    TimePolynomial evaluate(std::size_t m, std::size_t n, bool skip_top = false) {
        if (m + n == 0) return TimePolynomial(1);
        auto& slot = memo_[m * (k_.order() + 1) + n];
        if (slot && !skip_top) return *slot;
        const std::size_t len = m + n;
        TimePolynomial derivative;
        for (std::size_t span = 1; span <= len; ++span)
            for (std::size_t start = 0; start + span <= len; ++start) {
                if (skip_top && span == len) continue;
                const std::size_t end = start + span;
                const std::size_t lefts = start < m ? std::min(end, m) - start : 0;
                const std::size_t rights = span - lefts;
                const Rational& cumulant = k_(lefts, rights);
                if (cumulant == 0) continue;
                derivative += evaluate(m - lefts, n - rights) * cumulant;
            }
        auto result = derivative.integral();
        if (!skip_top) slot = result;
        return result;
    }

    void invalidate(std::size_t m, std::size_t n) { memo_[m * (k_.order() + 1) + n].reset(); }

private:
    const CumulantGrid& k_;
    std::vector<std::optional<TimePolynomial>> memo_;
};

} // namespace

GridDistribution moments_from_cumulants(const CumulantGrid& k) {
    GridPhiT phi(k);
    GridDistribution out(k.order());
    for (std::size_t m = 0; m <= k.order(); ++m)
        for (std::size_t n = 0; n <= k.order(); ++n)
            if (m + n > 0) out(m, n) = phi.evaluate(m, n)(Rational(1));
    return out;
}

CumulantGrid cumulants_from_moments(const GridDistribution& g) {
    CumulantGrid k(g.order());
    GridPhiT phi(k);
    // By total degree, so every proper sub-cell is final before it is used.
    for (std::size_t total = 1; total <= 2 * g.order(); ++total)
        for (std::size_t m = 0; m <= std::min(total, g.order()); ++m) {
            const std::size_t n = total - m;
            if (n > g.order()) continue;
            k(m, n) = g(m, n) - phi.evaluate(m, n, /*skip_top=*/true)(Rational(1));
            phi.invalidate(m, n);
        }
    return k;
}

WordDistribution dot_distribution(const WordDistribution& d, unsigned n) { return convolution_power(d, n); }

Rational dot_moment(const WordDistribution& d, const ChiWord& chi, unsigned n) {
    if (n == 0) fail(ErrorKind::invalid_input, "dot operation needs N >= 1");
    if (chi.size() > d.max_len()) fail(ErrorKind::resource_limit, "word longer than the distribution's max_len");
    if (n == 1) return d.at(chi);
    // Only words up to |chi| matter; truncate before convolving.
    WordDistribution small(chi.size());
    for (std::size_t len = 1; len <= chi.size(); ++len)
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << len); ++bits) small.set(len, bits, d.at(len, bits));
    return convolution_power(small, n).at(chi);
}

} // namespace bimono
