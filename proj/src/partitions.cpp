#include "bimono/partitions.hpp"

#include "bimono/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace bimono {

ChiWord ChiWord::parse(std::string_view text) {
    std::vector<Side> sides;
    sides.reserve(text.size());
    for (char c : text) {
        if (c == 'L' || c == 'l')
            sides.push_back(Side::left);
        else if (c == 'R' || c == 'r')
            sides.push_back(Side::right);
        else
            fail(ErrorKind::invalid_input, "chi word must be over {L,R}: '" + std::string(text) + "'");
    }
    return ChiWord(std::move(sides));
}

ChiWord ChiWord::grid(std::size_t lefts, std::size_t rights) {
    std::vector<Side> sides(lefts, Side::left);
    sides.insert(sides.end(), rights, Side::right);
    return ChiWord(std::move(sides));
}

std::size_t ChiWord::count(Side side) const noexcept {
    return static_cast<std::size_t>(std::count(sides_.begin(), sides_.end(), side));
}

std::string ChiWord::str() const {
    std::string out;
    out.reserve(sides_.size());
    for (Side s : sides_) out.push_back(s == Side::left ? 'L' : 'R');
    return out;
}

ChiWord ChiWord::restrict(const std::vector<int>& positions) const {
    std::vector<Side> sides;
    sides.reserve(positions.size());
    for (int p : positions) sides.push_back((*this)[static_cast<std::size_t>(p)]);
    return ChiWord(std::move(sides));
}

OmegaWord OmegaWord::parse(std::string_view text) {
    OmegaWord out;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
            fail(ErrorKind::invalid_input, "omega must be comma-separated integers: '" + std::string(text) + "'");
        out.labels.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

int size_as_int(const ChiWord& chi) { return static_cast<int>(chi.size()); }

void check_subset(const ChiWord& chi, const Subset& subset, const char* what) {
    std::vector<bool> seen(chi.size() + 1, false);
    for (int p : subset) {
        if (p < 1 || p > size_as_int(chi))
            fail(ErrorKind::invalid_input, std::string(what) + ": position out of range");
        if (seen[static_cast<std::size_t>(p)])
            fail(ErrorKind::invalid_input, std::string(what) + ": repeated position");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

Subset sorted(Subset s) {
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

ChiPermutation chi_order(const ChiWord& chi) {
    if (chi.empty()) fail(ErrorKind::invalid_input, "chi word must be nonempty");
    const int n = size_as_int(chi);
    ChiPermutation out;
    out.order.reserve(chi.size());
    for (int p = 1; p <= n; ++p)
        if (chi[static_cast<std::size_t>(p)] == Side::left) out.order.push_back(p);
    for (int p = n; p >= 1; --p)
        if (chi[static_cast<std::size_t>(p)] == Side::right) out.order.push_back(p);
    out.rank.assign(chi.size() + 1, -1);
    for (int i = 0; i < n; ++i) out.rank[static_cast<std::size_t>(out.order[static_cast<std::size_t>(i)])] = i;
    return out;
}

ChiIntervalSet chi_intervals(const ChiWord& chi) {
    ChiIntervalSet out;
    if (chi.empty()) return out;
    const auto perm = chi_order(chi);
    const std::size_t n = chi.size();
    for (std::size_t len = 1; len <= n; ++len)
        for (std::size_t start = 0; start + len <= n; ++start)
            out.intervals.push_back(sorted(Subset(perm.order.begin() + static_cast<std::ptrdiff_t>(start),
                                                  perm.order.begin() + static_cast<std::ptrdiff_t>(start + len))));
    return out;
}

std::vector<Block> pi_chi_omega(const ChiWord& chi, const OmegaWord& omega) {
    if (chi.size() != omega.size()) fail(ErrorKind::invalid_input, "chi and omega lengths differ");
    if (chi.empty()) return {};
    const auto perm = chi_order(chi);
    std::vector<Block> blocks;
    int current = 0;
    for (std::size_t i = 0; i < perm.order.size(); ++i) {
        int p = perm.order[i];
        int label = omega.labels[static_cast<std::size_t>(p - 1)];
        if (i == 0 || label != current) {
            blocks.emplace_back();
            current = label;
        }
        blocks.back().push_back(p);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    return blocks;
}

ChiIntervalSet complement_intervals(const ChiWord& chi, const Subset& subset) {
    check_subset(chi, subset, "complement_intervals");
    ChiIntervalSet out;
    if (chi.empty()) return out;
    const auto perm = chi_order(chi);
    std::vector<bool> chosen(chi.size() + 1, false);
    for (int p : subset) chosen[static_cast<std::size_t>(p)] = true;
    Subset gap;
    for (int p : perm.order) {
        if (chosen[static_cast<std::size_t>(p)]) {
            if (!gap.empty()) out.intervals.push_back(sorted(std::move(gap)));
            gap.clear();
        } else {
            gap.push_back(p);
        }
    }
    if (!gap.empty()) out.intervals.push_back(sorted(std::move(gap)));
    return out;
}

bool is_interior(const ChiWord& chi, const Subset& inner, const Subset& outer) {
    check_subset(chi, inner, "is_interior");
    check_subset(chi, outer, "is_interior");
    if (inner.empty() || outer.empty()) fail(ErrorKind::invalid_input, "is_interior: blocks must be nonempty");
    for (int v : inner)
        if (std::find(outer.begin(), outer.end(), v) != outer.end())
            fail(ErrorKind::invalid_input, "is_interior: blocks overlap");
    const auto perm = chi_order(chi);
    int lo = perm.rank[static_cast<std::size_t>(outer.front())];
    int hi = lo;
    for (int w : outer) {
        lo = std::min(lo, perm.rank[static_cast<std::size_t>(w)]);
        hi = std::max(hi, perm.rank[static_cast<std::size_t>(w)]);
    }
    return std::any_of(inner.begin(), inner.end(), [&](int v) {
        int r = perm.rank[static_cast<std::size_t>(v)];
        return lo < r && r < hi;
    });
}

std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

namespace detail {

namespace {

using Rgs = std::vector<std::uint8_t>;

std::vector<Rgs> build_noncrossing(std::size_t n, const std::vector<const std::vector<Rgs>*>& smaller) {
    // Split on s = largest element of the block containing 0: the part [0, s]
    // is a partition of [0, s) with s appended to the block of 0, and (s, n)
    // is an independent non-crossing partition.
    std::vector<Rgs> out;
    out.reserve(catalan(n));
    for (std::size_t s = 0; s < n; ++s) {
        const auto& heads = *smaller[s];
        const auto& tails = *smaller[n - 1 - s];
        for (const auto& head : heads) {
            Rgs prefix = head;
            prefix.push_back(0);
            std::uint8_t shift = prefix.empty() ? 0 : static_cast<std::uint8_t>(*std::max_element(prefix.begin(), prefix.end()) + 1);
            for (const auto& tail : tails) {
                Rgs full = prefix;
                for (auto label : tail) full.push_back(static_cast<std::uint8_t>(label + shift));
                out.push_back(std::move(full));
            }
        }
    }
    return out;
}

} // namespace

const std::vector<std::vector<std::uint8_t>>& noncrossing_rgs(std::size_t n) {
    static std::mutex mutex;
    static std::vector<std::unique_ptr<std::vector<Rgs>>> cache;
    std::lock_guard lock(mutex);
    if (cache.empty()) cache.push_back(std::make_unique<std::vector<Rgs>>(std::vector<Rgs>{Rgs{}}));
    while (cache.size() <= n) {
        std::vector<const std::vector<Rgs>*> smaller;
        for (auto& c : cache) smaller.push_back(c.get());
        cache.push_back(std::make_unique<std::vector<Rgs>>(build_noncrossing(cache.size(), smaller)));
    }
    return *cache[n];
}

} // namespace detail

namespace {

SetPartition canonical_partition(std::vector<Block> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return SetPartition{std::move(blocks)};
}

} // namespace

std::vector<SetPartition> enumerate_bnc(const ChiWord& chi, std::size_t bound) {
    if (chi.size() > bound)
        fail(ErrorKind::resource_limit, "enumeration bound exceeded: n=" + std::to_string(chi.size()));
    if (chi.empty()) return {SetPartition{}};
    const auto perm = chi_order(chi);
    const auto& rgs_list = detail::noncrossing_rgs(chi.size());
    std::vector<SetPartition> out;
    out.reserve(rgs_list.size());
    for (const auto& rgs : rgs_list) {
        std::size_t blocks = static_cast<std::size_t>(*std::max_element(rgs.begin(), rgs.end())) + 1;
        std::vector<Block> bs(blocks);
        for (std::size_t i = 0; i < rgs.size(); ++i) bs[rgs[i]].push_back(perm.order[i]);
        out.push_back(canonical_partition(std::move(bs)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

NestingForest nesting_forest(const ChiWord& chi, const SetPartition& pi) {
    const auto perm = chi_order(chi);
    const std::size_t m = pi.size();
    std::vector<int> lo(m), hi(m);
    for (std::size_t i = 0; i < m; ++i) {
        lo[i] = hi[i] = perm.rank[static_cast<std::size_t>(pi.blocks[i].front())];
        for (int p : pi.blocks[i]) {
            lo[i] = std::min(lo[i], perm.rank[static_cast<std::size_t>(p)]);
            hi[i] = std::max(hi[i], perm.rank[static_cast<std::size_t>(p)]);
        }
    }
    // For blocks of a non-crossing partition, block i is interior to block j
    // exactly when i's span lies strictly inside j's span.
    auto interior = [&](std::size_t i, std::size_t j) { return i != j && lo[j] < lo[i] && hi[i] < hi[j]; };
    NestingForest forest;
    forest.parent.assign(m, -1);
    forest.subtree_size.assign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!interior(i, j)) continue;
            ++forest.subtree_size[j];
            int& p = forest.parent[i];
            if (p < 0 || hi[j] - lo[j] < hi[static_cast<std::size_t>(p)] - lo[static_cast<std::size_t>(p)])
                p = static_cast<int>(j);
        }
    }
    return forest;
}

std::uint64_t NestingForest::linear_extension_count() const {
    // |pi|! / prod(subtree sizes), computed without overflow for |pi| <= 20.
    std::uint64_t num = 1;
    for (std::size_t k = 2; k <= parent.size(); ++k) num *= k;
    std::uint64_t den = 1;
    for (int s : subtree_size) den *= static_cast<std::uint64_t>(s);
    return num / den;
}

namespace {

void linear_extensions(const NestingForest& forest, std::vector<int>& rank, std::vector<bool>& placed,
                       int next_rank, std::vector<std::vector<int>>& out) {
    const std::size_t m = forest.parent.size();
    if (static_cast<std::size_t>(next_rank) > m) {
        out.push_back(rank);
        return;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (placed[i]) continue;
        int p = forest.parent[i];
        if (p >= 0 && !placed[static_cast<std::size_t>(p)]) continue;
        placed[i] = true;
        rank[i] = next_rank;
        linear_extensions(forest, rank, placed, next_rank + 1, out);
        placed[i] = false;
    }
}

} // namespace

std::vector<OrderedPartition> enumerate_bm(const ChiWord& chi, std::size_t bound) {
    if (chi.size() > bound)
        fail(ErrorKind::resource_limit, "enumeration bound exceeded: n=" + std::to_string(chi.size()));
    std::vector<OrderedPartition> out;
    for (auto& pi : enumerate_bnc(chi, bound)) {
        if (pi.size() == 0) {
            out.push_back(OrderedPartition{pi, {}});
            continue;
        }
        auto forest = nesting_forest(chi, pi);
        std::vector<int> rank(pi.size(), 0);
        std::vector<bool> placed(pi.size(), false);
        std::vector<std::vector<int>> ranks;
        linear_extensions(forest, rank, placed, 1, ranks);
        std::sort(ranks.begin(), ranks.end());
        for (auto& r : ranks) out.push_back(OrderedPartition{pi, std::move(r)});
    }
    return out;
}

} // namespace bimono
