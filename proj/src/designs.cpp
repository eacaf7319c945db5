#include "jacobi/designs.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

std::uint64_t choose(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) return std::numeric_limits<std::uint64_t>::max();
        r = r * (n - k + i) / i;
    }
    return r;
}

// Rank of a t-subset in colex order (combinatorial number system).
std::uint64_t colex_rank(std::uint64_t subset) {
    std::uint64_t rank = 0;
    unsigned i = 1;
    while (subset) {
        const unsigned pos = static_cast<unsigned>(std::countr_zero(subset));
        rank += choose(pos, i++);
        subset &= subset - 1;
    }
    return rank;
}

// Calls f on every t-subset of the bits set in `mask`.
template <class F>
void for_each_subset(std::uint64_t mask, unsigned t, F&& f) {
    int bits[64];
    int m = 0;
    for (std::uint64_t x = mask; x; x &= x - 1) bits[m++] = std::countr_zero(x);
    if (static_cast<int>(t) > m) return;
    int idx[64];
    for (unsigned i = 0; i < t; ++i) idx[i] = static_cast<int>(i);
    while (true) {
        std::uint64_t s = 0;
        for (unsigned i = 0; i < t; ++i) s |= std::uint64_t{1} << bits[idx[i]];
        f(s);
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && idx[i] == m - static_cast<int>(t) + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

BlockMultiset supports(const LinearCode& code, unsigned weight, const Budget& budget) {
    const std::size_t n = code.length();
    if (n > 64) fail(ErrorKind::InvalidArgument, "designs need n <= 64, got n = " + std::to_string(n));
    if (weight > n) fail(ErrorKind::InvalidArgument, "weight exceeds the code length");
    BlockMultiset out{static_cast<unsigned>(n), weight, {}};
    const auto words = code.enumerate(budget);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto u = words[i];
        std::uint64_t mask = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (u[j] != 0) mask |= std::uint64_t{1} << j;
        if (static_cast<unsigned>(std::popcount(mask)) == weight) out.blocks.push_back(mask);
    }
    return out;
}

DesignReport check_design(const BlockMultiset& blocks, unsigned t, const Budget& budget) {
    if (blocks.n > 64) fail(ErrorKind::InvalidArgument, "designs need n <= 64");
    if (t > blocks.k)
        fail(ErrorKind::InvalidArgument,
             "t = " + std::to_string(t) + " exceeds the block size " + std::to_string(blocks.k));
    const std::uint64_t subsets = choose(blocks.n, t);
    budget.require(subsets, "t-subset coverage table");
    budget.require(saturating_mul(blocks.blocks.size(), choose(blocks.k, t)), "block t-subset enumeration");
    std::vector<std::uint64_t> cover(subsets, 0);
    for (auto b : blocks.blocks) {
        if (static_cast<unsigned>(std::popcount(b)) != blocks.k)
            fail(ErrorKind::InvalidArgument, "block of the wrong size");
        for_each_subset(b, t, [&](std::uint64_t s) { ++cover[colex_rank(s)]; });
    }
    DesignReport r;
    r.t = t;
    r.k = blocks.k;
    r.blocks = blocks.blocks.size();
    const auto [lo, hi] = std::minmax_element(cover.begin(), cover.end());
    r.min_cover = *lo;
    r.max_cover = *hi;
    if (r.min_cover == r.max_cover) r.lambda = r.min_cover;
    return r;
}

HomogeneityReport check_homogeneous(const LinearCode& code, unsigned t, const Budget& budget) {
    const std::size_t n = code.length();
    const auto words = code.enumerate(budget);
    std::vector<bool> present(n + 1, false);
    for (std::size_t i = 0; i < words.size(); ++i) present[weight(words[i])] = true;
    HomogeneityReport out;
    out.homogeneous = true;
    for (unsigned wgt = 1; wgt <= n; ++wgt) {
        if (!present[wgt]) continue;
        if (t > wgt) fail(ErrorKind::InvalidArgument,
                          "t = " + std::to_string(t) + " exceeds the nonzero weight " + std::to_string(wgt));
        WeightClassReport c{wgt, check_design(supports(code, wgt, budget), t, budget)};
        out.homogeneous = out.homogeneous && c.report.lambda.has_value();
        out.classes.push_back(std::move(c));
    }
    return out;
}

}  // namespace jacobi
