#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacobi/codes.hpp"

namespace jacobi {

// Multiset of k-subsets of {0..n-1}, each a bit mask (n <= 64).
struct BlockMultiset {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<std::uint64_t> blocks;
};

struct DesignReport {
    unsigned t = 0;
    std::optional<std::uint64_t> lambda;  // set iff min_cover == max_cover
    std::uint64_t min_cover = 0;
    std::uint64_t max_cover = 0;
    std::size_t blocks = 0;
    unsigned k = 0;
};

// supp(u) for every codeword of the given weight, with multiplicity.
BlockMultiset supports(const LinearCode& code, unsigned weight, const Budget& budget = Budget::from_env());

// Coverage of every t-subset of the points, blocks counted with multiplicity.
DesignReport check_design(const BlockMultiset& blocks, unsigned t, const Budget& budget = Budget::from_env());

struct WeightClassReport {
    unsigned weight = 0;
    DesignReport report;
};

struct HomogeneityReport {
    bool homogeneous = false;
    std::vector<WeightClassReport> classes;  // every nonzero weight present
};

// C is t-homogeneous when each nonzero weight class supports a t-design.
HomogeneityReport check_homogeneous(const LinearCode& code, unsigned t, const Budget& budget = Budget::from_env());

}  // namespace jacobi
