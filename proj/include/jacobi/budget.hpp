#pragma once

#include <cstdint>
#include <string>

namespace jacobi {

// Upper bound on the number of items (codewords, word pairs, candidate
// vectors, t-subsets) a single enumeration may visit.
struct Budget {
    static constexpr std::uint64_t kDefaultLimit = std::uint64_t{1} << 26;

    std::uint64_t limit = kDefaultLimit;

    // Reads JF_BUDGET when set; falls back to the default limit.
    static Budget from_env();

    bool allows(std::uint64_t items) const noexcept { return items <= limit; }

    // Throws ErrorKind::Budget naming `what` when `items` exceeds the limit.
    void require(std::uint64_t items, const std::string& what) const;
};

// Saturating product, used to size enumerations before running them.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;

}  // namespace jacobi
