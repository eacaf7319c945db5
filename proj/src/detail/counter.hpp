#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace jacobi::detail {

using CountMap = std::map<std::vector<std::uint16_t>, std::uint64_t>;

struct VectorHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

// Tallies count vectors over `slots` slots whose entries never exceed n.
// When slots * bit_width(n) fits in 64 bits, vectors are packed into one
// integer key (slot s occupies bits [s*width, (s+1)*width)), and a
// key can be built by summing slot_unit(s) once per position.
class CompositionCounter {
public:
    CompositionCounter(std::size_t slots, unsigned n)
        : slots_(slots), width_(std::bit_width(n == 0 ? 1u : n)), packed_(slots * width_ <= 64) {}

    bool packed() const noexcept { return packed_; }
    std::uint64_t slot_unit(std::size_t slot) const noexcept { return std::uint64_t{1} << (slot * width_); }

    void add_key(std::uint64_t key, std::uint64_t mult = 1) { packed_counts_[key] += mult; }
    void add(const std::vector<std::uint16_t>& counts, std::uint64_t mult = 1) {
        if (packed_) {
            std::uint64_t key = 0;
            for (std::size_t s = 0; s < slots_; ++s) key |= std::uint64_t{counts[s]} << (s * width_);
            packed_counts_[key] += mult;
        } else {
            vector_counts_[counts] += mult;
        }
    }

    CountMap result() const {
        CountMap out;
        const std::uint64_t mask = width_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
        for (const auto& [key, c] : packed_counts_) {
            std::vector<std::uint16_t> v(slots_);
            for (std::size_t s = 0; s < slots_; ++s) v[s] = static_cast<std::uint16_t>((key >> (s * width_)) & mask);
            out[std::move(v)] += c;
        }
        for (const auto& [v, c] : vector_counts_) out[v] += c;
        return out;
    }

private:
    std::size_t slots_;
    unsigned width_;
    bool packed_;
    std::unordered_map<std::uint64_t, std::uint64_t> packed_counts_;
    std::unordered_map<std::vector<std::uint16_t>, std::uint64_t, VectorHash> vector_counts_;
};

}  // namespace jacobi::detail
