#pragma once

#include <random>
#include <string>
#include <vector>

#include "jacobi/codes.hpp"

namespace testing {

inline jacobi::LinearCode fixture(const std::string& name) {
    return jacobi::load_code(std::string(JF_FIXTURE_DIR) + "/" + name + ".json");
}

// Every vector of R^n, first coordinate varying slowest.
inline std::vector<jacobi::Word> all_words(unsigned q, std::size_t n) {
    std::vector<jacobi::Word> out;
    jacobi::Word w(n, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = n;
        while (i > 0 && ++w[i - 1] == q) w[--i] = 0;
        if (i == 0) return out;
    }
}

inline jacobi::Word random_word(unsigned q, std::size_t n, std::mt19937_64& rng) {
    jacobi::Word w(n);
    for (auto& s : w) s = static_cast<jacobi::Symbol>(rng() % q);
    return w;
}

inline jacobi::LinearCode random_code(const jacobi::RingSpec& ring, std::size_t n, std::size_t rows,
                                      std::mt19937_64& rng) {
    std::vector<jacobi::Word> gens;
    for (std::size_t i = 0; i < rows; ++i) gens.push_back(random_word(ring.order(), n, rng));
    return jacobi::LinearCode(ring, n, std::move(gens));
}

}  // namespace testing
