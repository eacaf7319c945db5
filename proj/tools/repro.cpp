#include "repro.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>

namespace jfenum {

using jacobi::Rational;

const std::vector<PaperRow>& paper_rows() {
    static const std::vector<PaperRow> rows = [] {
        struct Label {
            const char* label;
            const char* fixture;
        };
        const Label e8{"e8", "e8"}, e8sq{"e8^2", "e8x2"}, d16{"d16+", "d16plus"}, g24{"g24", "g24"},
            d24{"d24+", "d12x2plus"};
        auto row = [](Label c, Label d, unsigned wt, const char* printed) {
            return PaperRow{c.label, d.label, c.fixture, d.fixture, wt, printed};
        };
        return std::vector<PaperRow>{
            row(e8, e8, 1, "4.8"),
            row(e8, e8, 2, "6.4"),
            row(e8, e8, 3, "9.6"),
            row(e8sq, e8sq, 1, "5.90769230769"),
            row(d16, d16, 1, "5.90769230769"),
            row(d16, e8sq, 1, "5.90769230769"),
            row(d16, d16, 2, "7.87692307692"),
            row(e8sq, e8sq, 2, "7.87692307692"),
            row(d16, e8sq, 2, "7.87692307692"),
            row(d16, d16, 3, "11.8153846154"),
            row(e8sq, e8sq, 3, "11.8153846154"),
            row(d16, e8sq, 3, "11.8153846154"),
            row(g24, g24, 1, "6.02048106692"),
            row(d24, d24, 1, "6.08859978358"),
            row(g24, d24, 1, "5.94427244582"),
            row(d24, d24, 2, "8.11813304477"),
            row(g24, g24, 2, "8.02730808923"),
            row(g24, d24, 2, "7.92569659443"),
            row(d24, d24, 3, "12.1771995672"),
            row(g24, g24, 3, "12.0409962134"),
            row(g24, d24, 3, "11.8885448916"),
            row(g24, g24, 4, "20.0581090736"),
            row(g24, g24, 5, "36.0720806541"),
        };
    }();
    return rows;
}

const PaperRow* find_paper_row(std::string_view c_name, std::string_view d_name, unsigned weight) {
    for (const auto& r : paper_rows())
        if (r.c_fixture == c_name && r.d_fixture == d_name && r.weight == weight) return &r;
    return nullptr;
}

bool printed_match(const Rational& value, std::string_view printed) {
    const auto dot = printed.find('.');
    const std::size_t digits = dot == std::string_view::npos ? 0 : printed.size() - dot - 1;
    jacobi::BigInt ulp_den = 1;
    for (std::size_t i = 0; i < digits; ++i) ulp_den *= 10;
    return abs(value - jacobi::parse_decimal(printed)) <= Rational(jacobi::BigInt(1), ulp_den);
}

jacobi::Word weight_mask(std::size_t n, unsigned weight) {
    jacobi::Word w(n, 0);
    std::fill_n(w.begin(), std::min<std::size_t>(weight, n), jacobi::Symbol{1});
    return w;
}

std::vector<jacobi::Word> random_masks(std::size_t n, unsigned weight, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto bounded = [&](std::uint64_t bound) {
        const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = top - top % bound;
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return x % bound;
    };
    std::vector<jacobi::Word> out;
    for (std::size_t c = 0; c < count; ++c) {
        jacobi::Word w = weight_mask(n, weight);
        for (std::size_t i = n; i > 1; --i) std::swap(w[i - 1], w[bounded(i)]);
        out.push_back(std::move(w));
    }
    return out;
}

FixtureSet::FixtureSet(std::string dir) : dir_(std::move(dir)) {}

const jacobi::LinearCode& FixtureSet::get(const std::string& name) {
    auto it = codes_.find(name);
    if (it == codes_.end()) it = codes_.emplace(name, jacobi::load_code(dir_ + "/" + name + ".json")).first;
    return it->second;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("JF_FIXTURE_DIR"); env && *env) return env;
    return JF_FIXTURE_DIR;
}

}  // namespace jfenum
