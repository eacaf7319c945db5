#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi/codes.hpp"
#include "jacobi/rational.hpp"

namespace jfenum {

// One printed value: Delta^w(C, D) at wt(w) = weight.
struct PaperRow {
    std::string c_label;
    std::string d_label;
    std::string c_fixture;
    std::string d_fixture;
    unsigned weight = 0;
    std::string printed;
};

// The published examples in print order. The "d24+" rows are realised by the
// d12x2plus fixture: the standard d24+ (A_4 = 66) does not give the printed
// numbers, while d12 + d12 glued (A_4 = 30) reproduces all of them.
const std::vector<PaperRow>& paper_rows();

// Looks up a printed value by fixture names and weight.
const PaperRow* find_paper_row(std::string_view c_name, std::string_view d_name, unsigned weight);

// |value - printed| <= one unit in the last printed digit.
bool printed_match(const jacobi::Rational& value, std::string_view printed);

// (1, ..., 1, 0, ..., 0) with `weight` leading ones.
jacobi::Word weight_mask(std::size_t n, unsigned weight);

// `count` uniformly random binary masks of the given weight (deterministic in seed).
std::vector<jacobi::Word> random_masks(std::size_t n, unsigned weight, std::size_t count, std::uint64_t seed);

// Fixture loader with memoisation, keyed by fixture name.
class FixtureSet {
public:
    explicit FixtureSet(std::string dir);
    const jacobi::LinearCode& get(const std::string& name);
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
    std::map<std::string, jacobi::LinearCode> codes_;
};

std::string default_fixture_dir();

}  // namespace jfenum
