#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace jacobi::detail {

// Visits every R x K matrix of non-negative integers (row-major, passed as
// a span) with the given row and column sums. Cells with allowed[i*K+j]
// false are held at zero. Columns are filled left to right; the last
// column is forced by the remaining row sums.
template <class Visit>
void for_each_table(std::span<const std::uint16_t> rows, std::span<const std::uint16_t> cols,
                    const std::vector<bool>& allowed, Visit&& visit) {
    const std::size_t r = rows.size();
    const std::size_t k = cols.size();
    const unsigned row_total = std::accumulate(rows.begin(), rows.end(), 0u);
    const unsigned col_total = std::accumulate(cols.begin(), cols.end(), 0u);
    if (row_total != col_total) return;
    std::vector<std::uint16_t> cell(r * k, 0);
    if (k == 0) {
        if (row_total == 0) visit(std::span<const std::uint16_t>(cell));
        return;
    }
    std::vector<unsigned> rem_row(rows.begin(), rows.end());
    auto ok = [&](std::size_t i, std::size_t j) { return allowed.empty() || allowed[i * k + j]; };

    auto rec = [&](auto&& self, std::size_t i, std::size_t j, unsigned rem_col) -> void {
        if (j + 1 == k) {
            // Last column takes whatever each row still needs.
            for (std::size_t a = 0; a < r; ++a) {
                if (rem_row[a] != 0 && !ok(a, j)) return;
                if (rem_row[a] > rem_col) return;
                rem_col -= rem_row[a];
            }
            if (rem_col != 0) return;
            for (std::size_t a = 0; a < r; ++a) cell[a * k + j] = static_cast<std::uint16_t>(rem_row[a]);
            visit(std::span<const std::uint16_t>(cell));
            return;
        }
        if (i + 1 == r) {
            if (rem_col > rem_row[i] || (rem_col != 0 && !ok(i, j))) return;
            cell[i * k + j] = static_cast<std::uint16_t>(rem_col);
            rem_row[i] -= rem_col;
            self(self, 0, j + 1, cols[j + 1]);
            rem_row[i] += rem_col;
            return;
        }
        // Rows below i must be able to absorb what this cell leaves.
        unsigned below = 0;
        for (std::size_t a = i + 1; a < r; ++a)
            if (ok(a, j)) below += rem_row[a];
        const unsigned hi = ok(i, j) ? std::min(rem_row[i], rem_col) : 0;
        const unsigned lo = rem_col > below ? rem_col - below : 0;
        for (unsigned x = lo; x <= hi; ++x) {
            cell[i * k + j] = static_cast<std::uint16_t>(x);
            rem_row[i] -= x;
            self(self, i + 1, j, rem_col - x);
            rem_row[i] += x;
        }
        cell[i * k + j] = 0;
    };
    rec(rec, 0, 0, cols[0]);
}

}  // namespace jacobi::detail
