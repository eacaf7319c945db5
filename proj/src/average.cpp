#include "jacobi/average.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "detail/counter.hpp"
#include "detail/tables.hpp"
#include "jacobi/error.hpp"

namespace jacobi {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

BigInt to_big(std::uint64_t x) {
    BigInt r(static_cast<unsigned long>(x >> 32));
    r <<= 32;
    r += static_cast<unsigned long>(x & 0xffffffffu);
    return r;
}

unsigned length_of(const DistributionTable<1>& a) {
    if (a.entries.empty()) fail(ErrorKind::InvalidArgument, "empty composition table");
    return a.entries.begin()->first.total();
}

// l(w) as the w-marginal of any Jacobi composition in the table.
std::vector<std::uint16_t> w_marginal(unsigned q, const DistributionTable<2>& b) {
    if (b.entries.empty()) fail(ErrorKind::InvalidArgument, "empty Jacobi composition table");
    const auto& r = b.entries.begin()->first.counts;
    std::vector<std::uint16_t> lw(q, 0);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned c = 0; c < q; ++c) lw[c] = static_cast<std::uint16_t>(lw[c] + r[a * q + c]);
    return lw;
}

// prod_j cols[j]! / prod_cells cell!
BigInt column_multinomials(std::span<const std::uint16_t> cols, std::span<const std::uint16_t> cells) {
    BigInt num = 1;
    for (auto c : cols) num *= factorial(c);
    BigInt den = 1;
    for (auto c : cells)
        if (c > 1) den *= factorial(c);
    return num / den;
}

void require_brute_length(std::size_t n) {
    if (n > kBruteForceMaxLength)
        fail(ErrorKind::Budget, "brute-force S_n average needs n <= " + std::to_string(kBruteForceMaxLength) +
                                     ", got n = " + std::to_string(n));
}

// Packs a word of length <= 8 over an alphabet of size <= 256.
std::uint64_t pack(std::span<const Symbol> w) {
    std::uint64_t k = 0;
    for (auto s : w) k = (k << 8) | s;
    return k;
}

}  // namespace

Word mask_word(std::span<const Symbol> u, std::span<const Symbol> w) {
    if (u.size() != w.size()) fail(ErrorKind::Mismatch, "mask of a word by a mask of different length");
    Word out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = w[i] == 0 ? u[i] : Symbol{0};
    return out;
}

// ---- brute-force S_n averages ----

RationalPolynomial brute_average_jacobi(const LinearCode& c, std::span<const Symbol> w, const Budget& budget) {
    require_word(c, w, "w");
    const std::size_t n = c.length();
    require_brute_length(n);
    const auto words = c.enumerate(budget);
    const unsigned q = c.ring().order();
    detail::CompositionCounter counter(std::size_t{q} * q, static_cast<unsigned>(n));
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<std::uint16_t> counts(std::size_t{q} * q);
    do {
        for (std::size_t k = 0; k < words.size(); ++k) {
            const auto u = words[k];
            std::ranges::fill(counts, 0);
            for (std::size_t i = 0; i < n; ++i) ++counts[std::size_t{u[sigma[i]]} * q + w[i]];
            counter.add(counts);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    RationalPolynomial p(c.ring(), 2);
    for (const auto& [m, count] : counter.result()) p.add_term(m, ratio(to_big(count), factorial(n)));
    return p;
}

RationalPolynomial brute_average_joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                              const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    const std::size_t n = c.length();
    require_brute_length(n);
    const auto cw = c.enumerate(budget);
    const auto dw = d.enumerate(budget);
    budget.require(saturating_mul(cw.size(), dw.size()), "codeword pair enumeration");
    const std::size_t q = c.ring().order();
    detail::CompositionCounter counter(q * q * q, static_cast<unsigned>(n));
    std::vector<std::uint16_t> counts(q * q * q);
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
        for (std::size_t a = 0; a < cw.size(); ++a) {
            const auto u = cw[a];
            for (std::size_t b = 0; b < dw.size(); ++b) {
                const auto v = dw[b];
                std::ranges::fill(counts, 0);
                for (std::size_t i = 0; i < n; ++i) ++counts[(u[sigma[i]] * q + v[i]) * q + w[i]];
                counter.add(counts);
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    RationalPolynomial p(c.ring(), 3);
    for (const auto& [m, count] : counter.result()) p.add_term(m, ratio(to_big(count), factorial(n)));
    return p;
}

Rational brute_average_intersection(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                    const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    const std::size_t n = c.length();
    require_brute_length(n);
    const auto cw = c.enumerate(budget);
    const auto dw = d.enumerate(budget);
    std::unordered_map<std::uint64_t, std::uint64_t> masked_d;
    for (std::size_t b = 0; b < dw.size(); ++b) ++masked_d[pack(mask_word(dw[b], w))];
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Word u_sigma(n);
    BigInt total = 0;
    do {
        std::uint64_t count = 0;
        for (std::size_t a = 0; a < cw.size(); ++a) {
            const auto u = cw[a];
            for (std::size_t i = 0; i < n; ++i) u_sigma[i] = w[i] == 0 ? u[sigma[i]] : Symbol{0};
            if (auto it = masked_d.find(pack(u_sigma)); it != masked_d.end()) count += it->second;
        }
        total += to_big(count);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return ratio(total, factorial(n));
}

// ---- closed forms ----

RationalPolynomial avg_jacobi(const RingSpec& ring, const DistributionTable<1>& a_table,
                              std::span<const std::uint16_t> w_composition) {
    const unsigned q = ring.order();
    const unsigned n = length_of(a_table);
    if (w_composition.size() != q) fail(ErrorKind::Mismatch, "l(w) must have one entry per ring element");
    RationalPolynomial p(ring, 2);
    const std::vector<bool> all;
    for (const auto& [l, count] : a_table.entries) {
        const BigInt scale = to_big(count);
        const BigInt den = multinomial(n, l.counts);
        detail::for_each_table(l.counts, w_composition, all, [&](std::span<const std::uint16_t> r) {
            p.add_term(std::vector<std::uint16_t>(r.begin(), r.end()),
                       ratio(scale * column_multinomials(w_composition, r), den));
        });
    }
    return p;
}

RationalPolynomial avg_jacobi(const LinearCode& c, std::span<const Symbol> w, const Budget& budget) {
    require_word(c, w, "w");
    return avg_jacobi(c.ring(), composition_table(c, budget), composition(c.ring(), w).counts);
}

RationalPolynomial avg_joint_jacobi(const RingSpec& ring, const DistributionTable<1>& a_table,
                                    const DistributionTable<2>& b_table, std::uint64_t max_terms) {
    const unsigned n = length_of(a_table);
    RationalPolynomial p(ring, 3);
    const std::vector<bool> all;
    std::uint64_t visited = 0;
    for (const auto& [l, a_count] : a_table.entries) {
        const BigInt den = multinomial(n, l.counts);
        for (const auto& [r, b_count] : b_table.entries) {
            if (r.total() != n) fail(ErrorKind::Mismatch, "composition tables of different lengths");
            const BigInt scale = to_big(a_count) * to_big(b_count);
            detail::for_each_table(l.counts, r.counts, all, [&](std::span<const std::uint16_t> h) {
                if (++visited > max_terms)
                    fail(ErrorKind::Budget, "average joint Jacobi expansion exceeds " + std::to_string(max_terms) +
                                                " terms; evaluate instead of expanding");
                p.add_term(std::vector<std::uint16_t>(h.begin(), h.end()),
                           ratio(scale * column_multinomials(r.counts, h), den));
            });
        }
    }
    return p;
}

RationalPolynomial avg_joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                    const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    return avg_joint_jacobi(c.ring(), composition_table(c, budget), jacobi_table(d, w, budget), budget.limit);
}

Rational evaluate_avg_joint_jacobi(const RingSpec& ring, const DistributionTable<1>& a_table,
                                   const DistributionTable<2>& b_table, const EvaluationPoint<Rational>& point) {
    const unsigned q = ring.order();
    const unsigned n = length_of(a_table);
    const std::size_t slots = var_count(q, 3);
    if (point.size() != slots) fail(ErrorKind::Mismatch, "evaluation point must cover R^3");
    std::vector<bool> allowed(slots);
    bool zero_one = true;
    for (std::size_t s = 0; s < slots; ++s) {
        if (!point[s]) fail(ErrorKind::InvalidArgument, "evaluation point missing a variable");
        allowed[s] = !point[s]->is_zero();
        zero_one = zero_one && (point[s]->is_zero() || point[s]->is_one());
    }
    Rational total;
    for (const auto& [l, a_count] : a_table.entries) {
        const BigInt den = multinomial(n, l.counts);
        for (const auto& [r, b_count] : b_table.entries) {
            if (r.total() != n) fail(ErrorKind::Mismatch, "composition tables of different lengths");
            BigInt integral = 0;
            Rational weighted;
            detail::for_each_table(l.counts, r.counts, allowed, [&](std::span<const std::uint16_t> h) {
                BigInt w = column_multinomials(r.counts, h);
                if (zero_one) {
                    integral += w;
                    return;
                }
                Rational t(w);
                for (std::size_t s = 0; s < slots; ++s)
                    for (unsigned e = 0; e < h[s]; ++e) t *= *point[s];
                weighted += t;
            });
            weighted += Rational(integral);
            if (!weighted.is_zero()) total += weighted * ratio(to_big(a_count) * to_big(b_count), den);
        }
    }
    return total;
}

Rational evaluate_avg_joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                   const EvaluationPoint<Rational>& point, const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    return evaluate_avg_joint_jacobi(c.ring(), composition_table(c, budget), jacobi_table(d, w, budget), point);
}

EvaluationPoint<Rational> intersection_point(const RingSpec& ring) {
    const unsigned q = ring.order();
    EvaluationPoint<Rational> point;
    for (std::size_t s = 0; s < var_count(q, 3); ++s) {
        const auto a = var_tuple(q, 3, s);
        point.emplace_back(Rational((a[0] != a[1] && a[2] == 0) ? 0 : 1));
    }
    return point;
}

std::uint64_t jacobi_intersection_size(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                       const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    const auto cw = c.enumerate(budget);
    const auto dw = d.enumerate(budget);
    std::unordered_map<std::string, std::uint64_t> masked_d;
    for (std::size_t b = 0; b < dw.size(); ++b) {
        const Word m = mask_word(dw[b], w);
        ++masked_d[std::string(m.begin(), m.end())];
    }
    std::uint64_t count = 0;
    for (std::size_t a = 0; a < cw.size(); ++a) {
        const Word m = mask_word(cw[a], w);
        if (auto it = masked_d.find(std::string(m.begin(), m.end())); it != masked_d.end()) count += it->second;
    }
    return count;
}

Rational avg_jacobi_intersection(const RingSpec& ring, const DistributionTable<1>& a_table,
                                 const DistributionTable<2>& b_table) {
    const unsigned q = ring.order();
    const unsigned n = length_of(a_table);
    const auto lw = w_marginal(q, b_table);
    // Columns b != 0 of R'; the b = 0 column is pinned to R''.
    const std::vector<std::uint16_t> cols(lw.begin() + 1, lw.end());
    const std::vector<bool> all;
    std::vector<std::uint16_t> residual(q);
    Rational total;
    for (const auto& [r2, b_count] : b_table.entries) {
        if (r2.total() != n) fail(ErrorKind::Mismatch, "composition tables of different lengths");
        for (const auto& [l, a_count] : a_table.entries) {
            bool feasible = true;
            for (unsigned a = 0; a < q && feasible; ++a) {
                const int rest = int{l.counts[a]} - int{r2.counts[a * q]};
                feasible = rest >= 0;
                residual[a] = static_cast<std::uint16_t>(std::max(rest, 0));
            }
            if (!feasible) continue;
            BigInt arrangements = 0;
            detail::for_each_table(residual, cols, all, [&](std::span<const std::uint16_t> r1) {
                arrangements += column_multinomials(cols, r1);
            });
            if (arrangements != 0)
                total += ratio(arrangements * to_big(a_count) * to_big(b_count), multinomial(n, l.counts));
        }
    }
    return total;
}

Rational avg_jacobi_intersection(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                 const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    return avg_jacobi_intersection(c.ring(), composition_table(c, budget), jacobi_table(d, w, budget));
}

// ---- Monte Carlo ----

double MonteCarloStats::standard_error() const {
    return samples == 0 ? 0.0 : stddev / std::sqrt(static_cast<double>(samples));
}

namespace {

// Uniform draw from [0, bound) by rejection on the raw 64-bit stream.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

void shuffle(std::vector<std::size_t>& sigma, std::mt19937_64& rng) {
    for (std::size_t i = sigma.size(); i > 1; --i) std::swap(sigma[i - 1], sigma[bounded(rng, i)]);
}

unsigned gf2_rank(std::vector<std::uint64_t> rows) {
    unsigned rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::uint64_t pivot = rows[i];
        if (pivot == 0) continue;
        ++rank;
        const std::uint64_t low = pivot & (~pivot + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & low) rows[j] ^= pivot;
    }
    return rank;
}

}  // namespace

AverageResult monte_carlo_delta(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                std::uint64_t samples, std::uint64_t seed, const Budget& budget) {
    require_compatible(c, d);
    require_word(c, w, "w");
    if (samples == 0) fail(ErrorKind::InvalidArgument, "Monte Carlo needs at least one sample");
    const RingSpec& ring = c.ring();
    const std::size_t n = c.length();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});

    // |C^sigma cap_w D| = |C||D| / |pi(C^sigma) + pi(D)|, pi dropping the
    // coordinates where w is nonzero; for fields the sum is a subspace whose
    // size is q^rank.
    std::function<BigInt()> sample_count;
    std::vector<Word> c_basis, d_basis;
    std::vector<std::uint64_t> d_bits;
    std::unordered_map<std::string, std::uint64_t> masked_d;
    std::optional<CodewordList> c_words;
    if (ring.is_field()) {
        c_basis = field_basis(ring, c.generators());
        d_basis = field_basis(ring, d.generators());
        const std::size_t dims = c_basis.size() + d_basis.size();
        const BigInt q = ring.order();
        if (ring.order() == 2 && n <= 64) {
            for (const auto& row : d_basis) {
                std::uint64_t bits = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (w[i] == 0 && row[i]) bits |= std::uint64_t{1} << i;
                d_bits.push_back(bits);
            }
            sample_count = [&, dims]() {
                std::vector<std::uint64_t> rows = d_bits;
                for (const auto& row : c_basis) {
                    std::uint64_t bits = 0;
                    for (std::size_t i = 0; i < n; ++i)
                        if (w[i] == 0 && row[sigma[i]]) bits |= std::uint64_t{1} << i;
                    rows.push_back(bits);
                }
                BigInt r = 1;
                r <<= static_cast<unsigned long>(dims - gf2_rank(std::move(rows)));
                return r;
            };
        } else {
            sample_count = [&, dims, q]() {
                std::vector<Word> rows;
                for (const auto& row : d_basis) rows.push_back(mask_word(row, w));
                for (const auto& row : c_basis) rows.push_back(mask_word(permute_word(row, Permutation(sigma)), w));
                BigInt r;
                mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), dims - field_basis(ring, rows).size());
                return r;
            };
        }
    } else {
        c_words = c.enumerate(budget);
        const auto dw = d.enumerate(budget);
        for (std::size_t b = 0; b < dw.size(); ++b) {
            const Word m = mask_word(dw[b], w);
            ++masked_d[std::string(m.begin(), m.end())];
        }
        sample_count = [&]() {
            std::uint64_t count = 0;
            std::string key(n, '\0');
            for (std::size_t a = 0; a < c_words->size(); ++a) {
                const auto u = (*c_words)[a];
                for (std::size_t i = 0; i < n; ++i) key[i] = static_cast<char>(w[i] == 0 ? u[sigma[i]] : 0);
                if (auto it = masked_d.find(key); it != masked_d.end()) count += it->second;
            }
            return to_big(count);
        };
    }

    BigInt sum = 0;
    double mean = 0, m2 = 0;  // Welford
    for (std::uint64_t s = 0; s < samples; ++s) {
        shuffle(sigma, rng);
        const BigInt x = sample_count();
        sum += x;
        const double xd = x.get_d();
        const double delta = xd - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (xd - mean);
    }
    AverageResult out;
    out.value = ratio(sum, to_big(samples));
    out.provenance = Provenance::MonteCarlo;
    MonteCarloStats stats;
    stats.samples = samples;
    stats.seed = seed;
    stats.mean = out.value.to_double();
    stats.stddev = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1)) : 0.0;
    out.monte_carlo = stats;
    return out;
}

}  // namespace jacobi
