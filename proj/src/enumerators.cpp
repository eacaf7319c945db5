#include "jacobi/enumerators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

#include "detail/counter.hpp"

namespace jacobi {

RationalPolynomial cwe(const LinearCode& c, const Budget& budget) {
    return polynomial_from_table(c.ring(), composition_table(c, budget));
}

RationalPolynomial cwe_genus(const LinearCode& c, unsigned genus, const Budget& budget) {
    if (genus < 1) fail(ErrorKind::InvalidArgument, "genus must be >= 1");
    const auto words = c.enumerate(budget);
    budget.require(saturating_pow(words.size(), genus), "genus-g tuple enumeration");
    const unsigned q = c.ring().order();
    const std::size_t n = c.length();
    const std::size_t slots = var_count(q, genus);
    detail::CompositionCounter counter(slots, static_cast<unsigned>(n));
    // slot[j * n + i]: contribution of the first j words of the tuple at position i
    std::vector<std::size_t> slot((genus + 1) * n, 0);
    std::vector<std::uint16_t> counts(slots);
    auto rec = [&](auto&& self, unsigned j) -> void {
        if (j == genus) {
            std::ranges::fill(counts, 0);
            for (std::size_t i = 0; i < n; ++i) ++counts[slot[genus * n + i]];
            counter.add(counts);
            return;
        }
        for (std::size_t k = 0; k < words.size(); ++k) {
            const auto u = words[k];
            for (std::size_t i = 0; i < n; ++i) slot[(j + 1) * n + i] = slot[j * n + i] * q + u[i];
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    RationalPolynomial p(c.ring(), genus);
    for (const auto& [v, count] : counter.result()) p.add_term(v, Rational(BigInt(static_cast<unsigned long>(count))));
    return p;
}

RationalPolynomial jacobi_polynomial(const LinearCode& c, std::span<const Symbol> w, const Budget& budget) {
    return polynomial_from_table(c.ring(), jacobi_table(c, w, budget));
}

RationalPolynomial joint_cwe(const LinearCode& c, const LinearCode& d, const Budget& budget) {
    const Word zero(c.length(), 0);
    const auto table = joint_jacobi_table(c, d, zero, budget);
    const std::size_t q = c.ring().order();
    RationalPolynomial p(c.ring(), 2);
    for (const auto& [h, count] : table.entries) {
        std::vector<std::uint16_t> m(q * q);
        for (std::size_t a = 0; a < q * q; ++a) m[a] = h.counts[a * q];
        p.add_term(std::move(m), Rational(BigInt(static_cast<unsigned long>(count))));
    }
    return p;
}

RationalPolynomial joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                const Budget& budget) {
    return polynomial_from_table(c.ring(), joint_jacobi_table(c, d, w, budget));
}

namespace {

using CycPoly = CyclotomicPolynomial;

// Linear form sum over `terms` of zeta_m^{exponent} x_index.
CycPoly linear_form(const RingSpec& ring, unsigned arity, const std::vector<std::pair<std::size_t, unsigned>>& terms) {
    CycPoly f(ring, arity);
    for (const auto& [index, e] : terms) {
        CycPoly::Monomial m(f.num_vars(), 0);
        m[index] = 1;
        f.add_term(std::move(m), Cyclotomic::zeta_power(ring.root_order(), e));
    }
    return f;
}



// Exact fast path for the one-slot character substitutions on integer
// polynomials. Coefficients live in Z[zeta_m] as integer vectors of length
// phi(m) (reduction by the monic Phi_m keeps them integral); every operation
// is overflow-checked and any overflow abandons the fast path.
class IntCyclotomic {
public:
    explicit IntCyclotomic(unsigned m) : m_(m), phi_(euler_phi(m)) {
        const IntPoly& f = cyclotomic_poly(m);
        const std::size_t count = std::max<std::size_t>(m, 2 * phi_);
        std::vector<long long> x(phi_, 0);
        x[0] = 1;
        for (std::size_t j = 0; j < count; ++j) {
            residues_.push_back(x);
            // x <- x * zeta, reducing zeta^phi = -sum f_i zeta^i
            const long long top = x[phi_ - 1];
            for (std::size_t i = phi_ - 1; i > 0; --i) x[i] = x[i - 1] - top * f[i];
            x[0] = -top * f[0];
        }
    }

    using Elem = std::vector<long long>;
    struct Overflow {};

    std::size_t phi() const { return phi_; }
    Elem zero() const { return Elem(phi_, 0); }
    Elem zeta(unsigned j) const { return residues_[j % m_]; }
    Elem scalar(long long v) const {
        Elem e = zero();
        e[0] = v;
        return e;
    }

    static long long add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }

    void add_to(Elem& dst, const Elem& x) const {
        for (std::size_t i = 0; i < phi_; ++i) dst[i] = add(dst[i], x[i]);
    }
    // dst += a * b
    void add_product(Elem& dst, const Elem& a, const Elem& b) const {
        for (std::size_t i = 0; i < phi_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < phi_; ++j) {
                if (!b[j]) continue;
                const long long c = mul(a[i], b[j]);
                const Elem& r = residues_[i + j];
                for (std::size_t k = 0; k < phi_; ++k)
                    if (r[k]) dst[k] = add(dst[k], mul(c, r[k]));
            }
        }
    }
    static bool is_zero(const Elem& e) {
        return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
    }

    Cyclotomic to_cyclotomic(const Elem& e) const {
        std::vector<Rational> c;
        for (auto v : e) c.emplace_back(static_cast<long>(v));
        return Cyclotomic::from_coeffs(m_, std::move(c));
    }

private:
    unsigned m_;
    std::size_t phi_;
    std::vector<Elem> residues_;
};

// x_t <- sum_b zeta^{chi(t_slot b)} x_{t with slot = b}, without the 1/|C|
// factor. Variables differing only in `slot` form a group; the rule maps
// each group into itself, so the transform is computed group by group:
// T(p) = sum_e img(e) T(p_e), where p_e collects the terms whose exponents on
// the current group are e. Merging T(p_e) before multiplying lets the
// character sums cancel early. Returns nullopt when the fast path does not
// apply (non-integer input or machine-integer overflow).
std::optional<CycPoly> character_transform(const CycPoly& p, unsigned slot) {
    const RingSpec& ring = p.ring();
    const unsigned q = ring.order(), arity = p.arity(), m = ring.root_order();
    std::size_t stride = 1;
    for (unsigned j = slot + 1; j < arity; ++j) stride *= q;
    const std::size_t nv = p.num_vars();
    std::vector<std::size_t> bases;
    for (std::size_t v = 0; v < nv; ++v)
        if ((v / stride) % q == 0) bases.push_back(v);
    const std::size_t groups = bases.size();

    const IntCyclotomic zr(m);
    using Elem = IntCyclotomic::Elem;
    using Key = std::vector<std::uint16_t>;

    // Terms re-laid out group by group: exps[t][g*q + a] = exponent of base_g + a*stride.
    std::vector<Key> exps;
    std::vector<Elem> coeffs;
    for (const auto& [mono, c] : p.terms()) {
        if (!c.is_rational()) return std::nullopt;
        const Rational r = c.to_rational();
        if (!r.is_integer() || !r.numerator().fits_slong_p()) return std::nullopt;
        Key k(groups * q);
        for (std::size_t g = 0; g < groups; ++g)
            for (unsigned a = 0; a < q; ++a) k[g * q + a] = mono[bases[g] + a * stride];
        exps.push_back(std::move(k));
        coeffs.push_back(zr.scalar(r.numerator().get_si()));
    }

    std::vector<std::vector<unsigned>> kexp(q, std::vector<unsigned>(q));
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            kexp[a][b] = ring.chi_exponent(ring.mul(static_cast<Symbol>(a), static_cast<Symbol>(b)));

    using Image = std::vector<std::pair<Key, Elem>>;
    std::map<Key, Image> images;
    auto group_image = [&](const Key& e) -> const Image& {
        if (auto it = images.find(e); it != images.end()) return it->second;
        std::map<Key, Elem> cur;
        cur.emplace(Key(q, 0), zr.scalar(1));
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned rep = 0; rep < e[a]; ++rep) {
                std::map<Key, Elem> next;
                for (const auto& [y, c] : cur) {
                    for (unsigned b = 0; b < q; ++b) {
                        Key y2 = y;
                        ++y2[b];
                        auto it = next.try_emplace(std::move(y2), zr.zero()).first;
                        zr.add_product(it->second, c, zr.zeta(kexp[a][b]));
                    }
                }
                cur = std::move(next);
            }
        }
        Image img;
        for (auto& [y, c] : cur)
            if (!IntCyclotomic::is_zero(c)) img.emplace_back(y, std::move(c));
        return images.emplace(e, std::move(img)).first->second;
    };

    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (auto x : k) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };
    using KeyMap = std::unordered_map<Key, Elem, KeyHash>;

    // rec returns T restricted to groups >= level, keyed by their q-blocks.
    auto rec = [&](auto&& self, std::size_t level, const std::vector<std::size_t>& idx) -> KeyMap {
        KeyMap out;
        if (level == groups) {
            Elem sum = zr.zero();
            for (auto t : idx) zr.add_to(sum, coeffs[t]);
            if (!IntCyclotomic::is_zero(sum)) out.emplace(Key{}, std::move(sum));
            return out;
        }
        std::map<Key, std::vector<std::size_t>> parts;
        for (auto t : idx) {
            const auto first = exps[t].begin() + static_cast<std::ptrdiff_t>(level * q);
            parts[Key(first, first + q)].push_back(t);
        }
        for (const auto& [e, sub] : parts) {
            const auto rest = self(self, level + 1, sub);
            if (rest.empty()) continue;
            for (const auto& [y, gc] : group_image(e)) {
                for (const auto& [k, c] : rest) {
                    Key key = y;
                    key.insert(key.end(), k.begin(), k.end());
                    auto it = out.try_emplace(std::move(key), zr.zero()).first;
                    zr.add_product(it->second, gc, c);
                }
            }
        }
        std::erase_if(out, [](const auto& kv) { return IntCyclotomic::is_zero(kv.second); });
        return out;
    };

    std::vector<std::size_t> all(exps.size());
    for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
    KeyMap result;
    try {
        result = rec(rec, 0, all);
    } catch (const IntCyclotomic::Overflow&) {
        return std::nullopt;
    }

    CycPoly out(ring, arity);
    for (const auto& [key, c] : result) {
        CycPoly::Monomial mono(nv, 0);
        for (std::size_t g = 0; g < groups; ++g)
            for (unsigned b = 0; b < q; ++b) mono[bases[g] + b * stride] = key[g * q + b];
        out.add_term(std::move(mono), zr.to_cyclotomic(c));
    }
    return out;
}

// Applies the one-slot transforms in `slots` in turn, then divides by size.
RationalPolynomial fast_or_generic(const RationalPolynomial& p, std::initializer_list<unsigned> slots,
                                   const std::vector<SubstitutionRule<Cyclotomic>>& rules, std::uint64_t size) {
    const unsigned m = p.ring().root_order();
    CycPoly image = to_cyclotomic(p, m);
    auto rule = rules.begin();
    for (unsigned slot : slots) {
        if (auto fast = character_transform(image, slot))
            image = std::move(*fast);
        else
            image = substitute(image, *rule, p.arity());
        ++rule;
    }
    image.scale(Cyclotomic(Rational(BigInt(1), BigInt(static_cast<unsigned long>(size))), m));
    return to_rational(image);
}

void check_shape(const RationalPolynomial& p, unsigned arity, std::uint64_t size, const char* what) {
    if (p.arity() != arity)
        fail(ErrorKind::Mismatch, std::string(what) + " expects an arity-" + std::to_string(arity) + " polynomial");
    if (size == 0) fail(ErrorKind::InvalidArgument, "code size must be positive");
}

}  // namespace

SubstitutionRule<Cyclotomic> macwilliams_rule_second(const RingSpec& ring) {
    const unsigned q = ring.order();
    SubstitutionRule<Cyclotomic> rule;
    for (std::size_t v = 0; v < var_count(q, 3); ++v) {
        const auto a = var_tuple(q, 3, v);
        std::vector<std::pair<std::size_t, unsigned>> terms;
        for (unsigned b = 0; b < q; ++b) {
            const Symbol t[] = {a[0], static_cast<Symbol>(b), a[2]};
            terms.emplace_back(var_index(q, t), ring.chi_exponent(ring.mul(a[1], static_cast<Symbol>(b))));
        }
        rule.push_back(linear_form(ring, 3, terms));
    }
    return rule;
}

SubstitutionRule<Cyclotomic> macwilliams_rule_first(const RingSpec& ring) {
    const unsigned q = ring.order();
    SubstitutionRule<Cyclotomic> rule;
    for (std::size_t v = 0; v < var_count(q, 3); ++v) {
        const auto a = var_tuple(q, 3, v);
        std::vector<std::pair<std::size_t, unsigned>> terms;
        for (unsigned b = 0; b < q; ++b) {
            const Symbol t[] = {static_cast<Symbol>(b), a[1], a[2]};
            terms.emplace_back(var_index(q, t), ring.chi_exponent(ring.mul(a[0], static_cast<Symbol>(b))));
        }
        rule.push_back(linear_form(ring, 3, terms));
    }
    return rule;
}

SubstitutionRule<Cyclotomic> macwilliams_rule_both(const RingSpec& ring) {
    const unsigned q = ring.order();
    SubstitutionRule<Cyclotomic> rule;
    for (std::size_t v = 0; v < var_count(q, 3); ++v) {
        const auto a = var_tuple(q, 3, v);
        std::vector<std::pair<std::size_t, unsigned>> terms;
        for (unsigned b1 = 0; b1 < q; ++b1) {
            for (unsigned b2 = 0; b2 < q; ++b2) {
                const Symbol t[] = {static_cast<Symbol>(b1), static_cast<Symbol>(b2), a[2]};
                const Symbol dot =
                    ring.add(ring.mul(a[0], static_cast<Symbol>(b1)), ring.mul(a[1], static_cast<Symbol>(b2)));
                terms.emplace_back(var_index(q, t), ring.chi_exponent(dot));
            }
        }
        rule.push_back(linear_form(ring, 3, terms));
    }
    return rule;
}

SubstitutionRule<Cyclotomic> macwilliams_rule_single(const RingSpec& ring) {
    const unsigned q = ring.order();
    SubstitutionRule<Cyclotomic> rule;
    for (std::size_t v = 0; v < var_count(q, 2); ++v) {
        const auto a = var_tuple(q, 2, v);
        std::vector<std::pair<std::size_t, unsigned>> terms;
        for (unsigned b = 0; b < q; ++b) {
            const Symbol t[] = {static_cast<Symbol>(b), a[1]};
            terms.emplace_back(var_index(q, t), ring.chi_exponent(ring.mul(a[0], static_cast<Symbol>(b))));
        }
        rule.push_back(linear_form(ring, 2, terms));
    }
    return rule;
}

RationalPolynomial macwilliams_second(const RationalPolynomial& p, std::uint64_t d_size) {
    check_shape(p, 3, d_size, "macwilliams_second");
    return fast_or_generic(p, {1}, {macwilliams_rule_second(p.ring())}, d_size);
}

RationalPolynomial macwilliams_first(const RationalPolynomial& p, std::uint64_t c_size) {
    check_shape(p, 3, c_size, "macwilliams_first");
    return fast_or_generic(p, {0}, {macwilliams_rule_first(p.ring())}, c_size);
}

// chi(a1 b1 + a2 b2) = chi(a1 b1) chi(a2 b2): the two-slot rule is the
// second-slot rule followed by the first-slot rule.
RationalPolynomial macwilliams_both(const RationalPolynomial& p, std::uint64_t cd_size) {
    check_shape(p, 3, cd_size, "macwilliams_both");
    return fast_or_generic(p, {1, 0}, {macwilliams_rule_second(p.ring()), macwilliams_rule_first(p.ring())}, cd_size);
}

RationalPolynomial macwilliams_single(const RationalPolynomial& p, std::uint64_t c_size) {
    check_shape(p, 2, c_size, "macwilliams_single");
    return fast_or_generic(p, {0}, {macwilliams_rule_single(p.ring())}, c_size);
}

}  // namespace jacobi
