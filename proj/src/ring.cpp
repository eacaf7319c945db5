#include "jacobi/ring.hpp"

#include <map>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

// Remainder of a modulo monic b over F_p, ascending coefficients.
std::vector<unsigned> poly_mod(std::vector<unsigned> a, std::span<const unsigned> b, unsigned p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        const unsigned c = a[i] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + (p - c) * b[j]) % p;
    }
    a.resize(db);
    return a;
}

std::vector<unsigned> digits(unsigned code, unsigned p, unsigned f) {
    std::vector<unsigned> d(f);
    for (unsigned i = 0; i < f; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

unsigned undigits(std::span<const unsigned> d, unsigned p) {
    unsigned code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
}

}  // namespace

bool is_prime(unsigned p) noexcept {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(std::span<const unsigned> poly, unsigned p) {
    if (poly.size() < 2 || poly.back() % p != 1) return false;
    const unsigned deg = static_cast<unsigned>(poly.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        // monic candidates of degree d: d free lower coefficients
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned code = 0; code < count; ++code) {
            std::vector<unsigned> cand = digits(code, p, d);
            cand.push_back(1);
            auto rem = poly_mod(std::vector<unsigned>(poly.begin(), poly.end()), cand, p);
            bool zero = true;
            for (auto c : rem) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<unsigned> RingSpec::default_modulus(unsigned p, unsigned f) {
    // Ascending coefficients, each primitive over F_p.
    static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
        {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
        {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 1, 1}},     // x^2 + x + 2
        {{3, 3}, {1, 2, 0, 1}},  // x^3 + 2x + 1
        {{5, 2}, {2, 1, 1}},     // x^2 + x + 2
        {{7, 2}, {3, 1, 1}},     // x^2 + x + 3
    };
    if (f == 1) return {0, 1};
    auto it = table.find({p, f});
    if (it == table.end())
        fail(ErrorKind::InvalidArgument,
             "no default modulus for F_" + std::to_string(p) + "^" + std::to_string(f) + "; give primitive_poly");
    return it->second;
}

RingSpec RingSpec::field(unsigned p, unsigned f, std::vector<unsigned> modulus) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
    if (f < 1) fail(ErrorKind::InvalidArgument, "field extension degree must be >= 1");
    unsigned order = 1;
    for (unsigned i = 0; i < f; ++i) {
        order *= p;
        if (order > kMaxOrder) fail(ErrorKind::InvalidArgument, "field order exceeds " + std::to_string(kMaxOrder));
    }
    if (modulus.empty()) modulus = default_modulus(p, f);
    if (modulus.size() != f + 1) fail(ErrorKind::InvalidArgument, "modulus must have degree f");
    for (auto c : modulus)
        if (c >= p) fail(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    if (modulus.back() != 1) fail(ErrorKind::InvalidArgument, "modulus must be monic");
    if (!is_irreducible_mod_p(modulus, p)) fail(ErrorKind::InvalidArgument, "modulus is reducible over F_p");

    auto t = std::make_shared<Tables>();
    t->kind = RingKind::Field;
    t->p = p;
    t->f = f;
    t->order = order;
    t->root_order = p;
    t->modulus = modulus;
    t->add.resize(order * order);
    t->mul.resize(order * order);
    t->neg.resize(order);
    t->inv.assign(order, 0);
    t->chi.resize(order);
    for (unsigned a = 0; a < order; ++a) {
        const auto da = digits(a, p, f);
        std::vector<unsigned> dn(f);
        for (unsigned i = 0; i < f; ++i) dn[i] = (p - da[i]) % p;
        t->neg[a] = static_cast<Symbol>(undigits(dn, p));
        t->chi[a] = static_cast<Symbol>(da[0]);
        for (unsigned b = 0; b < order; ++b) {
            const auto db = digits(b, p, f);
            std::vector<unsigned> s(f), prod(2 * f - 1, 0);
            for (unsigned i = 0; i < f; ++i) s[i] = (da[i] + db[i]) % p;
            for (unsigned i = 0; i < f; ++i)
                for (unsigned j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            t->add[a * order + b] = static_cast<Symbol>(undigits(s, p));
            t->mul[a * order + b] = static_cast<Symbol>(undigits(poly_mod(prod, modulus, p), p));
        }
    }
    for (unsigned a = 1; a < order; ++a)
        for (unsigned b = 1; b < order; ++b)
            if (t->mul[a * order + b] == 1) t->inv[a] = static_cast<Symbol>(b);
    return RingSpec(std::move(t));
}

RingSpec RingSpec::modring(unsigned k) {
    if (k < 2) fail(ErrorKind::InvalidArgument, "Z_k needs k >= 2");
    if (k > kMaxOrder) fail(ErrorKind::InvalidArgument, "Z_k modulus exceeds " + std::to_string(kMaxOrder));
    auto t = std::make_shared<Tables>();
    t->kind = RingKind::ModRing;
    t->k = k;
    t->order = k;
    t->root_order = k;
    t->add.resize(k * k);
    t->mul.resize(k * k);
    t->neg.resize(k);
    t->inv.assign(k, 0);
    t->chi.resize(k);
    for (unsigned a = 0; a < k; ++a) {
        t->neg[a] = static_cast<Symbol>((k - a) % k);
        t->chi[a] = static_cast<Symbol>(a);
        for (unsigned b = 0; b < k; ++b) {
            t->add[a * k + b] = static_cast<Symbol>((a + b) % k);
            t->mul[a * k + b] = static_cast<Symbol>((a * b) % k);
            if ((a * b) % k == 1) t->inv[a] = static_cast<Symbol>(b);
        }
    }
    return RingSpec(std::move(t));
}

Symbol RingSpec::inv(Symbol a) const {
    if (!valid(a) || t_->inv[a] == 0) fail(ErrorKind::InvalidArgument, "element " + std::to_string(a) + " is not a unit");
    return t_->inv[a];
}

std::vector<unsigned> RingSpec::decode(Symbol a) const {
    if (!is_field()) return {a};
    return digits(a, t_->p, t_->f);
}

Symbol RingSpec::encode(std::span<const unsigned> coords) const {
    if (!is_field()) {
        if (coords.size() != 1 || coords[0] >= t_->k) fail(ErrorKind::InvalidArgument, "bad Z_k coordinates");
        return static_cast<Symbol>(coords[0]);
    }
    if (coords.size() != t_->f) fail(ErrorKind::InvalidArgument, "field coordinates must have length f");
    for (auto c : coords)
        if (c >= t_->p) fail(ErrorKind::InvalidArgument, "field coordinate out of range");
    return static_cast<Symbol>(undigits(coords, t_->p));
}

std::string RingSpec::name() const {
    return (is_field() ? "F_" : "Z_") + std::to_string(order());
}

bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
    if (a.t_ == b.t_) return true;
    return a.t_->kind == b.t_->kind && a.t_->p == b.t_->p && a.t_->f == b.t_->f && a.t_->k == b.t_->k &&
           a.t_->modulus == b.t_->modulus;
}

Symbol inner_product(const RingSpec& ring, std::span<const Symbol> u, std::span<const Symbol> v) {
    if (u.size() != v.size()) fail(ErrorKind::Mismatch, "inner product of words of different lengths");
    Symbol s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s = ring.add(s, ring.mul(u[i], v[i]));
    return s;
}

}  // namespace jacobi
