#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jacobi/cyclotomic.hpp"

namespace jacobi {

// Canonical encoding of a ring element. For F_q the element
// a_0 + a_1 L + ... + a_{f-1} L^{f-1} (L a root of the modulus) encodes as
// sum a_i p^i; for Z_k it is the residue. Element omega_i is symbol i.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

enum class RingKind { Field, ModRing };

// The alphabet: F_{p^f} with a chosen irreducible modulus, or Z_k. Holds
// precomputed operation tables; copies share them.
class RingSpec {
public:
    static constexpr unsigned kMaxOrder = 256;

    // `modulus` lists ascending coefficients of a monic degree-f polynomial
    // over F_p; empty selects the shipped default.
    static RingSpec field(unsigned p, unsigned f = 1, std::vector<unsigned> modulus = {});
    static RingSpec modring(unsigned k);

    // Shipped default modulus for F_{p^f}, ascending coefficients.
    static std::vector<unsigned> default_modulus(unsigned p, unsigned f);

    RingKind kind() const noexcept { return t_->kind; }
    bool is_field() const noexcept { return t_->kind == RingKind::Field; }
    unsigned p() const noexcept { return t_->p; }
    unsigned f() const noexcept { return t_->f; }
    unsigned k() const noexcept { return t_->k; }
    const std::vector<unsigned>& modulus() const noexcept { return t_->modulus; }

    // |R|.
    unsigned order() const noexcept { return t_->order; }
    // Order of the root of unity the character takes values in: p or k.
    unsigned root_order() const noexcept { return t_->root_order; }

    Symbol add(Symbol a, Symbol b) const noexcept { return t_->add[idx(a, b)]; }
    Symbol sub(Symbol a, Symbol b) const noexcept { return add(a, neg(b)); }
    Symbol mul(Symbol a, Symbol b) const noexcept { return t_->mul[idx(a, b)]; }
    Symbol neg(Symbol a) const noexcept { return t_->neg[a]; }
    // Multiplicative inverse; throws for zero and for non-units of Z_k.
    Symbol inv(Symbol a) const;
    bool is_unit(Symbol a) const noexcept { return t_->inv[a] != 0; }

    bool valid(Symbol a) const noexcept { return a < t_->order; }
    bool valid(unsigned a) const noexcept { return a < t_->order; }

    // Coordinates (a_0, ..., a_{f-1}) for fields, (a) for Z_k.
    std::vector<unsigned> decode(Symbol a) const;
    Symbol encode(std::span<const unsigned> coords) const;

    // The fixed additive character chi(a) = zeta_m^{chi_exponent(a)}.
    unsigned chi_exponent(Symbol a) const noexcept { return t_->chi[a]; }
    Cyclotomic chi(Symbol a) const { return Cyclotomic::zeta_power(root_order(), chi_exponent(a)); }

    // "F_4", "Z_4".
    std::string name() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept;

private:
    struct Tables {
        RingKind kind;
        unsigned p = 0, f = 0, k = 0, order = 0, root_order = 0;
        std::vector<unsigned> modulus;
        std::vector<Symbol> add, mul, neg, inv, chi;
    };

    explicit RingSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::size_t idx(Symbol a, Symbol b) const noexcept { return std::size_t{a} * t_->order + b; }

    std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned p) noexcept;

// Monic polynomial over F_p (ascending coefficients) has no factor of
// degree 1..deg/2. Trial division by every monic candidate.
bool is_irreducible_mod_p(std::span<const unsigned> poly, unsigned p);

// u . v = sum u_i v_i in the ring.
Symbol inner_product(const RingSpec& ring, std::span<const Symbol> u, std::span<const Symbol> v);

}  // namespace jacobi
