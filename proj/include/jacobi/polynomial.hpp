#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jacobi/cyclotomic.hpp"
#include "jacobi/error.hpp"
#include "jacobi/rational.hpp"
#include "jacobi/ring.hpp"

namespace jacobi {

template <class C>
concept ExactCoefficient = requires(C a, const C& b) {
    { a.is_zero() } -> std::convertible_to<bool>;
    { a += b };
    { a *= b };
    { a == b } -> std::convertible_to<bool>;
    C(0L);
    C(1L);
};

// Variables are indexed by tuples in R^arity; the tuple (a_1, ..., a_r)
// maps to the dense index sum a_j q^(r-j).
std::size_t var_index(unsigned q, std::span<const Symbol> tuple);
std::vector<Symbol> var_tuple(unsigned q, unsigned arity, std::size_t index);
std::size_t var_count(unsigned q, unsigned arity);

// Sparse multivariate polynomial over R^arity-indexed variables with exact
// coefficients. Terms are kept in descending lexicographic order of the
// dense exponent vector, so x_(0...0)^n leads. Zero coefficients are never
// stored.
template <ExactCoefficient Coeff>
class Polynomial {
public:
    using Monomial = std::vector<std::uint16_t>;
    using Terms = std::map<Monomial, Coeff, std::greater<Monomial>>;

    Polynomial(RingSpec ring, unsigned arity)
        : ring_(std::move(ring)), arity_(arity), nvars_(var_count(ring_.order(), arity)) {}

    static Polynomial constant(RingSpec ring, unsigned arity, const Coeff& c) {
        Polynomial p(std::move(ring), arity);
        p.add_term(Monomial(p.nvars_, 0), c);
        return p;
    }

    static Polynomial variable(RingSpec ring, unsigned arity, std::size_t var) {
        Polynomial p(std::move(ring), arity);
        Monomial m(p.nvars_, 0);
        m.at(var) = 1;
        p.add_term(std::move(m), Coeff(1L));
        return p;
    }

    const RingSpec& ring() const noexcept { return ring_; }
    unsigned arity() const noexcept { return arity_; }
    std::size_t num_vars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(Monomial m, const Coeff& c) {
        if (m.size() != nvars_) fail(ErrorKind::Mismatch, "monomial length does not match variable count");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Coeff coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0L) : it->second;
    }

    // Total degree when homogeneous; nullopt for the zero polynomial or a
    // mixed-degree one.
    std::optional<unsigned> homogeneous_degree() const {
        std::optional<unsigned> deg;
        for (const auto& [m, c] : terms_) {
            unsigned d = 0;
            for (auto e : m) d += e;
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) {
            Coeff neg(0L);
            neg += c;
            neg *= Coeff(-1L);
            add_term(m, neg);
        }
        return *this;
    }

    Polynomial& scale(const Coeff& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same(b);
        Polynomial out(a.ring_, a.arity_);
        Monomial m(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
                Coeff c = ca;
                c *= cb;
                out.add_term(m, c);
            }
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    void require_same(const Polynomial& o) const {
        if (!(ring_ == o.ring_) || arity_ != o.arity_)
            fail(ErrorKind::Mismatch, "polynomials over different rings or arities");
    }

    RingSpec ring_;
    unsigned arity_;
    std::size_t nvars_;
    Terms terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using CyclotomicPolynomial = Polynomial<Cyclotomic>;

// Variable index -> replacement polynomial (all of one target arity).
template <ExactCoefficient Coeff>
using SubstitutionRule = std::vector<std::optional<Polynomial<Coeff>>>;

// Simultaneous substitution x_v <- rule[v], expanded. `target_arity` fixes
// the shape of the result. Throws when an occurring variable has no rule.
template <ExactCoefficient Coeff>
Polynomial<Coeff> substitute(const Polynomial<Coeff>& p, const SubstitutionRule<Coeff>& rule,
                             unsigned target_arity) {
    if (rule.size() != p.num_vars()) fail(ErrorKind::Mismatch, "substitution rule size does not match variables");
    Polynomial<Coeff> out(p.ring(), target_arity);
    // powers[v][e-1] = rule[v]^e
    std::vector<std::vector<Polynomial<Coeff>>> powers(p.num_vars());
    auto power = [&](std::size_t v, unsigned e) -> const Polynomial<Coeff>& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(*rule[v]);
        while (cache.size() < e) cache.push_back(cache.back() * *rule[v]);
        return cache[e - 1];
    };
    for (const auto& [m, c] : p.terms()) {
        auto prod = Polynomial<Coeff>::constant(p.ring(), target_arity, c);
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!rule[v]) fail(ErrorKind::InvalidArgument, "substitution rule missing for an occurring variable");
            if (rule[v]->arity() != target_arity) fail(ErrorKind::Mismatch, "substitution rule arity mismatch");
            prod *= power(v, m[v]);
        }
        out += prod;
    }
    return out;
}

// Identity rule x_v <- x_v.
template <ExactCoefficient Coeff>
SubstitutionRule<Coeff> identity_rule(const RingSpec& ring, unsigned arity) {
    SubstitutionRule<Coeff> rule;
    const std::size_t nv = var_count(ring.order(), arity);
    for (std::size_t v = 0; v < nv; ++v) rule.push_back(Polynomial<Coeff>::variable(ring, arity, v));
    return rule;
}

// Rule that renames variables: x_v <- y_{target(v)}.
template <ExactCoefficient Coeff>
SubstitutionRule<Coeff> renaming_rule(const RingSpec& ring, unsigned arity, unsigned target_arity,
                                      const std::function<std::size_t(std::size_t)>& target) {
    SubstitutionRule<Coeff> rule;
    const std::size_t nv = var_count(ring.order(), arity);
    for (std::size_t v = 0; v < nv; ++v) rule.push_back(Polynomial<Coeff>::variable(ring, target_arity, target(v)));
    return rule;
}

template <ExactCoefficient Coeff>
using EvaluationPoint = std::vector<std::optional<Coeff>>;

template <ExactCoefficient Coeff>
Coeff evaluate(const Polynomial<Coeff>& p, const EvaluationPoint<Coeff>& point) {
    if (point.size() != p.num_vars()) fail(ErrorKind::Mismatch, "evaluation point size does not match variables");
    Coeff total(0L);
    for (const auto& [m, c] : p.terms()) {
        Coeff t = c;
        for (std::size_t v = 0; v < m.size() && !t.is_zero(); ++v) {
            if (m[v] == 0) continue;
            if (!point[v]) fail(ErrorKind::InvalidArgument, "evaluation point missing an occurring variable");
            for (unsigned e = 0; e < m[v]; ++e) t *= *point[v];
        }
        total += t;
    }
    return total;
}

template <ExactCoefficient Coeff>
EvaluationPoint<Coeff> constant_point(const RingSpec& ring, unsigned arity, const Coeff& value) {
    return EvaluationPoint<Coeff>(var_count(ring.order(), arity), value);
}

CyclotomicPolynomial to_cyclotomic(const RationalPolynomial& p, unsigned root_order);
// Throws ErrorKind::NonRational if any coefficient is irrational.
RationalPolynomial to_rational(const CyclotomicPolynomial& p);

}  // namespace jacobi
