#pragma once

#include <cstdint>
#include <span>

#include "jacobi/codes.hpp"
#include "jacobi/polynomial.hpp"

namespace jacobi {

// Complete weight enumerator, arity 1.
RationalPolynomial cwe(const LinearCode& c, const Budget& budget = Budget::from_env());

// Genus-g complete weight enumerator, variables indexed by R^g.
RationalPolynomial cwe_genus(const LinearCode& c, unsigned genus, const Budget& budget = Budget::from_env());

// Complete Jacobi polynomial Jac(C, w), variables x_(u_i, w_i).
RationalPolynomial jacobi_polynomial(const LinearCode& c, std::span<const Symbol> w,
                                     const Budget& budget = Budget::from_env());

// Complete joint weight enumerator, variables x_(u_i, v_i).
RationalPolynomial joint_cwe(const LinearCode& c, const LinearCode& d, const Budget& budget = Budget::from_env());

// Complete joint Jacobi polynomial, variables x_(u_i, v_i, w_i).
RationalPolynomial joint_jacobi(const LinearCode& c, const LinearCode& d, std::span<const Symbol> w,
                                const Budget& budget = Budget::from_env());

// Polynomial whose coefficients are the table counts.
template <unsigned Arity>
RationalPolynomial polynomial_from_table(const RingSpec& ring, const DistributionTable<Arity>& table) {
    RationalPolynomial p(ring, Arity);
    for (const auto& [comp, count] : table.entries)
        p.add_term(comp.counts, Rational(BigInt(static_cast<unsigned long>(count))));
    return p;
}

// MacWilliams transforms. Each takes a polynomial of the named shape and the
// size of the code being dualised; the output is the enumerator with that
// code replaced by its dual. Substitution coefficients are exact cyclotomic
// values; results must come out rational (ErrorKind::NonRational otherwise).
//
//   second: x_(a1 a2 a3) <- sum_b chi(a2 b) x_(a1 b a3),          / |D|
//   first:  x_(a1 a2 a3) <- sum_b chi(a1 b) x_(b a2 a3),          / |C|
//   both:   x_(a1 a2 a3) <- sum_b1,b2 chi(a1 b1 + a2 b2) x_(b1 b2 a3), / |C||D|
//   single: x_(a1 a2)    <- sum_b chi(a1 b) x_(b a2),             / |C|
RationalPolynomial macwilliams_second(const RationalPolynomial& p, std::uint64_t d_size);
RationalPolynomial macwilliams_first(const RationalPolynomial& p, std::uint64_t c_size);
RationalPolynomial macwilliams_both(const RationalPolynomial& p, std::uint64_t cd_size);
RationalPolynomial macwilliams_single(const RationalPolynomial& p, std::uint64_t c_size);

// The character-sum substitution rules used above, exposed for tests.
SubstitutionRule<Cyclotomic> macwilliams_rule_second(const RingSpec& ring);
SubstitutionRule<Cyclotomic> macwilliams_rule_first(const RingSpec& ring);
SubstitutionRule<Cyclotomic> macwilliams_rule_both(const RingSpec& ring);
SubstitutionRule<Cyclotomic> macwilliams_rule_single(const RingSpec& ring);

}  // namespace jacobi
