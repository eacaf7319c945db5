#pragma once

#include <string>
#include <vector>

#include "jacobi/rational.hpp"

namespace jacobi {

// Integer polynomial, coefficients in ascending degree order.
using IntPoly = std::vector<long long>;

// The m-th cyclotomic polynomial, by exact division of x^m - 1 by Phi_d for
// every proper divisor d of m. Memoised.
const IntPoly& cyclotomic_poly(unsigned m);

unsigned euler_phi(unsigned m);

// Element of Q(zeta_m), stored as its residue in Q[x]/Phi_m(x) with
// zeta_m -> x. The representation is canonical, so equality is
// coefficient-wise. Root order 1 is the rational subfield; such values lift
// into any root order on contact.
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1) {}
    Cyclotomic(const Rational& r, unsigned m = 1);  // NOLINT(google-explicit-constructor)
    Cyclotomic(long r) : Cyclotomic(Rational(r)) {}  // NOLINT(google-explicit-constructor)

    // zeta_m^j for any integer j.
    static Cyclotomic zeta_power(unsigned m, long long j);

    // Builds from residue coefficients (length <= phi(m)).
    static Cyclotomic from_coeffs(unsigned m, std::vector<Rational> coeffs);

    unsigned root_order() const noexcept { return m_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Throws ErrorKind::NonRational when a non-constant coefficient is nonzero.
    Rational to_rational() const;

    // Same value expressed with root order `m` (a multiple of root_order()).
    Cyclotomic lifted(unsigned m) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& r);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator-(const Cyclotomic& a);

    // Values compare equal across root orders when they are the same number
    // (a rational of order 1 equals the same rational of order 4).
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    // "num/den" when rational, otherwise "[c0, c1, ...]@m".
    std::string to_string() const;

private:
    void align(const Cyclotomic& o);

    unsigned m_;
    std::vector<Rational> c_;
};

}  // namespace jacobi
