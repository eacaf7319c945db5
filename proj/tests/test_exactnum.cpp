#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>

#include "jacobi/cyclotomic.hpp"
#include "jacobi/error.hpp"
#include "jacobi/rational.hpp"

using namespace jacobi;

TEST_CASE("rationals are kept reduced") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational().to_string() == "0/1");
    CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK(Rational(1) / Rational(3) + Rational(1) / Rational(6) == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(to_decimal(Rational(BigInt(24), BigInt(5)), 12) == "4.800000000000");
    CHECK(to_decimal(Rational(BigInt(1), BigInt(8)), 2) == "0.12");
    CHECK(to_decimal(Rational(BigInt(3), BigInt(8)), 2) == "0.38");
    CHECK(to_decimal(Rational(BigInt(-1), BigInt(3)), 4) == "-0.3333");
    CHECK(to_decimal(Rational(BigInt(5), BigInt(2)), 0) == "2");
    CHECK(to_decimal(Rational(7), 3) == "7.000");
    CHECK(parse_decimal("5.90769230769") == Rational(BigInt(590769230769), BigInt(100000000000)));
    CHECK(parse_decimal("-0.5") == Rational(BigInt(-1), BigInt(2)));
}

TEST_CASE("factorials, binomials, multinomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(24, 8) == 735471);
    CHECK(binomial(3, 5) == 0);
    const std::uint16_t parts[] = {2, 3, 4};
    CHECK(multinomial(9, parts) == binomial(9, 2) * binomial(7, 3));
    CHECK(multinomial(8, parts) == 0);
    BigInt row = 0;
    for (unsigned k = 0; k <= 20; ++k) row += binomial(20, k);
    CHECK(row == BigInt(1) << 20);
}

TEST_CASE("cyclotomic polynomials match a floating-point product") {
    for (unsigned m = 1; m <= 60; ++m) {
        CAPTURE(m);
        std::vector<std::complex<double>> poly{1.0};
        for (unsigned j = 1; j <= m; ++j) {
            if (std::gcd(j, m) != 1) continue;
            const auto root = std::polar(1.0, 2 * M_PI * j / m);
            std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= root * poly[i];
            }
            poly = next;
        }
        const IntPoly& phi = cyclotomic_poly(m);
        REQUIRE(phi.size() == poly.size());
        for (std::size_t i = 0; i < phi.size(); ++i) CHECK(phi[i] == std::llround(poly[i].real()));
        CHECK(euler_phi(m) == phi.size() - 1);
    }
}

TEST_CASE("roots of unity") {
    for (unsigned m : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u}) {
        CAPTURE(m);
        CHECK(Cyclotomic::zeta_power(m, m).is_one());
        CHECK(Cyclotomic::zeta_power(m, -1) * Cyclotomic::zeta_power(m, 1) == Cyclotomic(1));
        Cyclotomic s;
        for (unsigned j = 0; j < m; ++j) s += Cyclotomic::zeta_power(m, j);
        CHECK(s.is_zero());
    }
    CHECK(Cyclotomic::zeta_power(4, 2) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta_power(2, 1).to_rational() == Rational(-1));
    // zeta_3 + zeta_3^2 = -1
    CHECK((Cyclotomic::zeta_power(3, 1) + Cyclotomic::zeta_power(3, 2)).to_rational() == Rational(-1));
}

TEST_CASE("irrational values refuse to become rationals") {
    const Cyclotomic z = Cyclotomic::zeta_power(3, 1);
    CHECK_FALSE(z.is_rational());
    try {
        (void)z.to_rational();
        FAIL("expected NonRational");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonRational);
    }
}

TEST_CASE("orders combine through lifting") {
    const Cyclotomic half(Rational(BigInt(1), BigInt(2)));
    const Cyclotomic i = Cyclotomic::zeta_power(4, 1);
    CHECK((i * half * Cyclotomic(2)) == i);
    CHECK(i.lifted(8) * i.lifted(8) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta_power(8, 2) == i.lifted(8));
    CHECK_THROWS_AS(i + Cyclotomic::zeta_power(3, 1), Error);
}
