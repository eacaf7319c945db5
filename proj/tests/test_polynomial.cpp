#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jacobi/error.hpp"
#include "jacobi/polynomial.hpp"
#include "jacobi/polynomial_io.hpp"

using namespace jacobi;

namespace {
const RingSpec f2 = RingSpec::field(2);
RationalPolynomial x(std::size_t v, unsigned arity = 1) { return RationalPolynomial::variable(f2, arity, v); }
}  // namespace

TEST_CASE("variable indices") {
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned arity : {1u, 2u, 3u})
            for (std::size_t i = 0; i < var_count(q, arity); ++i) CHECK(var_index(q, var_tuple(q, arity, i)) == i);
    const Symbol t[] = {1, 0, 2};
    CHECK(var_index(3, t) == 1 * 9 + 0 * 3 + 2);
    CHECK(var_count(4, 3) == 64);
}

TEST_CASE("ring operations") {
    const auto s = x(0) + x(1);
    const auto sq = s * s;
    CHECK(sq.size() == 3);
    CHECK(sq.coefficient({1, 1}) == Rational(2));
    CHECK(sq.homogeneous_degree() == 2u);
    CHECK((sq - sq).is_zero());
    CHECK((s + RationalPolynomial::constant(f2, 1, Rational(1))).homogeneous_degree() == std::nullopt);
    auto t = s;
    t.scale(Rational(BigInt(1), BigInt(2)));
    CHECK(t.coefficient({1, 0}) == Rational(BigInt(1), BigInt(2)));
    t.add_term({1, 0}, Rational(BigInt(-1), BigInt(2)));
    CHECK(t.size() == 1);
    CHECK_THROWS_AS(s + x(0, 2), Error);
}

TEST_CASE("substitution") {
    const auto p = x(0) * x(0) * x(1);
    CHECK(substitute(p, identity_rule<Rational>(f2, 1), 1) == p);
    SubstitutionRule<Rational> swap{x(1), x(0)};
    CHECK(substitute(p, swap, 1) == x(1) * x(1) * x(0));
    // x0 <- x0 + x1, x1 <- x0 - x1: (x0 + x1)^2 (x0 - x1)
    SubstitutionRule<Rational> mw{x(0) + x(1), x(0) - x(1)};
    const auto q = substitute(p, mw, 1);
    CHECK(q == (x(0) + x(1)) * (x(0) + x(1)) * (x(0) - x(1)));
    SubstitutionRule<Rational> partial{x(0), std::nullopt};
    CHECK_THROWS_AS(substitute(p, partial, 1), Error);
    // Arity change: x_(a) <- y_(a, 0).
    const auto r = substitute(p, renaming_rule<Rational>(f2, 1, 2, [](std::size_t v) { return v * 2; }), 2);
    CHECK(r.arity() == 2);
    CHECK(r.coefficient({2, 0, 1, 0}) == Rational(1));
}

TEST_CASE("evaluation") {
    const auto p = x(0) * x(0) * x(1) + x(1);
    CHECK(evaluate(p, constant_point(f2, 1, Rational(1))) == Rational(2));
    const EvaluationPoint<Rational> pt{Rational(3), Rational(BigInt(1), BigInt(2))};
    CHECK(evaluate(p, pt) == Rational(5));
    const EvaluationPoint<Rational> missing{Rational(1), std::nullopt};
    CHECK_THROWS_AS(evaluate(p, missing), Error);
}

TEST_CASE("cyclotomic coefficients") {
    const RingSpec f3 = RingSpec::field(3);
    CyclotomicPolynomial c(f3, 1);
    c.add_term({1, 0, 0}, Cyclotomic::zeta_power(3, 1));
    CHECK_THROWS_AS(to_rational(c), Error);
    c.add_term({1, 0, 0}, Cyclotomic::zeta_power(3, 2));
    CHECK(to_rational(c).coefficient({1, 0, 0}) == Rational(-1));
    const auto back = to_cyclotomic(to_rational(c), 3);
    CHECK(back == c);
}

TEST_CASE("serialisation") {
    auto y2 = x(1) * x(1);
    y2.scale(Rational(14));
    const auto p = x(0) * x(0) + y2 - x(0) * x(1);
    const std::string text = to_text(p);
    CHECK(text == "1 * x_(0)^2\n-1 * x_(0) x_(1)\n14 * x_(1)^2");
    CHECK(to_text(RationalPolynomial(f2, 1)) == "0");
    const auto j = to_json(p);
    CHECK(rational_polynomial_from_json(f2, 1, j) == p);
    CHECK(var_label(4, 3, var_index(4, std::vector<Symbol>{3, 0, 2})) == "(3,0,2)");
}
