#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jacobi/enumerators.hpp"
#include "jacobi/error.hpp"
#include "support.hpp"

using namespace jacobi;
using testing::fixture;

namespace {

// Reindexes variables by keeping the tuple positions in `keep`.
RationalPolynomial project(const RationalPolynomial& p, std::vector<unsigned> keep) {
    const unsigned q = p.ring().order();
    const unsigned arity = p.arity();
    const auto target = static_cast<unsigned>(keep.size());
    auto rule = renaming_rule<Rational>(p.ring(), arity, target, [&](std::size_t v) {
        const auto t = var_tuple(q, arity, v);
        std::vector<Symbol> kept;
        for (unsigned k : keep) kept.push_back(t[k]);
        return var_index(q, kept);
    });
    return substitute(p, rule, target);
}

Rational at_ones(const RationalPolynomial& p) { return evaluate(p, constant_point(p.ring(), p.arity(), Rational(1))); }

LinearCode zero_code(const LinearCode& like) { return LinearCode(like.ring(), like.length(), {}); }

}  // namespace

TEST_CASE("cwe of e8") {
    const auto p = cwe(fixture("e8"));
    CHECK(p.size() == 3);
    CHECK(p.coefficient({8, 0}) == Rational(1));
    CHECK(p.coefficient({4, 4}) == Rational(14));
    CHECK(p.coefficient({0, 8}) == Rational(1));
}

TEST_CASE("genus-g enumerators") {
    const LinearCode c = fixture("z4_small");
    CHECK(cwe_genus(c, 1) == cwe(c));
    const auto g2 = cwe_genus(c, 2);
    CHECK(at_ones(g2) == Rational(static_cast<long>(c.size() * c.size())));
    CHECK(g2 == joint_cwe(c, c));
    CHECK(at_ones(cwe_genus(fixture("e8"), 3)) == Rational(16 * 16 * 16));
}

TEST_CASE("collapse chain") {
    std::mt19937_64 rng(3);
    for (const auto& ring : {RingSpec::field(2), RingSpec::field(3), RingSpec::modring(4)}) {
        CAPTURE(ring.name());
        for (int trial = 0; trial < 3; ++trial) {
            const std::size_t n = 3 + rng() % 2;
            const LinearCode c = testing::random_code(ring, n, 2, rng);
            const LinearCode d = testing::random_code(ring, n, 1 + rng() % 2, rng);
            const Word w = testing::random_word(ring.order(), n, rng);
            const Word zero(n, 0);

            // Jac(C, 0) is the cwe.
            CHECK(project(jacobi_polynomial(c, zero), {0}) == cwe(c));
            // Joint enumerator as a sum of Jacobi polynomials over D.
            RationalPolynomial sum(ring, 2);
            const auto dw = d.enumerate();
            for (std::size_t i = 0; i < dw.size(); ++i) sum += jacobi_polynomial(c, dw[i]);
            CHECK(sum == joint_cwe(c, d));
            // The three specialisations of the joint Jacobi polynomial.
            CHECK(project(joint_jacobi(zero_code(c), d, w), {1, 2}) == jacobi_polynomial(d, w));
            CHECK(project(joint_jacobi(c, zero_code(d), w), {0, 2}) == jacobi_polynomial(c, w));
            CHECK(project(joint_jacobi(c, c, zero), {0, 1}) == cwe_genus(c, 2));
            CHECK(project(joint_jacobi(c, d, zero), {0, 1}) == joint_cwe(c, d));
        }
    }
}

TEST_CASE("homogeneity and all-ones values") {
    const LinearCode c = fixture("f4_small");
    const LinearCode d = fixture("f4_hexacode");
    const Word w3{0, 2, 1};
    const Word w6{1, 0, 0, 3, 0, 2};
    const std::uint64_t cs = c.size(), ds = d.size();
    CHECK(cwe(c).homogeneous_degree() == 3u);
    CHECK(jacobi_polynomial(c, w3).homogeneous_degree() == 3u);
    CHECK(joint_jacobi(d, d, w6).homogeneous_degree() == 6u);
    CHECK(joint_cwe(d, d).homogeneous_degree() == 6u);
    CHECK(cwe_genus(c, 2).homogeneous_degree() == 3u);
    CHECK(at_ones(cwe(c)) == Rational(static_cast<long>(cs)));
    CHECK(at_ones(jacobi_polynomial(c, w3)) == Rational(static_cast<long>(cs)));
    CHECK(at_ones(joint_jacobi(d, d, w6)) == Rational(static_cast<long>(ds * ds)));
}

TEST_CASE("binary MacWilliams identity") {
    // W_{C^perp}(x, y) = W_C(x + y, x - y) / |C|.
    const LinearCode c(RingSpec::field(2), 5, {{1, 1, 0, 1, 0}, {0, 1, 1, 1, 1}});
    const Word zero(5, 0);
    const auto from_transform = project(macwilliams_single(jacobi_polynomial(c, zero), c.size()), {0});
    const auto x = RationalPolynomial::variable(c.ring(), 1, 0), y = RationalPolynomial::variable(c.ring(), 1, 1);
    SubstitutionRule<Rational> rule{x + y, x - y};
    auto expected = substitute(cwe(c), rule, 1);
    expected.scale(Rational(BigInt(1), BigInt(static_cast<unsigned long>(c.size()))));
    CHECK(from_transform == expected);
    CHECK(from_transform == cwe(dual(c)));
}

TEST_CASE("transforms equal direct dual-side enumerators") {
    struct Triple {
        LinearCode c, d;
        Word w;
    };
    const RingSpec f3 = RingSpec::field(3), z4 = RingSpec::modring(4);
    const std::vector<Triple> triples = {
        {LinearCode(f3, 3, {{1, 2, 0}}), LinearCode(f3, 3, {{1, 1, 1}}), {0, 1, 2}},
        {fixture("z4_small"), LinearCode(z4, 4, {{1, 3, 0, 2}}), {3, 0, 1, 0}},
        {fixture("f4_small"), fixture("f4_small"), {2, 0, 3}},
    };
    for (const auto& t : triples) {
        const auto p = joint_jacobi(t.c, t.d, t.w);
        CHECK(macwilliams_second(p, t.d.size()) == joint_jacobi(t.c, dual(t.d), t.w));
        CHECK(macwilliams_first(p, t.c.size()) == joint_jacobi(dual(t.c), t.d, t.w));
        CHECK(macwilliams_both(p, t.c.size() * t.d.size()) == joint_jacobi(dual(t.c), dual(t.d), t.w));
        CHECK(macwilliams_single(jacobi_polynomial(t.c, t.w), t.c.size()) == jacobi_polynomial(dual(t.c), t.w));
    }
}

TEST_CASE("fast transforms agree with direct substitution of the character rules") {
    const RingSpec z4 = RingSpec::modring(4), f3 = RingSpec::field(3);
    const LinearCode c(z4, 3, {{1, 2, 3}}), d(z4, 3, {{0, 1, 3}});
    const LinearCode e(f3, 3, {{1, 2, 0}}), f(f3, 3, {{0, 1, 1}});
    for (const auto& [cc, dd] : {std::pair{c, d}, std::pair{e, f}}) {
        const RingSpec& ring = cc.ring();
        const unsigned m = ring.root_order();
        const Word w{0, 1, 2};
        const auto p = joint_jacobi(cc, dd, w);
        auto direct = [&](const RationalPolynomial& x, const SubstitutionRule<Cyclotomic>& rule, unsigned arity,
                          std::uint64_t size) {
            auto img = substitute(to_cyclotomic(x, m), rule, arity);
            img.scale(Cyclotomic(Rational(BigInt(1), BigInt(static_cast<unsigned long>(size))), m));
            return to_rational(img);
        };
        CAPTURE(ring.name());
        CHECK(direct(p, macwilliams_rule_both(ring), 3, cc.size() * dd.size()) ==
              macwilliams_both(p, cc.size() * dd.size()));
        CHECK(direct(p, macwilliams_rule_first(ring), 3, cc.size()) == macwilliams_first(p, cc.size()));
        CHECK(direct(p, macwilliams_rule_second(ring), 3, dd.size()) == macwilliams_second(p, dd.size()));
        const auto j = jacobi_polynomial(cc, w);
        CHECK(direct(j, macwilliams_rule_single(ring), 2, cc.size()) == macwilliams_single(j, cc.size()));
        // Non-integer coefficients take the generic path; the result is linear in the input.
        auto half = j;
        half.scale(Rational(BigInt(1), BigInt(2)));
        auto expected = macwilliams_single(j, cc.size());
        expected.scale(Rational(BigInt(1), BigInt(2)));
        CHECK(macwilliams_single(half, cc.size()) == expected);
    }
}

TEST_CASE("self-dual codes are fixed by the single transform") {
    const LinearCode octa = fixture("z4_octacode");
    const Word w{1, 0, 2, 0, 0, 3, 0, 0};
    const auto j = jacobi_polynomial(octa, w);
    CHECK(macwilliams_single(j, octa.size()) == j);
}

TEST_CASE("character substitution of a non-enumerator is not rational") {
    const RingSpec f3 = RingSpec::field(3);
    auto p = RationalPolynomial::variable(f3, 2, var_index(3, std::vector<Symbol>{1, 0}));
    try {
        (void)macwilliams_single(p, 1);
        FAIL("expected NonRational");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonRational);
    }
    // The rules themselves are character sums: row a of the single rule at
    // the all-ones point is sum_b chi(a b), i.e. q at a = 0 and 0 otherwise.
    const auto rule = macwilliams_rule_single(f3);
    for (std::size_t v = 0; v < rule.size(); ++v) {
        const auto t = var_tuple(3, 2, v);
        const Cyclotomic s = evaluate(*rule[v], constant_point(f3, 2, Cyclotomic(1)));
        CHECK(s == Cyclotomic(t[0] == 0 ? 3L : 0L));
    }
}
