#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "jacobi/designs.hpp"
#include "jacobi/enumerators.hpp"
#include "jacobi/error.hpp"
#include "support.hpp"

using namespace jacobi;
using testing::fixture;

namespace {

void check_counting_identity(const DesignReport& r, unsigned n) {
    if (!r.lambda) return;
    CHECK(BigInt(static_cast<unsigned long>(*r.lambda)) * binomial(n, r.t) ==
          BigInt(static_cast<unsigned long>(r.blocks)) * binomial(r.k, r.t));
}

BlockMultiset complete(unsigned n, unsigned k) {
    BlockMultiset b{n, k, {}};
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (static_cast<unsigned>(std::popcount(m)) == k) b.blocks.push_back(m);
    return b;
}

}  // namespace

TEST_CASE("supports") {
    CHECK(supports(fixture("e8"), 4).blocks.size() == 14);
    CHECK(supports(fixture("g24"), 8).blocks.size() == 759);
    const auto z = supports(fixture("e8"), 0);
    CHECK(z.blocks == std::vector<std::uint64_t>{0});
    // Block counts match the weight enumerator.
    const LinearCode c = fixture("f4_hexacode");
    const auto p = cwe(c);
    for (unsigned wt = 0; wt <= 6; ++wt) {
        Rational from_cwe;
        for (const auto& [m, coeff] : p.terms())
            if (6u - m[0] == wt) from_cwe += coeff;
        CHECK(Rational(static_cast<long>(supports(c, wt).blocks.size())) == from_cwe);
    }
}

TEST_CASE("complete designs") {
    for (unsigned n = 4; n <= 7; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (unsigned t = 0; t <= k; ++t) {
                const auto r = check_design(complete(n, k), t);
                REQUIRE(r.lambda);
                CHECK(BigInt(static_cast<unsigned long>(*r.lambda)) == binomial(n - t, k - t));
                check_counting_identity(r, n);
            }
}

TEST_CASE("Steiner systems from e8 and g24") {
    const auto e = check_design(supports(fixture("e8"), 4), 3);
    REQUIRE(e.lambda);
    CHECK(*e.lambda == 1);
    check_counting_identity(e, 8);

    const auto g = check_design(supports(fixture("g24"), 8), 5);
    REQUIRE(g.lambda);
    CHECK(*g.lambda == 1);
    CHECK(g.blocks == 759);
    check_counting_identity(g, 24);
    // Not a 6-design: some 6-sets lie in one octad, others in none.
    const auto g6 = check_design(supports(fixture("g24"), 8), 6);
    CHECK_FALSE(g6.lambda);
    CHECK(g6.min_cover == 0);
    CHECK(g6.max_cover == 1);
}

TEST_CASE("designs are designs of every smaller strength") {
    const auto blocks = supports(fixture("g24"), 8);
    for (unsigned s = 0; s <= 5; ++s) {
        const auto r = check_design(blocks, s);
        CHECK(r.lambda.has_value());
        check_counting_identity(r, 24);
    }
}

TEST_CASE("homogeneity") {
    const auto g = check_homogeneous(fixture("g24"), 5);
    CHECK(g.homogeneous);
    REQUIRE(g.classes.size() == 4);
    CHECK(g.classes[0].weight == 8);
    CHECK(g.classes[3].weight == 24);
    for (const auto& c : g.classes) check_counting_identity(c.report, 24);
    CHECK(check_homogeneous(fixture("e8"), 3).homogeneous);
    CHECK_FALSE(check_homogeneous(LinearCode(RingSpec::field(2), 2, {{1, 0}}), 1).homogeneous);
    // The e8^2 weight-4 words are the two e8 copies, so 3-sets straddling them are uncovered.
    CHECK_FALSE(check_homogeneous(fixture("e8x2"), 3).homogeneous);
}

TEST_CASE("design errors") {
    CHECK_THROWS_AS(check_design(supports(fixture("e8"), 4), 5), Error);
    Budget small;
    small.limit = 100;
    try {
        (void)check_design(supports(fixture("g24"), 8), 5, small);
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
}
