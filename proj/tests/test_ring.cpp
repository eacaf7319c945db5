#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "jacobi/error.hpp"
#include "jacobi/ring.hpp"

using namespace jacobi;

namespace {

std::vector<RingSpec> shipped_rings() {
    std::vector<RingSpec> rings;
    const std::pair<unsigned, unsigned> fields[] = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4},
                                                    {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
    for (auto [p, f] : fields) rings.push_back(RingSpec::field(p, f));
    for (unsigned k = 2; k <= 12; ++k) rings.push_back(RingSpec::modring(k));
    return rings;
}

// Number of monic irreducibles of degree d over F_p (Gauss).
long gauss_count(unsigned p, unsigned d) {
    auto mobius = [](unsigned n) {
        int m = 1;
        for (unsigned f = 2; f * f <= n; ++f) {
            if (n % f) continue;
            n /= f;
            if (n % f == 0) return 0;
            m = -m;
        }
        return n > 1 ? -m : m;
    };
    long s = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e) continue;
        long pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        s += mobius(d / e) * pe;
    }
    return s / d;
}

}  // namespace

TEST_CASE("element lists follow the canonical encoding") {
    CHECK(RingSpec::field(2).order() == 2);
    CHECK(RingSpec::modring(4).order() == 4);
    const RingSpec f4 = RingSpec::field(2, 2, {1, 1, 1});
    CHECK(f4.order() == 4);
    CHECK(f4.decode(2) == std::vector<unsigned>{0, 1});
    CHECK(f4.decode(3) == std::vector<unsigned>{1, 1});
    CHECK(f4.name() == "F_4");
    CHECK(RingSpec::modring(4).name() == "Z_4");
}

TEST_CASE("arithmetic examples") {
    const RingSpec f4 = RingSpec::field(2, 2);
    CHECK(f4.mul(2, 2) == 3);  // lambda^2 = lambda + 1
    CHECK(RingSpec::modring(4).add(3, 3) == 2);
    for (const auto& r : shipped_rings())
        for (unsigned a = 0; a < r.order(); ++a) CHECK(r.add(static_cast<Symbol>(a), 0) == a);
}

TEST_CASE("inner products") {
    const RingSpec f2 = RingSpec::field(2), z4 = RingSpec::modring(4), f4 = RingSpec::field(2, 2);
    const Word ones{1, 1}, a{1, 2}, b{2, 1}, lam{2};
    CHECK(inner_product(f2, ones, ones) == 0);
    CHECK(inner_product(z4, a, b) == 0);
    CHECK(inner_product(f4, lam, lam) == 3);
    CHECK_THROWS_AS(inner_product(f2, ones, lam), Error);
}

TEST_CASE("character values") {
    CHECK(RingSpec::field(2).chi(1) == Cyclotomic(-1));
    CHECK(RingSpec::modring(4).chi(2) == Cyclotomic(-1));
    const RingSpec f4 = RingSpec::field(2, 2);
    CHECK(f4.chi(2).is_one());
    CHECK(f4.chi(3) == Cyclotomic(-1));
}

TEST_CASE("ring axioms and encoding on every shipped ring") {
    for (const auto& r : shipped_rings()) {
        CAPTURE(r.name());
        const unsigned q = r.order();
        for (unsigned a = 0; a < q; ++a) {
            const auto sa = static_cast<Symbol>(a);
            CHECK(r.encode(r.decode(sa)) == sa);
            CHECK(r.add(sa, r.neg(sa)) == 0);
            CHECK(r.mul(sa, 1) == sa);
            if (r.is_unit(sa)) CHECK(r.mul(sa, r.inv(sa)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                const auto sb = static_cast<Symbol>(b);
                CHECK(r.add(sa, sb) == r.add(sb, sa));
                CHECK(r.mul(sa, sb) == r.mul(sb, sa));
                for (unsigned c = 0; c < q; c += 1 + q / 5) {
                    const auto sc = static_cast<Symbol>(c);
                    CHECK(r.mul(sa, r.add(sb, sc)) == r.add(r.mul(sa, sb), r.mul(sa, sc)));
                    CHECK(r.mul(r.mul(sa, sb), sc) == r.mul(sa, r.mul(sb, sc)));
                }
            }
        }
        if (r.is_field())
            for (unsigned a = 1; a < q; ++a) CHECK(r.is_unit(static_cast<Symbol>(a)));
        else
            for (unsigned a = 1; a < q; ++a) CHECK(r.is_unit(static_cast<Symbol>(a)) == (std::gcd(a, q) == 1));
        CHECK_THROWS_AS(r.inv(0), Error);
    }
}

TEST_CASE("character orthogonality and additivity on every shipped ring") {
    for (const auto& r : shipped_rings()) {
        CAPTURE(r.name());
        const unsigned q = r.order();
        for (unsigned a = 0; a < q; ++a) {
            Cyclotomic s;
            for (unsigned i = 0; i < q; ++i) s += r.chi(r.mul(static_cast<Symbol>(a), static_cast<Symbol>(i)));
            CHECK(s == Cyclotomic(a == 0 ? static_cast<long>(q) : 0L));
            for (unsigned b = 0; b < q; ++b)
                CHECK(r.chi(r.add(static_cast<Symbol>(a), static_cast<Symbol>(b))) ==
                      r.chi(static_cast<Symbol>(a)) * r.chi(static_cast<Symbol>(b)));
        }
    }
}

TEST_CASE("irreducibility test agrees with the Gauss count") {
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= (p == 2 ? 6u : 3u); ++d) {
            long count = 0, total = 1;
            for (unsigned i = 0; i < d; ++i) total *= p;
            for (long code = 0; code < total; ++code) {
                std::vector<unsigned> poly;
                long c = code;
                for (unsigned i = 0; i < d; ++i, c /= p) poly.push_back(static_cast<unsigned>(c % p));
                poly.push_back(1);
                count += is_irreducible_mod_p(poly, p);
            }
            CAPTURE(p);
            CAPTURE(d);
            CHECK(count == gauss_count(p, d));
        }
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(RingSpec::field(4), Error);
    CHECK_THROWS_AS(RingSpec::field(2, 2, {1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2
    CHECK_THROWS_AS(RingSpec::field(2, 2, {1, 1}), Error);
    CHECK_THROWS_AS(RingSpec::modring(1), Error);
    CHECK_NOTHROW(RingSpec::field(3, 2, {2, 1, 1}));
}

TEST_CASE("shipped defaults are irreducible") {
    const std::pair<unsigned, unsigned> fields[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
                                                    {2, 8}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
    for (auto [p, f] : fields) {
        const auto m = RingSpec::default_modulus(p, f);
        CHECK(m.size() == f + 1);
        CHECK(is_irreducible_mod_p(m, p));
    }
}
