#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <set>

#include "jacobi/codes.hpp"
#include "jacobi/error.hpp"
#include "support.hpp"

using namespace jacobi;
using testing::fixture;

namespace {

std::set<Word> word_set(const LinearCode& c) {
    std::set<Word> s;
    const auto words = c.enumerate();
    for (std::size_t i = 0; i < words.size(); ++i) s.emplace(words[i].begin(), words[i].end());
    return s;
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
    std::vector<std::uint64_t> a(c.length() + 1, 0);
    const auto words = c.enumerate();
    for (std::size_t i = 0; i < words.size(); ++i) ++a[weight(words[i])];
    return a;
}

}  // namespace

TEST_CASE("fixture sizes and weight distributions") {
    const LinearCode e8 = fixture("e8");
    CHECK(e8.size() == 16);
    CHECK(weight_distribution(e8) == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});

    const LinearCode g24 = fixture("g24");
    CHECK(g24.size() == 4096);
    const auto a = weight_distribution(g24);
    CHECK(a[0] == 1);
    CHECK(a[8] == 759);
    CHECK(a[12] == 2576);
    CHECK(a[16] == 759);
    CHECK(a[24] == 1);

    for (const char* name : {"e8x2", "d16plus"}) {
        const auto d = weight_distribution(fixture(name));
        CHECK(d[4] == 28);
        CHECK(d[8] == 198);
    }
    CHECK(weight_distribution(fixture("d24plus"))[4] == 66);
    CHECK(weight_distribution(fixture("d12x2plus"))[4] == 30);
    CHECK(fixture("z4_octacode").size() == 256);
    CHECK(fixture("f4_hexacode").size() == 64);
}

TEST_CASE("binary fixtures are Type II") {
    for (const char* name : {"e8", "e8x2", "d16plus", "g24", "d24plus", "d12x2plus"}) {
        CAPTURE(name);
        const LinearCode c = fixture(name);
        const auto a = weight_distribution(c);
        for (std::size_t w = 0; w < a.size(); ++w)
            if (a[w]) CHECK(w % 4 == 0);
        CHECK(c.size() * c.size() == std::uint64_t{1} << c.length());
        CHECK(word_set(dual(c)) == word_set(c));
    }
    const LinearCode octa = fixture("z4_octacode");
    CHECK(word_set(dual(octa)) == word_set(octa));
}

TEST_CASE("octad count by a parity scan of all 2^24 words") {
    const LinearCode g24 = fixture("g24");
    std::vector<std::uint32_t> rows;
    for (const auto& g : g24.generators()) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < 24; ++i) m |= std::uint32_t{g[i]} << i;
        rows.push_back(m);
    }
    // g24 is self-dual, so weight-8 words of g24 are exactly the weight-8
    // words orthogonal to every generator.
    std::uint64_t octads = 0;
    for (std::uint32_t x = 0; x < (1u << 24); ++x) {
        if (std::popcount(x) != 8) continue;
        bool ok = true;
        for (auto r : rows) ok = ok && (std::popcount(x & r) % 2 == 0);
        octads += ok;
    }
    CHECK(octads == 759);
}

TEST_CASE("duals agree with an exhaustive orthogonality scan") {
    std::mt19937_64 rng(7);
    const RingSpec rings[] = {RingSpec::field(2), RingSpec::field(3), RingSpec::field(2, 2), RingSpec::modring(4),
                              RingSpec::modring(6)};
    for (const auto& ring : rings) {
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t n = 2 + rng() % 4;
            const LinearCode c = testing::random_code(ring, n, rng() % (n + 1), rng);
            std::set<Word> expected;
            for (const auto& v : testing::all_words(ring.order(), n)) {
                bool ok = true;
                for (const auto& g : c.generators()) ok = ok && inner_product(ring, g, v) == 0;
                if (ok) expected.insert(v);
            }
            CAPTURE(ring.name());
            CAPTURE(n);
            const LinearCode d = dual(c);
            CHECK(word_set(d) == expected);
            std::uint64_t qn = 1;
            for (std::size_t i = 0; i < n; ++i) qn *= ring.order();
            CHECK(c.size() * d.size() == qn);
        }
    }
}

TEST_CASE("enumeration yields each codeword once and is closed") {
    std::mt19937_64 rng(11);
    for (const auto& ring : {RingSpec::field(3), RingSpec::modring(4), RingSpec::field(2, 2)}) {
        const LinearCode c = testing::random_code(ring, 4, 2, rng);
        const auto words = c.enumerate();
        const auto set = word_set(c);
        CHECK(set.size() == words.size());
        CHECK(words.size() == c.size());
        for (const auto& u : set) {
            CHECK(c.contains(u));
            for (const auto& v : set) {
                Word s(u.size());
                for (std::size_t i = 0; i < s.size(); ++i) s[i] = ring.add(u[i], v[i]);
                CHECK(set.count(s) == 1);
            }
        }
    }
    const LinearCode zero(RingSpec::field(2), 3, {});
    CHECK(zero.size() == 1);
    CHECK(word_set(zero) == std::set<Word>{Word{0, 0, 0}});
}

TEST_CASE("permutations") {
    const Permutation sigma({2, 0, 1});
    const Word u{5, 6, 7};
    CHECK(permute_word(u, sigma) == Word{7, 5, 6});
    CHECK(permute_word(permute_word(u, sigma), sigma.inverse()) == u);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
    CHECK_THROWS_AS(Permutation({0, 3}), Error);

    const LinearCode e8 = fixture("e8");
    const LinearCode pe8 = permute(e8, Permutation({7, 3, 1, 0, 6, 2, 4, 5}));
    CHECK(weight_distribution(pe8) == weight_distribution(e8));
    CHECK(composition_table(pe8) == composition_table(e8));
}

TEST_CASE("compositions") {
    const RingSpec z4 = RingSpec::modring(4);
    const Word u{0, 1, 1, 3}, w{0, 0, 2, 2}, v{1, 1, 1, 1};
    CHECK(composition(z4, u).counts == std::vector<std::uint16_t>{1, 2, 0, 1});
    const auto r = jacobi_composition(z4, u, w);
    CHECK(r.total() == 4);
    CHECK(r.counts[0 * 4 + 0] == 1);
    CHECK(r.counts[1 * 4 + 0] == 1);
    CHECK(r.counts[1 * 4 + 2] == 1);
    CHECK(r.counts[3 * 4 + 2] == 1);
    const auto h = joint_jacobi_composition(z4, u, v, w);
    CHECK(h.counts[(3 * 4 + 1) * 4 + 2] == 1);
    CHECK(h.total() == 4);
}

TEST_CASE("distribution tables") {
    const LinearCode c = fixture("z4_small");
    const LinearCode d = fixture("z4_octacode");
    const Word w4{0, 1, 0, 2};
    CHECK(composition_table(c).total() == c.size());
    CHECK(jacobi_table(c, w4).total() == c.size());
    const Word w8{0, 1, 0, 2, 0, 0, 3, 0};
    CHECK(joint_jacobi_table(d, d, w8).total() == d.size() * d.size());
    // w = 0 puts everything in the w = 0 column.
    const auto t = jacobi_table(c, Word(4, 0));
    for (const auto& [r, count] : t.entries)
        for (unsigned a = 0; a < 4; ++a)
            for (unsigned b = 1; b < 4; ++b) CHECK(r.counts[a * 4 + b] == 0);
}

TEST_CASE("code files") {
    const std::string text = R"({"name":"t","ring":{"kind":"modring","k":4},"n":3,"generators":[[1,2,3]]})";
    const LinearCode c = parse_code(text);
    CHECK(c.name() == "t");
    CHECK(c.size() == 4);
    const LinearCode back = parse_code(code_to_json(c));
    CHECK(back.generators() == c.generators());
    CHECK(back.ring() == c.ring());

    auto kind_of = [](const std::string& s) {
        try {
            (void)parse_code(s);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;  // unreachable in these cases
    };
    CHECK(kind_of(R"({"ring":{"kind":"field","p":2},"n":2,"generators":[[1,1]],"extra":1})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"ring":{"kind":"field","p":2},"n":2,"generators":[[1,2]]})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"ring":{"kind":"field","p":2},"n":2,"generators":[[1]]})") == ErrorKind::Schema);
    CHECK(kind_of(R"({"ring":{"kind":"field","p":4},"n":2,"generators":[]})") == ErrorKind::InvalidArgument);
    CHECK(kind_of("not json") == ErrorKind::Schema);
    CHECK_THROWS_AS(load_code("/nonexistent/file.json"), Error);

    const LinearCode f4 = parse_code(
        R"({"ring":{"kind":"field","p":2,"f":2,"primitive_poly":[1,1,1]},"n":2,"generators":[[1,2]]})");
    CHECK(f4.size() == 4);
}

TEST_CASE("budget refuses large enumerations") {
    const LinearCode g24 = fixture("g24");
    Budget small;
    small.limit = 1000;
    try {
        (void)g24.enumerate(small);
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
    CHECK(g24.size(small) == 4096);  // rank only
}
