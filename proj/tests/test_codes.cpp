#include <doctest.h>

#include <random>
#include <set>

#include "uhf/codes.hpp"

using namespace uhf;

TEST_CASE("reed-solomon generator and distance at q=3") {
    const LinearCode c = rs_code(3, 2, 3);
    CHECK(c.gen == std::vector<Word>{{1, 1, 1}, {0, 1, 2}});
    CHECK(min_distance(c) == 2);
    CHECK(is_mds(c));
    // first codewords in message-label order
    CHECK(c.codeword(0) == Word{0, 0, 0});
    CHECK(c.codeword(1) == Word{0, 1, 2});
    CHECK(c.codeword(2) == Word{0, 2, 1});
    CHECK(c.codeword(3) == Word{1, 1, 1});
    CHECK(c.codeword(4) == Word{1, 2, 0});
}

TEST_CASE("enumeration matches direct codeword computation") {
    const LinearCode c = rs_code(5, 3, 4);
    std::uint64_t visited = 0;
    c.for_each_codeword([&](std::uint64_t label, const Word& w) {
        CHECK(w == c.codeword(label));
        ++visited;
        return true;
    });
    CHECK(visited == 125);
}

TEST_CASE("reed-solomon distance equals n-k+1 on the whole desk grid") {
    for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        const std::size_t kmax = std::min<std::size_t>(q - 1, 6);  // q^k within the scan cap
        for (std::size_t k = 2; k <= kmax; ++k) {
            for (std::size_t n = k + 1; n <= q; ++n) {
                CAPTURE(q);
                CAPTURE(k);
                CAPTURE(n);
                const LinearCode c = rs_code(q, k, n);
                CHECK(min_distance(c) == n - k + 1);
                CHECK(is_mds(c));
                CHECK(c.size() == singleton_max_size(n, n - k + 1, q));
            }
        }
    }
}

TEST_CASE("reed-solomon rejections") {
    CHECK_THROWS_AS(rs_code(3, 3, 3), Error);
    CHECK_THROWS_AS(rs_code(5, 2, 6), Error);  // extended points not supported
    CHECK_THROWS_AS(rs_code(5, 1, 3), Error);
    CHECK_THROWS_AS(rs_code(6, 2, 4), Error);  // not a prime power
}

TEST_CASE("parity code with the all-ones word") {
    const Word allones3(3, 1);
    const LinearCode c33 = parity_mds_with_allones(3, 3);
    CHECK(c33.dim == 2);
    CHECK(min_distance(c33) == 2);
    CHECK(c33.contains(allones3));
    CHECK(is_mds(c33));

    // lexicographically first v over GF(3), n=4 is (1,1,2,2)
    const LinearCode c34 = parity_mds_with_allones(3, 4);
    CHECK(c34.gen == std::vector<Word>{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 2}});
    CHECK(min_distance(c34) == 2);
    CHECK(c34.contains(Word(4, 1)));
    CHECK(is_mds(c34));
    CHECK(c34.size_u64() == 27);

    const LinearCode c24 = parity_mds_with_allones(2, 4);
    CHECK(c24.gen == std::vector<Word>{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(min_distance(c24) == 2);
    CHECK(c24.contains(Word(4, 1)));

    CHECK_THROWS_AS(parity_mds_with_allones(2, 3), Error);
    try {
        parity_mds_with_allones(2, 5);
        FAIL("expected NoSuchVector");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::NoSuchVector);
    }
}

TEST_CASE("minimum distance basics") {
    const GenericCode rep(2, {{0, 0, 0}, {1, 1, 1}});
    CHECK(min_distance(rep) == 3);

    // the whole space has distance 1
    FieldPtr f2 = field_create(2);
    const LinearCode full(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(min_distance(full) == 1);

    CodeLimits tiny;
    tiny.max_items = 4;
    CHECK_THROWS_AS(min_distance(rs_code(3, 2, 3), tiny), Error);
    const GenericCode big(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    tiny.max_items = 2;
    CHECK_THROWS_AS(min_distance(big, tiny), Error);
}

TEST_CASE("mds recognition") {
    CHECK(is_mds(rs_code(5, 2, 5)));
    CHECK(is_mds(parity_mds_with_allones(3, 4)));
    const GenericCode not_mds(2, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}});
    CHECK(min_distance(not_mds) == 2);
    CHECK(!is_mds(not_mds));  // K = 3 < 2^(3-2+1) = 4
    const GenericCode rep(2, {{0, 0, 0}, {1, 1, 1}});
    CHECK(is_mds(rep));  // K = 2 = 2^(3-3+1)
}

TEST_CASE("singleton bound values") {
    CHECK(singleton_max_size(4, 2, 2) == BigUint(8));
    CHECK(singleton_max_size(3, 3, 2) == BigUint(2));
    CHECK(singleton_max_size(5, 4, 5) == BigUint(25));
    CHECK(singleton_max_size(10, 1, 1024).str() == "1267650600228229401496703205376");
    CHECK_THROWS_AS(singleton_max_size(3, 0, 2), Error);
    CHECK_THROWS_AS(singleton_max_size(3, 4, 2), Error);
}

TEST_CASE("subcode selection is the message-label prefix") {
    const LinearCode parity = parity_mds_with_allones(2, 4);
    const GenericCode sub = subcode_select(parity, 6);
    CHECK(sub.words == std::vector<Word>{{0, 0, 0, 0},
                                         {0, 0, 1, 1},
                                         {0, 1, 0, 1},
                                         {0, 1, 1, 0},
                                         {1, 0, 0, 1},
                                         {1, 0, 1, 0}});
    CHECK(min_distance(sub) == 2);

    const GenericCode whole = subcode_select(parity, 8);
    CHECK(whole.size() == 8);
    CHECK_THROWS_AS(subcode_select(parity, 1), Error);
    CHECK_THROWS_AS(subcode_select(parity, 9), Error);
    try {
        subcode_select(parity, 1);
        FAIL("expected TooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::TooSmall);
    }
}

TEST_CASE("subcodes never lose distance") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned q = (rng() % 2) ? 3 : 2;
        std::size_t n = 4 + rng() % 3;
        if (q == 2 && n % 2 != 0) ++n;  // parity vector needs even length over GF(2)
        const LinearCode code = parity_mds_with_allones(q, n);
        const std::uint64_t total = code.size_u64();
        const std::uint64_t size = 2 + rng() % (total - 2);
        const GenericCode sub = subcode_select(code, size);
        CHECK(min_distance(sub) >= min_distance(code));
    }
}

TEST_CASE("every code respects the singleton bound") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned q = 2 + rng() % 3;
        const std::size_t len = 2 + rng() % 5;
        const std::size_t want = 2 + rng() % 20;
        std::set<Word> words;
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < len && space < 1000; ++i) space *= q;
        while (words.size() < std::min<std::uint64_t>(want, space)) {
            Word w(len);
            for (auto& s : w) s = static_cast<std::uint16_t>(rng() % q);
            words.insert(w);
        }
        const GenericCode code(q, std::vector<Word>(words.begin(), words.end()));
        const std::size_t d = min_distance(code);
        CHECK(BigUint(code.size()) <= singleton_max_size(code.length, d, q));
    }
}

TEST_CASE("generator validation") {
    FieldPtr f3 = field_create(3);
    CHECK_THROWS_AS(LinearCode(f3, {{1, 1}, {2, 2}}), Error);  // dependent rows
    CHECK_THROWS_AS(LinearCode(f3, {{1, 3}}), Error);          // symbol out of range
    CHECK_THROWS_AS(LinearCode(f3, {{1, 1}, {1}}), Error);     // ragged
    CHECK_THROWS_AS(GenericCode(2, {{0, 1}, {0, 1}}), Error);  // duplicate words
    CHECK(rs_code(3, 2, 3).contains(Word{1, 1, 1}));
    CHECK(!rs_code(3, 2, 3).contains(Word{1, 0, 0}));
}
