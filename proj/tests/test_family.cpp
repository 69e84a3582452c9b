#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "uhf/family.hpp"

using namespace uhf;

namespace {

// row-major (function-major) literal to the element-major internal layout
HashFamily make_family(std::vector<std::vector<std::uint16_t>> rows, unsigned m,
                       RangeGroup g = RangeGroup::cyclic) {
    const std::size_t nfun = rows.size();
    const std::size_t n = rows[0].size();
    std::vector<std::uint16_t> table(nfun * n);
    for (std::size_t i = 0; i < nfun; ++i)
        for (std::size_t a = 0; a < n; ++a) table[a * nfun + i] = rows[i][a];
    return HashFamily(nfun, n, m, std::move(table), g,
                      g == RangeGroup::field_additive ? field_create(m) : nullptr);
}

HashFamily random_family(std::mt19937& rng, std::size_t nfun, std::size_t n, unsigned m) {
    std::vector<std::uint16_t> table(nfun * n);
    for (auto& v : table) v = static_cast<std::uint16_t>(rng() % m);
    return HashFamily(nfun, n, m, std::move(table));
}

}  // namespace

TEST_CASE("hand-checked collision measurements") {
    const HashFamily lone = make_family({{0, 1}}, 2);
    const EpsilonReport r0 = measure_epsilon_u(lone);
    CHECK(r0.epsilon == Rat(0));
    CHECK(r0.witness_a1 == 0);
    CHECK(r0.witness_a2 == 1);

    const HashFamily two = make_family({{0, 0}, {0, 1}}, 2);
    const EpsilonReport r1 = measure_epsilon_u(two);
    CHECK(r1.epsilon == Rat(1, 2));
    CHECK(r1.worst_count == 1);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(HashFamily(1, 2, 3, {0, 1}), Error);          // n < m
    CHECK_THROWS_AS(HashFamily(1, 2, 2, {0, 2}), Error);          // entry out of range
    CHECK_THROWS_AS(HashFamily(2, 2, 2, {0, 1, 0}), Error);       // size mismatch
    CHECK_THROWS_AS(HashFamily(1, 2, 1, {0, 0}), Error);          // m < 2
}

TEST_CASE("code-derived families carry the field group and exact epsilon") {
    const HashFamily par = code_to_family(parity_mds_with_allones(2, 4));
    CHECK(par.functions == 4);
    CHECK(par.domain == 8);
    CHECK(par.range == 2);
    CHECK(par.group == RangeGroup::field_additive);
    CHECK(measure_epsilon_u(par).epsilon == Rat(1, 2));

    const HashFamily rep = code_to_family(GenericCode(2, {{0, 0, 0}, {1, 1, 1}}));
    CHECK(measure_epsilon_u(rep).epsilon == Rat(0));

    const HashFamily rs = code_to_family(rs_code(5, 2, 5));
    CHECK(rs.functions == 5);
    CHECK(rs.domain == 25);
    CHECK(measure_epsilon_u(rs).epsilon == Rat(1, 5));
}

TEST_CASE("reed-solomon families measure (k-1)/n on a small grid") {
    for (unsigned q : {3u, 5u}) {
        for (std::size_t k = 2; k < q; ++k) {
            for (std::size_t n = k + 1; n <= q; ++n) {
                CAPTURE(q);
                CAPTURE(k);
                CAPTURE(n);
                const HashFamily fam = code_to_family(rs_code(q, k, n));
                CHECK(measure_epsilon_u(fam).epsilon ==
                      Rat(static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(n)));
            }
        }
    }
}

TEST_CASE("difference measurements") {
    const HashFamily delta33 = code_to_delta_family(parity_mds_with_allones(3, 3));
    CHECK(delta33.functions == 3);
    CHECK(delta33.domain == 3);
    CHECK(delta33.range == 3);
    CHECK(measure_epsilon_delta(delta33).epsilon == Rat(1, 3));

    // constant family: difference 0 is hit by every function
    const HashFamily constant = make_family({{0, 0}, {0, 0}}, 2);
    const EpsilonReport r = measure_epsilon_delta(constant);
    CHECK(r.epsilon == Rat(1));
    CHECK(*r.witness_b == 0);
}

TEST_CASE("difference family from the parity code cosets") {
    const LinearCode code = parity_mds_with_allones(3, 4);
    const HashFamily fam = code_to_delta_family(code);
    CHECK(fam.functions == 4);
    CHECK(fam.domain == 9);  // q^(k-1) cosets
    CHECK(fam.range == 3);
    const EpsilonReport rep = measure_epsilon_delta(fam);
    CHECK(rep.epsilon == Rat(1, 2));  // = 1 - D/N exactly

    // representatives are coset-minimal and pairwise in distinct cosets
    const FiniteField& f = *code.field;
    for (std::uint64_t a = 0; a < fam.domain; ++a) {
        Word w(fam.functions);
        for (std::size_t i = 0; i < fam.functions; ++i) w[i] = fam.value(i, a);
        CHECK(code.contains(w));
        for (unsigned lambda = 1; lambda < 3; ++lambda) {
            Word shifted(w.size());
            for (std::size_t j = 0; j < w.size(); ++j)
                shifted[j] = static_cast<std::uint16_t>(f.add(w[j], lambda));
            CHECK(w < shifted);
        }
    }
}

TEST_CASE("delta epsilon does not depend on the coset representative") {
    const LinearCode code = parity_mds_with_allones(3, 4);
    const HashFamily fam = code_to_delta_family(code);
    const Rat base = measure_epsilon_delta(fam).epsilon;

    const FiniteField& f = *code.field;
    std::mt19937 rng(11);
    HashFamily shifted = fam;
    for (std::uint64_t a = 0; a < shifted.domain; ++a) {
        const unsigned lambda = rng() % 3;
        for (std::size_t i = 0; i < shifted.functions; ++i)
            shifted.table[a * shifted.functions + i] = static_cast<std::uint16_t>(
                f.add(shifted.table[a * shifted.functions + i], lambda));
    }
    CHECK(measure_epsilon_delta(shifted).epsilon == base);
}

TEST_CASE("reed-solomon code contains all-ones and converts to a delta family") {
    const LinearCode rs = rs_code(3, 2, 3);
    const HashFamily fam = code_to_delta_family(rs);
    CHECK(fam.functions == 3);
    CHECK(fam.domain == 3);
    CHECK(measure_epsilon_delta(fam).epsilon == Rat(1, 3));

    FieldPtr f3 = field_create(3);
    const LinearCode no_e(f3, {{1, 0, 0}, {0, 1, 0}});
    try {
        code_to_delta_family(no_e);
        FAIL("expected AllOnesNotInCode");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::AllOnesNotInCode);
    }
}

TEST_CASE("strong measurements") {
    // all affine maps on GF(2): balanced, epsilon = 1/m
    const HashFamily affine = make_family({{0, 0}, {1, 1}, {0, 1}, {1, 0}}, 2);
    const EpsilonReport rep = measure_epsilon_su(affine);
    CHECK(rep.balanced);
    CHECK(rep.epsilon == Rat(1, 2));
    CHECK(rep.worst_count == 1);

    // unbalanced: the least eps satisfying the pair condition can exceed 1
    // (worst count m/N with worst = N here); balanced = false flags it
    const HashFamily constant = make_family({{0, 0}, {0, 0}}, 2);
    const EpsilonReport bad = measure_epsilon_su(constant);
    CHECK(!bad.balanced);
    CHECK(bad.epsilon == Rat(2));
    CHECK(bad.worst_count == 2);

    // m does not divide N: condition 1 cannot hold
    const HashFamily odd = make_family({{0, 1}, {1, 0}, {0, 0}}, 2);
    CHECK(!measure_epsilon_su(odd).balanced);
}

TEST_CASE("all three measures agree with the definitional oracle on random families") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned m = 2 + rng() % 3;
        const std::size_t n = m + rng() % (12 - m + 1);
        const std::size_t nfun = 1 + rng() % 6;
        const HashFamily fam = random_family(rng, nfun, n, m);
        CAPTURE(trial);

        const auto u = measure_epsilon_u(fam);
        const auto uo = oracle::u_worst(fam);
        CHECK(u.worst_count == uo.count);
        CHECK(u.witness_a1 == uo.a1);
        CHECK(u.witness_a2 == uo.a2);

        const auto d = measure_epsilon_delta(fam);
        const auto dor = oracle::delta_worst(fam);
        CHECK(d.worst_count == dor.count);
        CHECK(d.witness_a1 == dor.a1);
        CHECK(d.witness_a2 == dor.a2);
        CHECK(*d.witness_b == dor.b);

        const auto s = measure_epsilon_su(fam);
        const auto so = oracle::su_worst(fam);
        CHECK(s.worst_count == so.count);
        CHECK(s.witness_a1 == so.a1);
        CHECK(s.witness_a2 == so.a2);
        CHECK(s.witness_values->first == so.b1);
        CHECK(s.witness_values->second == so.b2);
        CHECK(s.balanced == oracle::is_balanced(fam));

        // difference counting dominates plain collisions (b = 0 recovers them)
        CHECK(d.epsilon >= u.epsilon);
    }
}

TEST_CASE("projection search and pair scan return identical reports") {
    MeasureOptions pairs;
    pairs.algo = MeasureOptions::Algo::pair_scan;
    MeasureOptions proj;
    proj.algo = MeasureOptions::Algo::projection;

    const HashFamily rs = code_to_family(rs_code(5, 3, 5));  // 125 elements
    const auto a = measure_epsilon_u(rs, pairs);
    const auto b = measure_epsilon_u(rs, proj);
    CHECK(a.epsilon == b.epsilon);
    CHECK(a.witness_a1 == b.witness_a1);
    CHECK(a.witness_a2 == b.witness_a2);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned m = 2 + rng() % 3;
        const std::size_t n = m + rng() % 40;
        const std::size_t nfun = 1 + rng() % 8;
        const HashFamily fam = random_family(rng, nfun, n, m);
        const auto x = measure_epsilon_u(fam, pairs);
        const auto y = measure_epsilon_u(fam, proj);
        CAPTURE(trial);
        CHECK(x.worst_count == y.worst_count);
        CHECK(x.witness_a1 == y.witness_a1);
        CHECK(x.witness_a2 == y.witness_a2);
    }
}

TEST_CASE("measurement is schedule-independent") {
    const HashFamily rs = code_to_family(rs_code(5, 3, 5));
    MeasureOptions serial;
    serial.threads = 1;
    MeasureOptions wide;
    wide.threads = 4;
    for (auto measure : {measure_epsilon_u, measure_epsilon_delta, measure_epsilon_su}) {
        const auto a = measure(rs, serial);
        const auto b = measure(rs, wide);
        CHECK(a.epsilon == b.epsilon);
        CHECK(a.witness_a1 == b.witness_a1);
        CHECK(a.witness_a2 == b.witness_a2);
        CHECK(a.worst_count == b.worst_count);
    }
}

TEST_CASE("budget cap raises TooLarge") {
    const HashFamily rs = code_to_family(rs_code(5, 2, 5));
    MeasureOptions tiny;
    tiny.max_events = 10;
    CHECK_THROWS_AS(measure_epsilon_u(rs, tiny), Error);
    try {
        measure_epsilon_u(rs, tiny);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::TooLarge);
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("round trip between codes and families") {
    const LinearCode rs = rs_code(3, 2, 3);
    const HashFamily fam = code_to_family(rs);
    const FamilyCodeResult back = family_to_code(fam);
    CHECK(!back.duplicates_removed);

    std::set<Word> original;
    rs.for_each_codeword([&](std::uint64_t, const Word& w) {
        original.insert(w);
        return true;
    });
    const std::set<Word> recovered(back.code.words.begin(), back.code.words.end());
    CHECK(original == recovered);
    CHECK(min_distance(back.code) == 2);  // (1 - 1/3) * 3

    const HashFamily constant = make_family({{0, 0}, {0, 0}}, 2);
    const FamilyCodeResult collapsed = family_to_code(constant);
    CHECK(collapsed.duplicates_removed);
    CHECK(collapsed.code.size() == 1);
}

TEST_CASE("floors hold for measured families") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned m = 2 + rng() % 3;
        const std::size_t n = m + 1 + rng() % 8;
        const std::size_t nfun = 1 + rng() % 6;
        const HashFamily fam = random_family(rng, nfun, n, m);
        const Rat floor(static_cast<std::int64_t>(n - m),
                        static_cast<std::int64_t>(m) * (static_cast<std::int64_t>(n) - 1));
        CHECK(measure_epsilon_u(fam).epsilon >= floor);
        CHECK(measure_epsilon_delta(fam).epsilon >= Rat(1, static_cast<std::int64_t>(m)));
    }
}
