#include <doctest.h>

#include "uhf/bigint.hpp"
#include "uhf/rational.hpp"

using namespace uhf;

TEST_CASE("rational normalization") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(-1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(7, 7).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), Error);
}

TEST_CASE("rational arithmetic and order") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(4, 13).to_double() == doctest::Approx(4.0 / 13.0).epsilon(1e-15));
    CHECK((-Rat(1, 2)).num == -1);
}

TEST_CASE("rational overflow is an error, not a wrap") {
    const Rat big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * Rat(2), Error);
    CHECK_THROWS_AS(big + big, Error);
    // reducible products survive
    CHECK(Rat(INT64_MAX, 2) * Rat(2, INT64_MAX) == Rat(1));
}

TEST_CASE("rational parsing") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("2") == Rat(2));
    CHECK(Rat::parse("0.35") == Rat(7, 20));
    CHECK(Rat::parse("-1/2") == Rat(-1, 2));
    CHECK(Rat::parse("1.0") == Rat(1));
    CHECK_THROWS_AS(Rat::parse(""), Error);
    CHECK_THROWS_AS(Rat::parse("x"), Error);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), Error);
    CHECK_THROWS_AS(Rat::parse("1/"), Error);
    CHECK(Rat::parse("1/2").str() == "1/2");
    CHECK(Rat::parse("4/2").str() == "2");
}

TEST_CASE("big unsigned integers") {
    CHECK(BigUint::pow(2, 100).str() == "1267650600228229401496703205376");
    CHECK(BigUint::pow(3, 7).str() == "2187");
    CHECK(BigUint::pow(3, 7) == BigUint(2187));
    CHECK(BigUint::pow(5, 0) == BigUint(1));
    CHECK(BigUint(0).str() == "0");
    CHECK(BigUint::pow(2, 64) > BigUint(UINT64_MAX));
    CHECK(BigUint(25).fits_u64());
    CHECK(BigUint::pow(5, 2).as_u64() == 25);
    BigUint x(3);
    x.mul_u64(std::uint64_t(1) << 33);  // factor above 2^32 takes the high-limb path
    CHECK(x.str() == "25769803776");
    CHECK(x.as_u64() == (std::uint64_t(3) << 33));
}
