#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mzv/arith.hpp"

using namespace mzv;

TEST_CASE("rationals reduce and serialize canonically") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(6, 4).str() == "3/2");
    CHECK(Rat(-6, 4).str() == "-3/2");
    CHECK(Rat(Int(3), Int(-6)).str() == "-1/2");
    CHECK(Rat(7).str() == "7");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat::parse("-11/2") == Rat(-11, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("2/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("p-adic valuation") {
    CHECK(vp(Rat(9, 2), Int(2)) == ValP::of(-1));
    CHECK(vp(Rat(8), Int(2)) == ValP::of(3));
    CHECK(vp(Rat(0), Int(2)) == ValP::infinity());
    CHECK(vp(Rat(45), Int(3)) == ValP::of(2));
    CHECK_THROWS_AS(vp(Rat(1), Int(4)), std::invalid_argument);
    CHECK_THROWS_AS(vp(Rat(1), Int(1)), std::invalid_argument);

    CHECK(ValP::infinity() > ValP::of(1000000));
    CHECK(ValP::of(-3) < ValP::of(0));
    CHECK(ValP::infinity() == ValP::infinity());
}

TEST_CASE("valuation is additive on products, ultrametric on sums") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 400);
    for (int trial = 0; trial < 300; ++trial) {
        Rat x(num(rng), den(rng)), y(num(rng), den(rng));
        for (long p : {2L, 3L, 5L}) {
            ValP vx = vp(x, p), vy = vp(y, p);
            CHECK(vp(x * y, p) == vx + vy);
            ValP vs = vp(x + y, p);
            CHECK((vs == std::min(vx, vy) || vs > std::min(vx, vy)));
        }
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(6) == Rat(1, 42));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli(3) == Rat(0));
}

TEST_CASE("euler constants b_n") {
    CHECK(euler_b(1) == Rat(1));
    CHECK(euler_b(2) == Rat(2, 5));   // zeta(4) = pi^4/90, zeta(2)^2 = pi^4/36
    CHECK(euler_b(3) == Rat(8, 35));  // zeta(6) = pi^6/945
    CHECK_THROWS_AS(euler_b(0), std::invalid_argument);
}
