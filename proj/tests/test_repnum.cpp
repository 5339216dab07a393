#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumsq/repnum.hpp"

using namespace sumsq;

TEST_CASE("elementary formula anchors") {
    CHECK(r_elementary(2, 25) == 12);
    CHECK(r_elementary(4, 2) == 24);
    CHECK(r_elementary(10, 2) == 180);
    for (unsigned n : {2u, 4u, 6u, 8u, 10u}) {
        CHECK(r_elementary(n, 0) == 1);
        CHECK(r_elementary(n, 1) == Integer(2 * n));
        CHECK(r_elementary(n, 3) == 8 * binomial(n, 3));
    }
}

TEST_CASE("elementary formula rejects other n") {
    CHECK_THROWS_AS(r_elementary(12, 5), std::invalid_argument);
    CHECK_THROWS_AS(r_elementary(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(r_elementary(14, 5), std::invalid_argument);
}

TEST_CASE("supplied factorization is used and validated") {
    RepQuery q{10, Integer(325), Factorization::parse("5^2,13")};
    CHECK(r_elementary(q) == r_elementary(10, 325));
    RepQuery bad{10, Integer(325), Factorization::parse("5^2,17")};
    CHECK_THROWS_AS(r_elementary(bad), std::invalid_argument);
}

TEST_CASE("r12 anchors") {
    CHECK(r12(1) == 24);
    CHECK(r12(3) == 1760);
    CHECK(r12(4) == 7944);
    CHECK(r12(0) == 1);
    TruncatedSeries eta = eta12_2z(100);
    for (unsigned long m = 1; m <= 100; ++m) CHECK(r12(Integer(m), eta) == r12(Integer(m)));
    CHECK_THROWS_AS(r12(Integer(200), eta), std::invalid_argument);  // context too short
}

TEST_CASE("brute force counter") {
    CHECK(r_bruteforce(4, 0) == 1);
    CHECK(r_bruteforce(8, 2) == 112);
    CHECK(r_bruteforce(6, 1) == 12);
    LatticeCounter tight(4, 50);
    CHECK(tight.count(4, 50) == r_bruteforce(4, 50));
    CHECK_THROWS_AS(tight.count(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(tight.count(4, 51), std::invalid_argument);
    CHECK_THROWS_AS(r_bruteforce(17, 1), std::invalid_argument);
}

TEST_CASE("formulas agree with the lattice oracle") {
    LatticeCounter counter(12, 300);
    for (unsigned n : {2u, 4u, 6u, 8u, 10u})
        for (unsigned long m = 1; m <= 300; ++m)
            CHECK(r_elementary(n, m) == counter.count(n, m));
    TruncatedSeries eta = eta12_2z(300);
    for (unsigned long m = 1; m <= 300; ++m)
        CHECK(r12(Integer(m), eta) == counter.count(12, m));
}

TEST_CASE("four-squares consistency") {
    // odd m: r_4(m) = 8 sigma_1(m)
    for (unsigned long m = 1; m <= 2000; m += 2)
        CHECK(r_elementary(4, m) ==
              8 * divisor_power_sum(factorize(Integer(m)), 1, DivisorFilter::all));
    // every positive integer is a sum of four squares
    for (unsigned long m = 1; m <= 10000; ++m) CHECK(r_elementary(4, m) > 0);
}

TEST_CASE("ten-squares denominators always cancel") {
    for (unsigned long m = 1; m <= 2000; ++m) (void)r_elementary(10, m);  // throws on failure
}

TEST_CASE("eisenstein coefficient anchors") {
    CHECK(eisenstein_c(12, 3) == 1952);
    CHECK(eisenstein_c(14, 3) == make_rational(189280, 61));
    CHECK(eisenstein_c(4, 3) == 32);
    CHECK_THROWS_AS(eisenstein_c(12, 4), std::invalid_argument);  // even m
    CHECK_THROWS_AS(eisenstein_c(2, 3), std::invalid_argument);   // n > 2 required
    CHECK_THROWS_AS(eisenstein_c(7, 3), std::invalid_argument);
}

TEST_CASE("eisenstein part dominates exactly up to ten squares") {
    for (unsigned n : {4u, 6u, 8u, 10u})
        CHECK(Rational(8 * binomial(n, 3)) == eisenstein_c(n, 3));
    for (unsigned n = 12; n <= 20; n += 2)
        CHECK(Rational(8 * binomial(n, 3)) != eisenstein_c(n, 3));
}
