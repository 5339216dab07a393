#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sumsq/arith.hpp"
#include "sumsq/gaussian.hpp"
#include "sumsq/qseries.hpp"
#include "sumsq/repnum.hpp"

using namespace sumsq;

namespace {

TruncatedSeries from_ints(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    TruncatedSeries one_plus_q = from_ints({1, 1, 0});
    TruncatedSeries one_minus_q = from_ints({1, -1, 0});
    CHECK(one_plus_q * one_minus_q == from_ints({1, 0, -1}));

    TruncatedSeries e2 = eisenstein_E2(3, 5);
    CHECK(e2.scaled(Rational(0)) == TruncatedSeries(5));

    // (sum q^i)^2 has coefficient m+1 at q^m
    TruncatedSeries geo(20);
    for (std::size_t i = 0; i <= 20; ++i) geo.set_coeff(i, Rational(1));
    TruncatedSeries sq = geo * geo;
    for (std::size_t m = 0; m <= 20; ++m) CHECK(sq.coeff(m) == Rational(Integer(m + 1)));
}

TEST_CASE("series truncation contract") {
    TruncatedSeries s = from_ints({1, 2, 3});
    CHECK(s.order() == 2);
    CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
    CHECK((s + from_ints({1, 1})).order() == 1);  // min order
    CHECK((s * from_ints({1, 1})).order() == 1);
    CHECK(s.truncated(1) == from_ints({1, 2}));
    CHECK_THROWS_AS(s.truncated(5), std::out_of_range);
}

TEST_CASE("series dilation") {
    TruncatedSeries s = from_ints({7, 1, 3});
    TruncatedSeries d = s.dilated(2, 5);
    CHECK(d.coeff(0) == 7);
    CHECK(d.coeff(2) == 1);
    CHECK(d.coeff(4) == 3);
    CHECK(d.coeff(1) == 0);
    CHECK(d.coeff(5) == 0);
    CHECK_THROWS_AS(s.dilated(2, 6), std::out_of_range);
}

TEST_CASE("series power") {
    TruncatedSeries s = from_ints({1, 5, -2, 7});
    CHECK(s.pow(1) == s);
    CHECK(s.pow(3) == s * s * s);
    CHECK_THROWS_AS(s.pow(0), std::invalid_argument);
    CHECK(theta_series(2, 0).coeff(0) == 1);
    CHECK(theta_series(4, 2).coeff(2) == 24);
}

TEST_CASE("series division") {
    TruncatedSeries a = from_ints({2, 3, -1, 4, 0, 2});
    TruncatedSeries b = from_ints({1, -2, 5, 1, 3, -4});
    CHECK((a * b).divided_by(b) == a);
    CHECK_THROWS_AS(a.divided_by(from_ints({0, 1})), std::invalid_argument);
}

TEST_CASE("series ring laws on random inputs") {
    std::mt19937_64 rng(314159);
    auto random_series = [&](std::size_t ord) {
        TruncatedSeries s(ord);
        for (std::size_t i = 0; i <= ord; ++i) {
            long num = static_cast<long>(rng() % 41) - 20;
            long den = static_cast<long>(rng() % 7) + 1;
            s.set_coeff(i, make_rational(num, den));
        }
        return s;
    };
    for (int rep = 0; rep < 25; ++rep) {
        std::size_t ord = rng() % 12 + 1;
        TruncatedSeries a = random_series(ord), b = random_series(ord), c = random_series(ord);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncatedSeries(ord));
        if (a.coeff(0) != 0) CHECK((a * b).divided_by(a) == b);
    }
}

TEST_CASE("series serialization round trip") {
    TruncatedSeries e = eisenstein_E(6, 4);
    CHECK(e.pretty() == "-1/504 + q + 33*q^2 + 244*q^3 + 1057*q^4");
    auto j = e.to_json();
    CHECK(j["order"] == 4);
    CHECK(j["coeffs"][0] == "-1/504");
    CHECK(TruncatedSeries::from_json(j) == e);
    CHECK(TruncatedSeries(3).pretty() == "0");
}

TEST_CASE("theta series") {
    TruncatedSeries t12 = theta_series(12, 4);
    CHECK(t12 == from_ints({1, 24, 264, 1760, 7944}));
    for (unsigned n : {2u, 6u, 10u, 16u}) CHECK(theta_series(n, 3).coeff(0) == 1);
    CHECK(theta_series(10, 1).coeff(1) == 20);
    CHECK_THROWS_AS(theta_series(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(theta_series(0, 5), std::invalid_argument);
}

TEST_CASE("theta coefficients equal lattice counts") {
    LatticeCounter counter(12, 120);
    for (unsigned n : {2u, 4u, 6u, 8u, 10u, 12u}) {
        TruncatedSeries t = theta_series(n, 120);
        for (unsigned long m = 0; m <= 120; ++m)
            CHECK(t.coeff(m) == Rational(counter.count(n, m)));
    }
}

TEST_CASE("eta12 expansion") {
    TruncatedSeries e = eta12_2z(400);
    CHECK(e.coeff(1) == 1);
    CHECK(e.coeff(3) == -12);
    CHECK(e.coeff(5) == 54);
    CHECK(e.coeff(7) == -88);
    CHECK(e.coeff(9) == -99);
    for (std::size_t m = 0; m <= 400; m += 2) CHECK(e.coeff(m) == 0);
    for (std::size_t m = 0; m <= 400; ++m) CHECK(e.coeff(m).get_den() == 1);
}

TEST_CASE("eisenstein E") {
    TruncatedSeries e6 = eisenstein_E(6, 4);
    CHECK(e6.coeff(0) == make_rational(-1, 504));
    CHECK(e6.coeff(4) == 1057);
    for (unsigned k : {2u, 4u, 6u, 8u, 10u}) CHECK(eisenstein_E(k, 1).coeff(1) == 1);
    CHECK_THROWS_AS(eisenstein_E(5, 3), std::invalid_argument);
}

TEST_CASE("eisenstein E1 and E2") {
    CHECK(eisenstein_E1(3, 2).coeff(2) == 4);
    CHECK(eisenstein_E1(3, 0).coeff(0) == 0);
    for (unsigned k : {3u, 5u, 7u})
        CHECK(eisenstein_E1(k, 3).coeff(3) == Rational(ipow(Integer(3), k - 1) - 1));
    CHECK_THROWS_AS(eisenstein_E1(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_E2(4, 3), std::invalid_argument);

    // The constant sits on E2; these two identities pin it exactly.
    CHECK(eisenstein_E2(3, 0).coeff(0) == make_rational(-1, 4));
    TruncatedSeries t6 = theta_series(6, 60);
    TruncatedSeries combo6 = eisenstein_E1(3, 60).scaled(Rational(16)) -
                             eisenstein_E2(3, 60).scaled(Rational(4));
    CHECK(combo6 == t6);
    TruncatedSeries t2 = theta_series(2, 60);
    CHECK(eisenstein_E2(1, 60).scaled(Rational(4)) == t2);
}

TEST_CASE("eisenstein coefficients are multiplicative") {
    std::mt19937_64 rng(5);
    TruncatedSeries e = eisenstein_E(6, 400);
    TruncatedSeries e1 = eisenstein_E1(5, 400);
    TruncatedSeries e2 = eisenstein_E2(5, 400);
    TruncatedSeries c = cm_form(5, 400);
    int done = 0;
    while (done < 100) {
        unsigned long m1 = rng() % 19 + 2, m2 = rng() % 19 + 2;
        Integer g;
        Integer a(m1), b(m2);
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1 || m1 * m2 > 400) continue;
        ++done;
        for (const auto* s : {&e, &e1, &e2, &c})
            CHECK(s->coeff(m1 * m2) == s->coeff(m1) * s->coeff(m2));
    }
}

TEST_CASE("cm form") {
    TruncatedSeries c5 = cm_form(5, 50);
    CHECK(c5.coeff(1) == 1);
    CHECK(c5.coeff(2) == -4);
    CHECK(c5.coeff(3) == 0);
    for (std::size_t m = 1; m <= 50; ++m) CHECK(c5.coeff(m).get_den() == 1);
    CHECK_THROWS_AS(cm_form(6, 10), std::invalid_argument);
    CHECK_THROWS_AS(cm_form(7, 10), std::invalid_argument);
    CHECK_THROWS_AS(cm_form(1, 10), std::invalid_argument);

    // lacunarity at inert primes
    for (unsigned k : {5u, 9u, 13u}) {
        TruncatedSeries c = cm_form(k, 500);
        for (unsigned long p = 3; p <= 500; ++p)
            if (p % 4 == 3 && is_prime(Integer(p))) CHECK(c.coeff(p) == 0);
    }

    // the weight-5 generator is the quarter of the norm power sums
    for (std::size_t m = 1; m <= 50; ++m)
        CHECK(c5.coeff(m) * 4 == Rational(norm_power_sum(Integer(static_cast<unsigned long>(m)), 4)));
}
