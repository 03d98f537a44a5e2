#include <doctest.h>

#include <thread>
#include <vector>

#include "test_util.hpp"
#include "trinom/exact.hpp"

using namespace trinom;

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == ExactInt(1));
    CHECK(factorial(5) == ExactInt(120));
    CHECK(factorial(20) == ExactInt("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("factorial recurrence up to 500") {
    for (long n = 0; n <= 500; ++n)
        CHECK(factorial(n + 1) == ExactInt(n + 1) * factorial(n));
}

TEST_CASE("factorial memo is safe under concurrent growth") {
    std::vector<std::thread> pool;
    std::vector<ExactInt> results(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&results, t] { results[static_cast<std::size_t>(t)] = factorial(600 + t); });
    for (auto& t : pool) t.join();
    for (int t = 0; t < 8; ++t)
        CHECK(results[static_cast<std::size_t>(t)] == factorial(600 + t));
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == ExactInt(6));
    CHECK(binomial(17, 0) == ExactInt(1));
    CHECK(binomial(10, 11) == ExactInt(0));
    CHECK(binomial(10, -1) == ExactInt(0));
    CHECK_THROWS_AS(binomial(-2, 1), std::invalid_argument);
}

TEST_CASE("pochhammer") {
    auto gen = trinom_test::rng();
    for (int i = 0; i < 20; ++i) CHECK(pochhammer(trinom_test::random_rat(gen), 0) == ExactRat(1));
    for (long k = 0; k <= 12; ++k) CHECK(pochhammer(ExactRat(1), k) == ExactRat(factorial(k)));
    CHECK(pochhammer(ExactRat(-3, 2), 2) == ExactRat(3, 4));
    CHECK(pochhammer(ExactRat(-5), 6) == ExactRat(0));  // runs through zero
    CHECK_THROWS_AS(pochhammer(ExactRat(1), -1), std::invalid_argument);
}

TEST_CASE("ExactInt string round trip and queries") {
    ExactInt big = factorial(100);
    CHECK(ExactInt(big.str()) == big);
    CHECK(big.str().size() == 158);
    CHECK((big * big).is_perfect_square());
    CHECK((big * big).sqrt() == big);
    CHECK_FALSE(ExactInt(-4).is_perfect_square());
    CHECK_THROWS_AS(ExactInt(2).sqrt(), std::invalid_argument);
    CHECK_THROWS_AS(ExactInt("12x"), std::invalid_argument);
    CHECK(ExactInt(-7).sign() == -1);
}

TEST_CASE("rational normal form") {
    CHECK(ExactRat(2, 4) == ExactRat(1, 2));
    CHECK(ExactRat(2, 4).numerator() == ExactInt(1));
    CHECK(ExactRat(2, 4).denominator() == ExactInt(2));
    CHECK(ExactRat(3, -6) == ExactRat(-1, 2));
    CHECK(ExactRat(3, -6).denominator() == ExactInt(2));  // denominator kept positive
    CHECK(ExactRat(0, -5) == ExactRat(0));
    CHECK(ExactRat(-6, 3).str() == "-2");
    CHECK(ExactRat(5, 3).str() == "5/3");
    CHECK_THROWS_AS(ExactRat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ExactRat(1) / ExactRat(0), std::invalid_argument);
}

TEST_CASE("normalization is idempotent on random inputs") {
    auto gen = trinom_test::rng(17);
    std::uniform_int_distribution<long> num(-2000, 2000);
    std::uniform_int_distribution<long> den(1, 2000);
    for (int i = 0; i < 200; ++i) {
        ExactRat r(num(gen), den(gen));
        ExactRat again(r.numerator(), r.denominator());
        CHECK(again == r);
        CHECK(again.numerator() == r.numerator());
        CHECK(again.denominator() == r.denominator());
        CHECK(r.denominator().sign() == 1);
    }
}

TEST_CASE("ring laws on random rationals") {
    auto gen = trinom_test::rng(23);
    for (int i = 0; i < 100; ++i) {
        ExactRat a = trinom_test::random_rat(gen);
        ExactRat b = trinom_test::random_rat(gen);
        ExactRat c = trinom_test::random_rat(gen);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("quadratic ring defining relation") {
    QuadElem w(ExactRat(0), ExactRat(1));  // default discriminant -3
    CHECK(w * w == QuadElem(ExactRat(-3), ExactRat(0)));
    QuadElem one_plus(ExactRat(1), ExactRat(1));
    QuadElem one_minus(ExactRat(1), ExactRat(-1));
    CHECK(one_plus * one_minus == QuadElem(ExactRat(4), ExactRat(0)));
    CHECK(w.pow(4) == QuadElem(ExactRat(9), ExactRat(0)));
    CHECK(w.pow(0) == QuadElem(ExactRat(1), ExactRat(0)));
}

TEST_CASE("quadratic ring rejects mismatched rings and zero division") {
    QuadElem a(ExactRat(1), ExactRat(1), ExactInt(-3));
    QuadElem b(ExactRat(1), ExactRat(1), ExactInt(5));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a / ExactRat(0), std::invalid_argument);
}

TEST_CASE("rational embedding is a homomorphism") {
    auto gen = trinom_test::rng(31);
    for (int i = 0; i < 50; ++i) {
        ExactRat r = trinom_test::random_rat(gen);
        ExactRat s = trinom_test::random_rat(gen);
        QuadElem lr = QuadElem::from_rational(r);
        QuadElem ls = QuadElem::from_rational(s);
        CHECK(lr * ls == QuadElem::from_rational(r * s));
        CHECK(lr + ls == QuadElem::from_rational(r + s));
        CHECK(lr.is_rational());
    }
}

TEST_CASE("quadratic ring distributivity on random elements") {
    auto gen = trinom_test::rng(37);
    std::uniform_int_distribution<long> disc(-11, 11);
    for (int i = 0; i < 60; ++i) {
        ExactInt d(disc(gen));
        QuadElem a(trinom_test::random_rat(gen), trinom_test::random_rat(gen), d);
        QuadElem b(trinom_test::random_rat(gen), trinom_test::random_rat(gen), d);
        QuadElem c(trinom_test::random_rat(gen), trinom_test::random_rat(gen), d);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}
