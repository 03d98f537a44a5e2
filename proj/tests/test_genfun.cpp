#include <doctest.h>

#include "test_util.hpp"
#include "trinom/genfun.hpp"
#include "trinom/hybrid.hpp"
#include "trinom/sequences.hpp"

using namespace trinom;

TEST_CASE("bessel series coefficients") {
    TruncatedSeries i0 = bessel_i_series(0, 10);
    CHECK(series_coeff(i0, 0) == ExactRat(1));
    CHECK(series_coeff(i0, 2) == ExactRat(1));
    CHECK(series_coeff(i0, 1) == ExactRat(0));
    CHECK(series_coeff(i0, 4) == ExactRat(1, 4));
    TruncatedSeries i1 = bessel_i_series(1, 10);
    CHECK(series_coeff(i1, 0) == ExactRat(0));
    CHECK(series_coeff(i1, 1) == ExactRat(1));
    CHECK_THROWS_AS(bessel_i_series(-1, 10), std::invalid_argument);
}

TEST_CASE("tricomi series coefficients") {
    TruncatedSeries c0 = tricomi_series(0, 8);
    CHECK(series_coeff(c0, 1) == ExactRat(1));
    for (long p = 0; p <= 5; ++p)
        CHECK(series_coeff(tricomi_series(p, 4), 0) == ExactRat(ExactInt(1), factorial(p)));
    TruncatedSeries c1 = tricomi_series(1, 8);
    CHECK(series_coeff(c1, 2) == ExactRat(1, 12));
}

TEST_CASE("bessel and tricomi series carry the same weights") {
    for (long alpha = 0; alpha <= 4; ++alpha) {
        TruncatedSeries b = bessel_i_series(alpha, static_cast<std::size_t>(alpha) + 101);
        TruncatedSeries c = tricomi_series(alpha, 51);
        for (long r = 0; r <= 50; ++r)
            CHECK(series_coeff(b, static_cast<std::size_t>(alpha + 2 * r)) ==
                  series_coeff(c, static_cast<std::size_t>(r)));
    }
}

TEST_CASE("ctc egf coefficients") {
    TruncatedSeries s = ctc_egf(60);
    CHECK(series_coeff(s, 0) == ExactRat(1));
    CHECK(series_coeff(s, 2) == ExactRat(3, 2));
    CHECK(series_coeff(s, 4) == ExactRat(19, 24));
    for (long n = 0; n < 60; ++n)
        CHECK(series_coeff(s, static_cast<std::size_t>(n)) * ExactRat(factorial(n)) ==
              ExactRat(ctc(n)));
}

TEST_CASE("associated egf coefficients") {
    TruncatedSeries m = assoc_egf(1, ExactRat(1), 60);
    CHECK(series_coeff(m, 3) * ExactRat(6) == ExactRat(4));
    for (long n = 0; n < 60; ++n)
        CHECK(series_coeff(m, static_cast<std::size_t>(n)) * ExactRat(factorial(n)) ==
              ExactRat(motzkin(n)));

    CHECK(assoc_egf(0, ExactRat(1), 40) == ctc_egf(40));

    TruncatedSeries a2 = assoc_egf(2, ExactRat(1), 12);
    CHECK(series_coeff(a2, 0) == ExactRat(1, 2));

    auto gen = trinom_test::rng(113);
    for (int i = 0; i < 4; ++i) {
        ExactRat x = trinom_test::random_rat(gen);
        ExactRat y = trinom_test::random_rat(gen);
        TruncatedSeries s = assoc_egf(2, x, 40, y);
        for (long n = 0; n < 40; ++n)
            CHECK(series_coeff(s, static_cast<std::size_t>(n)) * ExactRat(factorial(n)) ==
                  hybrid_pi_assoc(n, 2, x, y));
    }
}

TEST_CASE("pi ogf coefficients") {
    TruncatedSeries s11 = pi_ogf(ExactRat(1), ExactRat(1), 10);
    CHECK(series_coeff(s11, 3) == ExactRat(7));
    TruncatedSeries s0y = pi_ogf(ExactRat(0), ExactRat(4), 12);
    for (long n = 0; n < 12; ++n)
        CHECK(series_coeff(s0y, static_cast<std::size_t>(n)) ==
              pow(ExactRat(4), static_cast<unsigned long>(n)));
    CHECK(series_coeff(pi_ogf(ExactRat(2), ExactRat(3), 5), 2) == ExactRat(13));
}

TEST_CASE("legendre ogf coefficients") {
    TruncatedSeries ones = legendre_ogf(ExactRat(1), 20);
    for (long n = 0; n < 20; ++n)
        CHECK(series_coeff(ones, static_cast<std::size_t>(n)) == ExactRat(1));
    CHECK(series_coeff(legendre_ogf(ExactRat(1, 2), 5), 0) == ExactRat(1));
    CHECK(series_coeff(legendre_ogf(ExactRat(1, 2), 5), 2) == ExactRat(-1, 8));
    for (ExactRat x : {ExactRat(1, 2), ExactRat(-2), ExactRat(3, 5)}) {
        TruncatedSeries s = legendre_ogf(x, 60);
        for (long n = 0; n < 60; ++n)
            CHECK(series_coeff(s, static_cast<std::size_t>(n)) == legendre(n, x));
    }
}

TEST_CASE("hermite egf coefficients") {
    TruncatedSeries s = hkdf_egf(ExactRat(3), ExactRat(0), 12);
    for (long n = 0; n < 12; ++n)
        CHECK(series_coeff(s, static_cast<std::size_t>(n)) ==
              pow(ExactRat(3), static_cast<unsigned long>(n)) / ExactRat(factorial(n)));
    TruncatedSeries inv = hkdf_egf(ExactRat(1), ExactRat(1, 2), 8);
    CHECK(series_coeff(inv, 4) * ExactRat(factorial(4)) == ExactRat(10));
    TruncatedSeries s11 = hkdf_egf(ExactRat(1), ExactRat(1), 8);
    CHECK(series_coeff(s11, 2) * ExactRat(2) == ExactRat(3));

    auto gen = trinom_test::rng(127);
    for (int i = 0; i < 4; ++i) {
        ExactRat x = trinom_test::random_rat(gen);
        ExactRat y = trinom_test::random_rat(gen);
        TruncatedSeries e = hkdf_egf(x, y, 50);
        for (long n = 0; n < 50; ++n)
            CHECK(series_coeff(e, static_cast<std::size_t>(n)) * ExactRat(factorial(n)) ==
                  hkdf(n, x, y));
    }
}

TEST_CASE("build_series dispatch") {
    GenFunSpec spec;
    spec.kind = GenFunKind::CTC_EGF;
    spec.order = 30;
    CHECK(build_series(spec) == ctc_egf(30));

    spec.kind = GenFunKind::PI_OGF;
    spec.x = ExactRat(2);
    spec.y = ExactRat(3);
    CHECK(build_series(spec) == pi_ogf(ExactRat(2), ExactRat(3), 30));

    spec.kind = GenFunKind::BESSEL_I;
    spec.alpha_p = -2;
    CHECK_THROWS_AS(build_series(spec), std::invalid_argument);

    spec.alpha_p = 1;
    spec.order = 0;
    CHECK_THROWS_AS(build_series(spec), std::invalid_argument);
}
