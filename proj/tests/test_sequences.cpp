#include <doctest.h>

#include "trinom/poly.hpp"
#include "trinom/sequences.hpp"

using namespace trinom;

TEST_CASE("ctc values") {
    CHECK(ctc(0) == ExactInt(1));
    CHECK(ctc(4) == ExactInt(19));
    CHECK(ctc(10) == ExactInt(8953));
    CHECK_THROWS_AS(ctc(-1), std::invalid_argument);
}

TEST_CASE("motzkin values") {
    CHECK(motzkin(0) == ExactInt(1));
    CHECK(motzkin(4) == ExactInt(9));
    CHECK(motzkin(10) == ExactInt(2188));
}

TEST_CASE("trinomial coefficients") {
    for (long n = 0; n <= 30; ++n) CHECK(trinomial_coeff(n, 0) == ctc(n));
    CHECK(trinomial_coeff(3, 1) == ExactInt(6));
    for (long n = 0; n <= 20; ++n) CHECK(trinomial_coeff(n, n + 1) == ExactInt(0));
    for (long n = 0; n <= 20; ++n)
        for (long m = 0; m <= n; ++m) CHECK(trinomial_coeff(n, m) == trinomial_coeff(n, -m));
}

TEST_CASE("column 1 recovers Motzkin numbers") {
    for (long n = 0; n <= 200; ++n)
        CHECK(trinomial_coeff(n + 1, 1) == ExactInt(n + 1) * motzkin(n));
}

TEST_CASE("associated ctc") {
    CHECK(assoc_ctc(2, 2) == ExactRat(5, 6));
    for (long p = 0; p <= 6; ++p)
        CHECK(assoc_ctc(0, p) == ExactRat(ExactInt(1), factorial(p)));
    for (long n = 0; n <= 60; ++n) CHECK(assoc_ctc(n, 1) == ExactRat(motzkin(n)));
    for (long n = 0; n <= 60; ++n) CHECK(assoc_ctc(n, 0) == ExactRat(ctc(n)));
}

TEST_CASE("integrality of the p = 0 and p = 1 families") {
    for (long n = 0; n <= 500; ++n) {
        CHECK(assoc_ctc(n, 0).is_integer());
        CHECK(assoc_ctc(n, 1).is_integer());
    }
    // the displayed third column: 6 c^2 is integral on the reference rows
    for (long n = 0; n <= 10; ++n) CHECK((ExactRat(6) * assoc_ctc(n, 2)).is_integer());
}

TEST_CASE("m_order_ctc") {
    for (long n = 0; n <= 40; ++n)
        for (long p = 0; p <= 3; ++p) CHECK(m_order_ctc(n, 2, p) == assoc_ctc(n, p));
    CHECK(m_order_ctc(3, 3, 0) == ExactRat(7));
    CHECK(m_order_ctc(5, 3, 0) == ExactRat(61));
    CHECK_THROWS_AS(m_order_ctc(3, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(m_order_ctc(3, 2, -1), std::invalid_argument);
}

TEST_CASE("generalized_d") {
    for (long n = 0; n <= 40; ++n) CHECK(generalized_d(n, 2) == ctc(n));
    CHECK(generalized_d(3, 3) == ExactInt(4));
    for (long m = 2; m <= 6; ++m) CHECK(generalized_d(0, m) == ExactInt(1));
    for (long m = 2; m <= 5; ++m)
        for (long n = 0; n <= 40; ++n) CHECK(generalized_d(n, m) == central_coeff(n, m));
}

TEST_CASE("oracle triangle for the central coefficients") {
    for (long n = 0; n <= 60; ++n) {
        ExactInt direct = ctc(n);
        CHECK(direct == central_coeff(n, 2));
        CHECK(direct == laurent_trinomial_coeff(n, 0));
    }
}

TEST_CASE("path-counting oracle matches the Motzkin sum") {
    CHECK(motzkin_path_oracle(0) == ExactInt(1));
    CHECK(motzkin_path_oracle(3) == ExactInt(4));
    CHECK(motzkin_path_oracle(6) == ExactInt(51));
    for (long n = 0; n <= 30; ++n) CHECK(motzkin_path_oracle(n) == motzkin(n));
    CHECK_THROWS_AS(motzkin_path_oracle(31), std::invalid_argument);
    CHECK(motzkin_path_oracle(35, 40) == motzkin(35));
}

TEST_CASE("stream examples") {
    auto c = stream(SeqSpec::ctc(), 5);
    REQUIRE(c.size() == 5);
    CHECK(c[0] == ExactRat(1));
    CHECK(c[1] == ExactRat(1));
    CHECK(c[2] == ExactRat(3));
    CHECK(c[3] == ExactRat(7));
    CHECK(c[4] == ExactRat(19));

    auto m = stream(SeqSpec::motzkin(), 5);
    CHECK(m[4] == ExactRat(9));

    auto a2 = stream(SeqSpec::assoc_ctc(2), 3);
    CHECK(a2[0] == ExactRat(1, 2));
    CHECK(a2[1] == ExactRat(1, 2));
    CHECK(a2[2] == ExactRat(5, 6));

    CHECK_THROWS_AS(stream(SeqSpec::ctc(), 0), std::invalid_argument);
}

namespace {

void check_stream_matches_direct(const SeqSpec& spec, long limit) {
    auto terms = stream(spec, limit);
    REQUIRE(terms.size() == static_cast<std::size_t>(limit));
    for (long n = 0; n < limit; ++n) {
        if (!(terms[static_cast<std::size_t>(n)] == seq_value(spec, n))) {
            FAIL(spec.describe() << " diverges from the direct sum at n=" << n << ": stream "
                                 << terms[static_cast<std::size_t>(n)].str() << ", direct "
                                 << seq_value(spec, n).str());
        }
    }
}

}  // namespace

TEST_CASE("stream agrees with direct sums to 500 for every family") {
    check_stream_matches_direct(SeqSpec::ctc(), 501);
    check_stream_matches_direct(SeqSpec::motzkin(), 501);
    check_stream_matches_direct(SeqSpec::assoc_ctc(2), 501);
    check_stream_matches_direct(SeqSpec::m_order_ctc(3, 1), 501);
    check_stream_matches_direct(SeqSpec::generalized_d(3), 501);
    check_stream_matches_direct(SeqSpec::trinomial_col(2), 501);
}

TEST_CASE("stream agrees with direct sums across parameter grids") {
    for (long p : {0L, 1L, 3L}) check_stream_matches_direct(SeqSpec::assoc_ctc(p), 151);
    for (long m = 2; m <= 5; ++m)
        for (long p = 0; p <= 2; ++p)
            check_stream_matches_direct(SeqSpec::m_order_ctc(m, p), 151);
    for (long m = 2; m <= 5; ++m) check_stream_matches_direct(SeqSpec::generalized_d(m), 151);
    for (long col : {0L, 1L, 5L, -3L}) check_stream_matches_direct(SeqSpec::trinomial_col(col), 151);
}

TEST_CASE("growth sanity") {
    auto c = stream(SeqSpec::ctc(), 502);
    auto m = stream(SeqSpec::motzkin(), 502);
    for (long n = 1; n <= 500; ++n) {
        CHECK(c[static_cast<std::size_t>(n + 1)] > c[static_cast<std::size_t>(n)]);
        CHECK(m[static_cast<std::size_t>(n + 1)] >= m[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("SeqSpec validation and description") {
    CHECK_THROWS_AS(SeqSpec::assoc_ctc(-1), std::invalid_argument);
    CHECK_THROWS_AS(SeqSpec::m_order_ctc(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(SeqSpec::generalized_d(0), std::invalid_argument);
    CHECK(SeqSpec::m_order_ctc(3, 1).describe() == "M_ORDER_CTC(m=3,p=1)");
    CHECK(SeqSpec::ctc().integer_valued());
    CHECK(SeqSpec::assoc_ctc(1).integer_valued());
    CHECK_FALSE(SeqSpec::assoc_ctc(2).integer_valued());
    CHECK(family_from_name("MOTZKIN") == SeqFamily::MOTZKIN);
    CHECK_FALSE(family_from_name("motzkin").has_value());
}

TEST_CASE("table1 helpers agree") {
    auto expected = table1_expected();
    auto computed = table1_computed();
    REQUIRE(expected.size() == 11);
    REQUIRE(computed.size() == 11);
    for (std::size_t i = 0; i < 11; ++i) {
        CHECK(computed[i].c0 == expected[i].c0);
        CHECK(computed[i].c1 == expected[i].c1);
        CHECK(computed[i].six_c2 == expected[i].six_c2);
    }
}
