#include <doctest.h>

#include "trinom/bfile.hpp"
#include "trinom/sequences.hpp"

using namespace trinom;

TEST_CASE("parse a commented file") {
    auto entries = parse_bfile("# comment\n0 1\n1 1\n2 3");
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].index == 0);
    CHECK(entries[0].value == ExactInt(1));
    CHECK(entries[2].index == 2);
    CHECK(entries[2].value == ExactInt(3));
}

TEST_CASE("empty input parses to an empty list") {
    CHECK(parse_bfile("").empty());
    CHECK(parse_bfile("\n\n  \n# only comments\n").empty());
}

TEST_CASE("duplicate index is an error with the right line number") {
    try {
        parse_bfile("1 1\n1 2");
        FAIL("expected BFileError");
    } catch (const BFileError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("decreasing index is an error") {
    CHECK_THROWS_AS(parse_bfile("0 1\n5 2\n3 9"), BFileError);
}

TEST_CASE("malformed tokens report their line") {
    try {
        parse_bfile("# A002426\n0 1\n1 1\n3 x7\n");
        FAIL("expected BFileError");
    } catch (const BFileError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_bfile("0 1 9"), BFileError);
    CHECK_THROWS_AS(parse_bfile("zero 1"), BFileError);
    CHECK_THROWS_AS(parse_bfile("7"), BFileError);
}

TEST_CASE("crlf and surrounding whitespace are tolerated") {
    auto entries = parse_bfile("  0   1 \r\n\t1 2\r\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[1].value == ExactInt(2));
}

TEST_CASE("render/parse round trip with huge values") {
    std::vector<BFileEntry> entries;
    for (long n = 0; n <= 40; ++n) entries.push_back({n, factorial(20 + n) * ctc(n)});
    entries.push_back({100, -factorial(60)});
    auto back = parse_bfile(render_bfile(entries));
    REQUIRE(back.size() == entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(back[i].index == entries[i].index);
        CHECK(back[i].value == entries[i].value);
    }
}
