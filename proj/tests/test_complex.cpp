#include "doctest.h"
#include "polebound/complex.hpp"

using namespace polebound;

TEST_CASE("format_double is shortest round-trip") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-1.1) == "-1.1");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("parse_complex accepts the a+bi family") {
    CHECK(parse_complex("0") == Complex{0, 0});
    CHECK(parse_complex("2") == Complex{2, 0});
    CHECK(parse_complex("-1.1") == Complex{-1.1, 0});
    CHECK(parse_complex("i") == Complex{0, 1});
    CHECK(parse_complex("-i") == Complex{0, -1});
    CHECK(parse_complex("3i") == Complex{0, 3});
    CHECK(parse_complex("2+3i") == Complex{2, 3});
    CHECK(parse_complex("1.5-0.5i") == Complex{1.5, -0.5});
    CHECK(parse_complex("1e-3+2e4i") == Complex{1e-3, 2e4});
    CHECK(parse_complex(" 2 + 3i ") == Complex{2, 3});
}

TEST_CASE("parse_complex rejects malformed input") {
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("2+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("2+3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("ii"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("2i+3i"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
}

TEST_CASE("format/parse complex round trip") {
    const Complex values[] = {{0, 0}, {2, 3}, {-1.5, 0.25}, {0, -1}, {1e-8, -2e8}, {0.1, 0}};
    for (Complex z : values) CHECK(parse_complex(format_complex(z)) == z);
}
