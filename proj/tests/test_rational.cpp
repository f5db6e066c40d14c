#include <doctest.h>

#include "octa/errors.hpp"
#include "octa/rational.hpp"

using namespace octa;

TEST_SUITE("rational") {
    TEST_CASE("parse and format round-trip") {
        CHECK(format_rational(parse_rational("3/4")) == "3/4");
        CHECK(format_rational(parse_rational("-3/4")) == "-3/4");
        CHECK(format_rational(parse_rational("7")) == "7");
        CHECK(format_rational(parse_rational("-7")) == "-7");
        CHECK(format_rational(parse_rational("0")) == "0");
        CHECK(format_rational(parse_rational("6/4")) == "3/2");    // reduced
        CHECK(format_rational(parse_rational("-6/4")) == "-3/2");  // sign on numerator
        CHECK(format_rational(parse_rational("12/3")) == "4");     // integral collapses
    }

    TEST_CASE("rejects malformed input") {
        CHECK_THROWS_AS(parse_rational("1/0"), input_error);
        CHECK_THROWS_AS(parse_rational(""), input_error);
        CHECK_THROWS_AS(parse_rational("a/2"), input_error);
        CHECK_THROWS_AS(parse_rational("1/-2"), input_error);
        CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
        CHECK_THROWS_AS(parse_rational("1.5"), input_error);
        CHECK_THROWS_AS(parse_rational(" 1"), input_error);
    }

    TEST_CASE("error messages carry the caller's location") {
        try {
            parse_rational("1/0", "colours[2][0][1]");
            FAIL("expected input_error");
        } catch (const input_error& err) {
            CHECK(std::string(err.what()).find("colours[2][0][1]") != std::string::npos);
        }
    }

    TEST_CASE("arithmetic stays canonical") {
        const Rational a = parse_rational("1/6");
        const Rational b = parse_rational("1/3");
        CHECK(format_rational(a + b) == "1/2");
        CHECK(format_rational(a - b) == "-1/6");
        CHECK(format_rational(a * b) == "1/18");
        CHECK(format_rational(a / b) == "1/2");
        CHECK(Rational(a + b).get_den() > 0);
        CHECK(sign(a - b) == -1);
        CHECK(sign(b - a) == 1);
        CHECK(sign(a - a) == 0);
    }

    TEST_CASE("big values survive the string round-trip") {
        const std::string big = "123456789012345678901234567890123456789/987654321098765432109";
        const Rational r = parse_rational(big);
        CHECK(parse_rational(format_rational(r)) == r);
    }
}
