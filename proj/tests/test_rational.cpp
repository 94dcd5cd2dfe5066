#include <doctest.h>

#include <sstream>

#include "maxvec/errors.hpp"
#include "maxvec/rational.hpp"

using maxvec::Rational;

TEST_CASE("decimal strings parse exactly") {
    CHECK(Rational::from_string("2.5") == Rational(5, 2));
    CHECK(Rational::from_string("0.1") == Rational(1, 10));
    CHECK(Rational::from_string("-0.25") == Rational(-1, 4));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("+3.50") == Rational(7, 2));
    CHECK(Rational::from_string("5/2") == Rational(5, 2));
    CHECK(Rational::from_string("-6/4") == Rational(-3, 2));
    CHECK(Rational::from_string("0.000") == Rational(0));
}

TEST_CASE("malformed numbers are rejected") {
    CHECK_THROWS_AS(Rational::from_string(""), maxvec::ParseError);
    CHECK_THROWS_AS(Rational::from_string("1."), maxvec::ParseError);
    CHECK_THROWS_AS(Rational::from_string("."), maxvec::ParseError);
    CHECK_THROWS_AS(Rational::from_string("1.2.3"), maxvec::ParseError);
    CHECK_THROWS_AS(Rational::from_string("abc"), maxvec::ParseError);
    CHECK_THROWS_AS(Rational::from_string("1e3"), maxvec::ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), maxvec::ParseError);
    CHECK_THROWS_AS(Rational(1, 0), maxvec::DomainError);
}

TEST_CASE("rendering picks the shortest exact decimal") {
    CHECK(Rational(5, 2).to_string() == "2.5");
    CHECK(Rational(1, 8).to_string() == "0.125");
    CHECK(Rational(-1, 10).to_string() == "-0.1");
    CHECK(Rational(42).to_string() == "42");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(2, 5).to_string() == "0.4");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(-7, 12).to_string() == "-7/12");
}

TEST_CASE("render and parse round-trip") {
    const long nums[] = {0, 1, -1, 7, -40, 123456, -3};
    const long dens[] = {1, 2, 3, 8, 10, 160, 7};
    for (long n : nums) {
        for (long d : dens) {
            const Rational r(n, d);
            CHECK(Rational::from_string(r.to_string()) == r);
        }
    }
}

TEST_CASE("arithmetic and order behave like the rationals") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a >= a);
    CHECK(midpoint(Rational(1), Rational(2)) == Rational(3, 2));
    CHECK_THROWS_AS(a / Rational(0), maxvec::DomainError);

    std::ostringstream os;
    os << Rational(-5, 4);
    CHECK(os.str() == "-1.25");
}
