#include "wittleib/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wittleib;

TEST_CASE("parse_scalar handles the grammar") {
    CHECK(parse_scalar("3/4") == Scalar(Rational(3, 4)));
    CHECK(parse_scalar("-2") == Scalar(Rational(-2)));
    CHECK(parse_scalar("1/2+3/4i") == Scalar(Rational(1, 2), Rational(3, 4)));
    CHECK(parse_scalar("1/2-3/4i") == Scalar(Rational(1, 2), Rational(-3, 4)));
    CHECK(parse_scalar("3i") == Scalar(Rational(0), Rational(3)));
    CHECK(parse_scalar("-5/7i") == Scalar(Rational(0), Rational(-5, 7)));
    CHECK(parse_scalar("4/2") == Scalar(Rational(2)));

    CHECK_THROWS_AS(parse_scalar(""), parse_error);
    CHECK_THROWS_AS(parse_scalar("1/0"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1+"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1+2"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1+2i3"), parse_error);
    CHECK_THROWS_AS(parse_scalar("i"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1+-2i"), parse_error);
    CHECK_THROWS_AS(parse_scalar("x"), parse_error);
}

TEST_CASE("is_integer") {
    CHECK(parse_scalar("4/2").is_integer());
    CHECK_FALSE(parse_scalar("1/2").is_integer());
    CHECK(parse_scalar("3").is_integer());
    CHECK_FALSE(parse_scalar("3+1i").is_integer());
    CHECK(Scalar(Rational(3), Rational(0)).is_integer());
}

namespace {

Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> flip(0, 3);
    for (;;) {
        Scalar s(Rational(num(rng), den(rng)),
                 flip(rng) == 0 ? Rational(num(rng), den(rng)) : Rational(0));
        if (!nonzero || !s.is_zero())
            return s;
    }
}

}  // namespace

TEST_CASE("field axioms hold exactly on random scalars") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 400; ++iter) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar(0) == a);
        CHECK(a * Scalar(1) == a);
        CHECK((a - a).is_zero());
        Scalar nz = random_scalar(rng, /*nonzero=*/true);
        CHECK(nz * (a / nz) == a);
        CHECK((nz / nz) == Scalar(1));
    }
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), domain_error);
}

TEST_CASE("parse/print round-trips on random canonical scalars") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 500; ++iter) {
        Scalar s = random_scalar(rng);
        CHECK(parse_scalar(to_string(s)) == s);
    }
    // canonical forms with big components
    Scalar big(Rational(Int("123456789123456789123456789"), Int("1000000007")),
               Rational(-4, 129));
    CHECK(parse_scalar(to_string(big)) == big);
}

TEST_CASE("integer_value and domain errors") {
    CHECK(parse_scalar("6/3").integer_value() == 2);
    CHECK_THROWS_AS(parse_scalar("1/3").integer_value(), domain_error);
    CHECK_THROWS_AS(parse_scalar("2i").integer_value(), domain_error);
}
