#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vallab/valvalue.hpp"

using namespace vallab;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-120, 120);
    std::uniform_int_distribution<long> den(1, 60);
    return Rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational::parse("-10/4").str() == "-5/2");
    CHECK(Rational::parse("42").str() == "42");
    CHECK_THROWS_AS(Rational::parse("1/0"), error);
    CHECK_THROWS_AS(Rational::parse("a"), error);
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(1, 2).pow(-2) == Rational(4));
}

TEST_CASE("vp on integers and rationals") {
    CHECK(vp(Rational(12), Integer(2)) == ValValue(2)); // 12 = 4*3
    CHECK(vp(Rational(0), Integer(5)).is_infinite());   // v(0) = inf
    CHECK(vp(Rational(9, 10), Integer(3)) == ValValue(2));
    CHECK(vp(Rational(9, 10), Integer(5)) == ValValue(-1));
    CHECK(vp(Rational(-8), Integer(2)) == ValValue(3)); // sign ignored
    CHECK_THROWS_AS(vp(Rational(1), Integer(4)), error);
    CHECK_THROWS_AS(vp(Rational(1), Integer(1)), error);
}

TEST_CASE("abs_scale renders p^(-v) symbolically") {
    CHECK(abs_scale(ValValue(Rational(5, 2)), Integer(2)).str() == "2^(-5/2)");
    CHECK(abs_scale(ValValue::infinity(), Integer(3)).str() == "0");
    CHECK(abs_scale(ValValue(0), Integer(7)).str() == "1");
    CHECK(abs_scale(ValValue(-1), Integer(2)).str() == "2^(1)");
}

TEST_CASE("ValValue arithmetic and total order") {
    ValValue inf = ValValue::infinity();
    CHECK(inf + ValValue(3) == inf);
    CHECK(inf > ValValue(Rational(1000000)));
    CHECK(min(inf, ValValue(2)) == ValValue(2));
    CHECK(ValValue(Rational(1, 2)) < ValValue(1));
    CHECK_THROWS_AS(ValValue(1) - inf, error);
    CHECK(inf - ValValue(5) == inf);
    CHECK(inf == ValValue::infinity());
}

TEST_CASE("vp is a valuation: multiplicative and ultrametric") {
    std::mt19937 rng(20160511);
    const Integer primes[] = {Integer(2), Integer(3), Integer(5), Integer(7)};
    for (int iter = 0; iter < 400; ++iter) {
        Rational x = random_rational(rng), y = random_rational(rng);
        for (const auto& p : primes) {
            CHECK(vp(x * y, p) == vp(x, p) + vp(y, p));
            CHECK(vp(x + y, p) >= min(vp(x, p), vp(y, p)));
            CHECK(vp(x, p).is_finite() == !x.is_zero());
        }
    }
}

TEST_CASE("ValValue trichotomy on random pairs") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        ValValue a = (iter % 17 == 0) ? ValValue::infinity() : ValValue(random_rational(rng));
        ValValue b = (iter % 23 == 0) ? ValValue::infinity() : ValValue(random_rational(rng));
        int rels = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (a > b ? 1 : 0);
        CHECK(rels == 1);
    }
}
