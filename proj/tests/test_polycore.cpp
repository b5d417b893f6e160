#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "vallab/newton.hpp"
#include "vallab/parse.hpp"
#include "vallab/resultant.hpp"

using namespace vallab;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

Poly random_poly(std::mt19937& rng, int max_deg, bool nonzero = true) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    for (;;) {
        int d = deg(rng);
        std::vector<Rational> c(static_cast<size_t>(d) + 1);
        for (auto& x : c) x = Rational(num(rng), den(rng));
        Poly p{std::move(c)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("polynomial parsing and printing round-trip") {
    CHECK(P("X^2 - 2").coeff(0) == Rational(-2));
    CHECK(P("3/4*X^3 + X - 1/2") == P("3/4X^3+X-1/2"));
    CHECK(P("x^2-2") == P("X^2 - 2"));
    CHECK(P("0").is_zero());
    CHECK(P("-X^2 + 2").leading() == Rational(-1));
    CHECK_THROWS_AS(P(""), error);
    CHECK_THROWS_AS(P("X^2 + + 1"), error);
    CHECK_THROWS_AS(P("2*"), error);

    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, 6, false);
        CHECK(parse_poly(p.str()) == p);
    }
}

TEST_CASE("basic arithmetic") {
    CHECK(P("X+1") * P("X-1") == P("X^2-1"));
    auto [q, r] = P("X^3").divrem(P("X^2"));
    CHECK(q == P("X"));
    CHECK(r.is_zero());
    CHECK(gcd(P("X^2-1"), P("X-1")) == P("X-1"));
    CHECK(gcd(P("X^2+1"), P("X-1")) == P("1"));
    CHECK_THROWS_AS(P("X").divrem(Poly()), error);
    CHECK(P("X^2-2").shift(Rational(1)) == P("X^2+2X-1"));
    CHECK(P("X^2+3X").order_at_zero() == 1);
    CHECK(P("X^3-2X+1")(Rational(2)) == Rational(5));
}

TEST_CASE("scalar resultants") {
    CHECK(resultant(P("X^2-2"), P("X")) == Rational(-2));
    CHECK(resultant(P("X^2-2"), P("X^2-18")) == Rational(256));
    CHECK(resultant(P("X-1"), P("X^2-1")) == Rational(0));
    // Degenerate degrees.
    CHECK(resultant(P("3"), P("X^2+1")) == Rational(9));
    CHECK(resultant(P("X^2+1"), P("3")) == Rational(9));
}

TEST_CASE("resultant multiplicativity on random triples") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 120; ++i) {
        Poly a = random_poly(rng, 3), b = random_poly(rng, 2), c = random_poly(rng, 2);
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("difference polynomial via bivariate elimination") {
    CHECK(taylor_shift_resultant(P("X-1"), P("X-1")) == P("X"));
    CHECK(taylor_shift_resultant(P("X^2-2"), P("X^2-18")) == P("X^4 - 40X^2 + 256"));
    CHECK(taylor_shift_resultant(P("X^2-2"), P("X")) == P("X^2-2"));
}

TEST_CASE("difference polynomial against direct expansion on rational roots") {
    // p = (X-1)(X-3), q = (X-2)(X+5): root differences computed directly.
    Poly p = P("X-1") * P("X-3");
    Poly q = P("X-2") * P("X+5");
    Poly expect(Rational(1));
    for (long a : {1, 3})
        for (long b : {-5, 2}) expect *= Poly({Rational(a - b), Rational(1)});
    // expect(X) = prod (X - (b - a))
    Poly direct(Rational(1));
    for (long a : {1, 3})
        for (long b : {-5, 2}) direct *= Poly({Rational(-(b - a)), Rational(1)});
    CHECK(taylor_shift_resultant(p, q) == direct);
    (void)expect;
}

TEST_CASE("Newton polygons read off root valuations") {
    auto np = NewtonPolygon::of(P("X^2-2"), Integer(2));
    REQUIRE(np.segments().size() == 1);
    CHECK(np.segments()[0].slope == Rational(-1, 2));
    CHECK(np.segments()[0].length == 2);

    auto np2 = NewtonPolygon::of(P("X^4 - 40X^2 + 256"), Integer(2));
    auto rv = np2.root_valuations();
    REQUIRE(rv.size() == 2);
    CHECK(rv[0] == std::make_pair(Rational(3, 2), 2L));
    CHECK(rv[1] == std::make_pair(Rational(5, 2), 2L));

    auto np3 = NewtonPolygon::of(P("2X + 1"), Integer(2));
    REQUIRE(np3.segments().size() == 1);
    CHECK(np3.segments()[0].slope == Rational(1));
    CHECK(np3.root_valuations()[0].first == Rational(-1));

    auto np4 = NewtonPolygon::of(P("X^3 + 2X^2"), Integer(2));
    CHECK(np4.order_at_zero() == 2);
    long total = 0;
    for (const auto& s : np4.segments()) total += s.length;
    CHECK(total == P("X^3 + 2X^2").degree() - np4.order_at_zero());
}

TEST_CASE("polygon slope multiset matches direct vp for split polynomials") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    const Integer primes[] = {Integer(2), Integer(3), Integer(5)};
    for (int iter = 0; iter < 150; ++iter) {
        std::uniform_int_distribution<int> count(1, 5);
        int n = count(rng);
        Poly f(Rational(1));
        std::vector<Rational> roots;
        for (int j = 0; j < n; ++j) {
            Rational r(num(rng), den(rng));
            roots.push_back(r);
            f *= Poly({-r, Rational(1)});
        }
        for (const auto& p : primes) {
            std::map<Rational, long> expected;
            long zeros = 0;
            for (const auto& r : roots) {
                if (r.is_zero())
                    ++zeros;
                else
                    expected[vp(r, p).finite()]++;
            }
            auto np = NewtonPolygon::of(f, p);
            CHECK(np.order_at_zero() == zeros);
            std::map<Rational, long> got;
            for (const auto& [v, m] : np.root_valuations()) got[v] += m;
            CHECK(got == expected);
        }
    }
}

TEST_CASE("self-difference polynomial is divisible by X^deg exactly") {
    for (const char* s : {"X^2-2", "X^2+X+1", "X^3-2", "X^3 - X - 1"}) {
        Poly p = P(s);
        Poly r = taylor_shift_resultant(p, p);
        long n = p.degree();
        CHECK(r.order_at_zero() == n);
        Poly q = r.div_exact(Poly::monomial(n, Rational(1)));
        CHECK(q.degree() == n * (n - 1));
    }
    // Quotient polygon encodes intra-root distances: X^2-2 at p=2 gives v(2*sqrt(2)) = 3/2.
    Poly q = taylor_shift_resultant(P("X^2-2"), P("X^2-2")).div_exact(P("X^2"));
    auto rv = NewtonPolygon::of(q, Integer(2)).root_valuations();
    REQUIRE(rv.size() == 1);
    CHECK(rv[0] == std::make_pair(Rational(3, 2), 2L));
}
