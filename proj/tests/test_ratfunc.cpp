#include "ycert/partial_fractions.hpp"
#include "ycert/piscaled.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ycert;

namespace {

UniPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("normalization: common factors and monic denominator") {
    // (n^2-4)/(n-2) -> n+2
    RatFunc f(poly({-4, 0, 1}), poly({-2, 1}));
    REQUIRE(f.is_polynomial());
    REQUIRE(f.to_poly() == poly({2, 1}));
    // (2n+4)/2 -> n+2 over 1
    RatFunc g(poly({4, 2}), poly({2}));
    REQUIRE(g.den() == UniPoly(Rational(1)));
    REQUIRE(g.num() == poly({2, 1}));
    REQUIRE_THROWS_AS(RatFunc(poly({1}), UniPoly{}), std::domain_error);
}

TEST_CASE("canonical idempotence on random quotients") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coef(-9, 9);
    auto rnd = [&](int d) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
        return UniPoly(std::move(c));
    };
    for (int i = 0; i < 100; ++i) {
        UniPoly num = rnd(4), den = rnd(3);
        if (den.is_zero()) continue;
        RatFunc f(num, den);
        REQUIRE(sgn(f.den().lc()) > 0);
        REQUIRE(f.den().lc() == 1);
        REQUIRE(gcd_monic(f.num(), f.den()).degree() <= 0);
        RatFunc again(f.num(), f.den());
        REQUIRE(again == f);
        // evaluation agreement away from poles
        for (long x : {5L, 23L}) {
            if (sgn(den.eval(x)) == 0 || sgn(f.den().eval(x)) == 0) continue;
            REQUIRE(f.eval(x) == num.eval(x) / den.eval(x));
        }
    }
}

TEST_CASE("arithmetic") {
    RatFunc one_over(poly({-2, 1}));
    RatFunc f = RatFunc(poly({1})) / one_over;  // 1/(n-2)
    RatFunc g = RatFunc(poly({1})) / RatFunc(poly({-3, 1}));
    RatFunc sum = f + g;
    REQUIRE(sum.eval(5) == rat(1, 3) + rat(1, 2));
    REQUIRE((f - f).is_zero());
    REQUIRE_THROWS_AS(f.eval(2), std::domain_error);
}

TEST_CASE("partial fractions: synthetic division example") {
    // (n^3+1)/(n-2) = n^2+2n+4 + 9/(n-2)
    RatFunc f(poly({1, 0, 0, 1}), poly({-2, 1}));
    auto pf = partial_fractions(f, {poly({-2, 1})});
    REQUIRE(pf.poly == poly({4, 2, 1}));
    REQUIRE(pf.terms.size() == 1);
    REQUIRE(pf.terms[0].coeff == 9);
    REQUIRE(pf.terms[0].root == 2);
    REQUIRE(recombine(pf) == f);
}

TEST_CASE("partial fractions: two simple poles") {
    // 1/((n-2)(n-3)) = 1/(n-3) - 1/(n-2)
    RatFunc f(poly({1}), poly({-2, 1}) * poly({-3, 1}));
    auto pf = partial_fractions(f, {poly({-2, 1}), poly({-3, 1})});
    REQUIRE(pf.poly.is_zero());
    REQUIRE(pf.terms.size() == 2);
    for (const auto& t : pf.terms) {
        if (t.root == 2) REQUIRE(t.coeff == -1);
        if (t.root == 3) REQUIRE(t.coeff == 1);
    }
    REQUIRE(recombine(pf) == f);
}

TEST_CASE("partial fractions: errors") {
    RatFunc f(poly({1}), poly({-2, 1}) * poly({-3, 1}));
    REQUIRE_THROWS_AS(partial_fractions(f, {poly({-2, 1})}), std::domain_error);
    REQUIRE_THROWS_AS(partial_fractions(f, {poly({6, -5, 1})}), std::domain_error);  // nonlinear factor
}

TEST_CASE("partial fractions: randomized round trip with multiplicities") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coef(-12, 12);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<UniPoly> factors;
        UniPoly den(Rational(1));
        int nf = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < nf; ++i) {
            long root = coef(rng);
            int mult = 1 + static_cast<int>(rng() % 2);
            for (int m = 0; m < mult; ++m) {
                factors.push_back(poly({-root, 1}));
                den *= poly({-root, 1});
            }
        }
        std::vector<Rational> nc;
        int nd = static_cast<int>(rng() % (den.degree() + 3));
        for (int i = 0; i <= nd; ++i) nc.emplace_back(coef(rng));
        UniPoly num(std::move(nc));
        if (num.is_zero()) continue;
        RatFunc f(num, den);
        auto pf = partial_fractions(f, factors);
        REQUIRE(recombine(pf) == f);
    }
}

TEST_CASE("pi-scaled values forbid mixed powers") {
    PiScaled a(rat(1, 6), 0), b(rat(1, 32), 1);
    REQUIRE_THROWS_AS(a + b, PiMixError);
    REQUIRE(a + PiScaled() == a);
    REQUIRE((a * b).e() == 1);
    REQUIRE((a * b).q() == rat(1, 192));
    REQUIRE(b / a == PiScaled(rat(3, 16), 1));
    REQUIRE(PiScaled(rat(3, 16), 1) / b == 6);
    REQUIRE_THROWS_AS(b / a == PiScaled(rat(3, 16), 0), PiMixError);
    // zero carries no pi power
    PiScaled z = b - b;
    REQUIRE(z.is_zero());
    REQUIRE(z.e() == 0);
}
