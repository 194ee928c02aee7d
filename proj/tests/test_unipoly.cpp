#include "ycert/unipoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ycert;

namespace {

UniPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly(std::move(c));
}

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(rat(coef(rng), 1 + (rng() % 7)));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("derivative: power rule and term by term") {
    REQUIRE(poly({0, 0, 1}).derivative() == poly({0, 2}));  // (x^2)' = 2x
    // (2n^3+23n^2+18n+56)' = 6n^2+46n+18
    REQUIRE(poly({56, 18, 23, 2}).derivative() == poly({18, 46, 6}));
    REQUIRE(poly({7}).derivative().is_zero());
    REQUIRE(UniPoly{}.derivative().is_zero());
}

TEST_CASE("shift examples") {
    REQUIRE(poly({0, 0, 1}).shift(0) == poly({0, 0, 1}));          // identity shift
    REQUIRE(poly({-2, 5, -3}).shift(3) == poly({-14, -13, -3}));   // -3n^2+5n-2 at 3+t
    REQUIRE(poly({-2, 1}).shift(2) == poly({0, 1}));               // n-2 at 2+t = t
}

TEST_CASE("shift evaluation property") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        UniPoly p = random_poly(rng, 6);
        long n0 = static_cast<long>(rng() % 200) - 100;
        UniPoly q = p.shift(n0);
        for (long t : {-3L, 0L, 1L, 17L}) REQUIRE(q.eval(t) == p.eval(n0 + t));
    }
}

TEST_CASE("ring arithmetic and evaluation") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        Rational x = rat(static_cast<long>(rng() % 19) - 9, 1 + (rng() % 5));
        REQUIRE((a + b).eval(x) == a.eval(x) + b.eval(x));
        REQUIRE((a * b).eval(x) == a.eval(x) * b.eval(x));
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("division with remainder and gcd") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 50; ++i) {
        UniPoly a = random_poly(rng, 7);
        UniPoly b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        REQUIRE(a == q * b + r);
        REQUIRE((r.is_zero() || r.degree() < b.degree()));
    }
    UniPoly g = poly({-2, 1});  // n-2
    UniPoly a = g * poly({3, 0, 1});
    UniPoly b = g * poly({5, 1});
    REQUIRE(gcd_monic(a, b) == g);
}

TEST_CASE("compose") {
    UniPoly inner = poly({1, 2});  // 2n+1
    UniPoly outer = poly({0, 0, 1});
    REQUIRE(outer.compose(inner) == poly({1, 4, 4}));
    REQUIRE(outer.compose(inner).eval(5) == 121);
}

TEST_CASE("printing") {
    REQUIRE(poly({224, 72, 92, 8}).str() == "8*n^3 + 92*n^2 + 72*n + 224");
    REQUIRE(poly({-2, 1}).str() == "n - 2");
    REQUIRE(UniPoly{}.str() == "0");
}
