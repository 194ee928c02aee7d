#include "ycert/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ycert;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    // numerators/denominators well past 64 bits
    std::uniform_int_distribution<long> digits(1, 30);
    auto big = [&](bool nonzero) {
        std::string s;
        long len = digits(rng);
        for (long i = 0; i < len; ++i) s += static_cast<char>('0' + rng() % 10);
        Int v(s);
        if (nonzero && v == 0) v = 1;
        if (rng() % 2) v = -v;
        return v;
    };
    Int num = big(false);
    Int den = abs(big(true));
    if (den == 0) den = 1;
    return rat(num, den);
}

}  // namespace

TEST_CASE("field axioms at random big magnitudes") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + 0 == a);
        REQUIRE(a * 1 == a);
        REQUIRE(a - a == 0);
        if (sgn(a) != 0) REQUIRE(a / a == 1);
    }
}

TEST_CASE("canonical form invariants") {
    Rational r = rat(6, -4);
    REQUIRE(r.get_den() > 0);
    REQUIRE(r == rat(-3, 2));
    REQUIRE(rat(0, 7).get_den() == 1);
    Rational big = rat_from_string("123456789012345678901234567890/618");
    Int g;
    mpz_gcd(g.get_mpz_t(), big.get_num().get_mpz_t(), big.get_den().get_mpz_t());
    REQUIRE(g == 1);
    REQUIRE_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "-3/2", "123456789012345678901234567890/7", "5/1408"}) {
        REQUIRE(rat_str(rat_from_string(s)) == s);
    }
    REQUIRE_THROWS_AS(rat_from_string("x/3"), std::invalid_argument);
}

TEST_CASE("sqrt enclosures") {
    std::mt19937_64 rng(7);
    Int scale("1000000000000");
    for (int i = 0; i < 50; ++i) {
        Rational r = abs(random_rational(rng));
        auto [lo, hi] = sqrt_bounds(r, scale);
        REQUIRE(lo * lo <= r);
        REQUIRE(hi * hi >= r);
        REQUIRE(lo <= hi);
    }
    auto [lo, hi] = sqrt_bounds(rat(9, 4), Int(10));
    REQUIRE(lo == rat(3, 2));
    REQUIRE(hi == rat(3, 2));  // perfect square detected exactly
}

TEST_CASE("best rational approximation under a denominator bound") {
    REQUIRE(best_approx_max_den(rat(5, 1408), Int(1000000)) == rat(5, 1408));
    Rational pi_ish = rat_from_string("3141592653589793/1000000000000000");
    Rational a = best_approx_max_den(pi_ish, Int(150));
    REQUIRE(a.get_den() <= 150);
    REQUIRE(abs(a - pi_ish) <= abs(rat(355, 113) - pi_ish));
    // brute-force optimality on a small bound
    Rational x = rat(47, 111);
    Rational best = best_approx_max_den(x, Int(20));
    for (long den = 1; den <= 20; ++den) {
        Int num = floor_rat(x * rat(den, 1));
        for (Int nn = num - 1; nn <= num + 2; ++nn)
            REQUIRE(abs(best - x) <= abs(rat(nn, Int(den)) - x));
    }
}

TEST_CASE("simplest rational in an open interval") {
    REQUIRE(simplest_in_open(rat(-1, 3), rat(1, 7)) == 0);
    REQUIRE(simplest_in_open(rat(1, 3), rat(1, 2)) == rat(2, 5));
    REQUIRE(simplest_in_open(rat(2), rat(4)) == rat(3));
    REQUIRE(simplest_in_open(rat(-4), rat(-2)) == rat(-3));
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        Rational a = random_rational(rng);
        Rational b = a + abs(random_rational(rng)) + rat(1, 1000000);
        Rational m = simplest_in_open(a, b);
        REQUIRE(a < m);
        REQUIRE(m < b);
    }
}
