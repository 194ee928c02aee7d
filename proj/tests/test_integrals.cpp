#include "ycert/integrals.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ycert;

TEST_CASE("closed-form values from the Gamma route") {
    REQUIRE(integral_exact({4, 5}) == PiScaled(rat(1, 6), 0));
    REQUIRE(integral_exact({4, 3}) == PiScaled(rat(1, 12), 0));
    REQUIRE(integral_exact({4, 2}) == PiScaled(rat(1, 32), 1));
    REQUIRE(integral_exact({1, 0}) == PiScaled(rat(1, 4), 1));  // arctan at infinity
}

TEST_CASE("divergent and logarithmic indices are distinct errors") {
    REQUIRE_THROWS_AS(integral_exact({3, 5}), DivergentIntegral);
    try {
        integral_exact({3, 5});
    } catch (const DivergentIntegral& e) {
        REQUIRE(e.log_case);
        REQUIRE(e.idx.a == 3);
    }
    try {
        integral_exact({3, 9});
    } catch (const DivergentIntegral& e) {
        REQUIRE_FALSE(e.log_case);
    }
    REQUIRE(logarithmic({4, 7}));
    REQUIRE_FALSE(convergent({4, 7}));
}

TEST_CASE("parity law: pi power 1 iff b even, lattice a <= 30") {
    for (long a = 1; a <= 30; ++a)
        for (long b = 0; b <= 2 * a - 2; ++b) {
            PiScaled v = integral_exact({a, b});
            REQUIRE(v.e() == (b % 2 == 0 ? 1u : 0u));
            REQUIRE(sgn(v.q()) > 0);
        }
}

TEST_CASE("printed recurrence example at a=4, b=5") {
    // (b-1)/(2a-b-1) I_4^3 = 2 * 1/12 = 1/6 = I_4^5
    PiScaled lhs = integral_exact({4, 5});
    PiScaled rhs = rat(4, 2) * integral_exact({4, 3});
    REQUIRE(lhs == rhs);
}

TEST_CASE("full recurrence sweep passes and records divergent skips") {
    RecurrenceReport rep = verify_recurrences(30);
    REQUIRE(rep.pass());
    REQUIRE(rep.checked > 1000);
    REQUIRE(rep.skipped_divergent > 0);  // third relation at 2a-b-3 <= 0
    REQUIRE_THROWS_AS(verify_recurrences(2), std::domain_error);
}

TEST_CASE("reduce_to_base") {
    REQUIRE(reduce_to_base({4, 5}, {4, 3}) == 2);           // first relation at a=4,b=5
    REQUIRE(reduce_to_base({4, 5}, {4, 5}) == 1);           // identity
    REQUIRE(reduce_to_base({10, 7}, {9, 5}) == rat(1, 3));  // second relation
    REQUIRE_THROWS_AS(reduce_to_base({4, 5}, {4, 2}), NoRationalRatio);
    REQUIRE_THROWS_AS(reduce_to_base({3, 5}, {3, 3}), DivergentIntegral);
}

TEST_CASE("reduce_to_base inverse property") {
    const std::vector<IntegralIndex> idx = {{4, 5}, {6, 3}, {9, 7}, {12, 11}, {20, 5}, {14, 13}};
    for (auto a : idx)
        for (auto b : idx)
            if ((a.b - b.b) % 2 == 0) REQUIRE(reduce_to_base(a, b) * reduce_to_base(b, a) == 1);
}

TEST_CASE("reduction consistency with closed forms") {
    for (auto [i, base] : std::vector<std::pair<IntegralIndex, IntegralIndex>>{
             {{12, 9}, {10, 5}}, {{8, 6}, {11, 10}}, {{30, 17}, {28, 13}}}) {
        Rational r = reduce_to_base(i, base);
        REQUIRE(integral_exact(i) == r * integral_exact(base));
    }
}

TEST_CASE("sphere volumes") {
    REQUIRE(sphere_volume(1) == PiScaled(rat(2), 1));       // 2 pi
    REQUIRE(sphere_volume(2) == PiScaled(rat(4), 1));       // 4 pi
    REQUIRE(sphere_volume(3) == PiScaled(rat(2), 2));       // 2 pi^2
    REQUIRE(sphere_volume(4) == PiScaled(rat(8, 3), 2));    // 8 pi^2 / 3
    REQUIRE(sphere_volume(5) == PiScaled(rat(1), 3));       // pi^3
    REQUIRE_THROWS_AS(sphere_volume(0), std::domain_error);
}
