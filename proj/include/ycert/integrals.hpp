#pragma once

// The radial integral family I_a^b = \int_0^inf t^b (1+t^2)^{-a} dt, its
// three exact recurrences, breadth-first reduction of one index to another
// with a rational multiplier, and unit-sphere volumes.
//
// Closed form at integer indices: I_a^b = Gamma((b+1)/2) Gamma((2a-b-1)/2)
// / (2 Gamma(a)), which is rational when b is odd and rational*pi when b is
// even. Divergent (2a-b-1 < 0) and logarithmic (2a-b-1 = 0) indices are
// distinct error values: the logarithmic boundary is reached deliberately by
// the n = 2*omega+6 expansion and must be detectable.

#include "ycert/piscaled.hpp"

#include <deque>
#include <map>
#include <optional>

namespace ycert {

struct IntegralIndex {
    long a = 1;
    long b = 0;
    auto operator<=>(const IntegralIndex&) const = default;
    std::string str() const { return "I_" + std::to_string(a) + "^" + std::to_string(b); }
};

inline bool convergent(IntegralIndex i) { return i.a >= 1 && i.b >= 0 && 2 * i.a - i.b - 1 > 0; }
inline bool logarithmic(IntegralIndex i) { return i.a >= 1 && i.b >= 0 && 2 * i.a - i.b - 1 == 0; }

struct DivergentIntegral : std::domain_error {
    explicit DivergentIntegral(IntegralIndex i)
        : std::domain_error((logarithmic(i) ? "logarithmic integral index " : "divergent integral index ") + i.str()),
          idx(i),
          log_case(logarithmic(i)) {}
    IntegralIndex idx;
    bool log_case;
};

inline PiScaled integral_exact(IntegralIndex i) {
    if (i.a < 1 || i.b < 0 || 2 * i.a - i.b - 1 <= 0) throw DivergentIntegral(i);
    if (i.b % 2 == 1) {
        // both Gamma arguments integral: (p-1)!(q-1)! / (2 (a-1)!)
        long p = (i.b + 1) / 2;
        long q = (2 * i.a - i.b - 1) / 2;
        return PiScaled(rat(factorial(static_cast<unsigned long>(p - 1)) * factorial(static_cast<unsigned long>(q - 1)),
                            2 * factorial(static_cast<unsigned long>(i.a - 1))),
                        0);
    }
    // both Gamma arguments half-integral: Gamma(m+1/2) = (2m-1)!!/2^m sqrt(pi)
    long mb = i.b / 2;                 // Gamma(b/2 + 1/2)
    long mq = (2 * i.a - i.b - 2) / 2; // Gamma((2a-b-1)/2) = Gamma(mq + 1/2)
    Int num = double_factorial(2 * mb - 1) * double_factorial(2 * mq - 1);
    Int den = factorial(static_cast<unsigned long>(i.a - 1)) * 2;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(mb + mq));
    return PiScaled(rat(num, den), 1);
}

struct RecurrenceFailure {
    IntegralIndex idx;
    int relation = 0;  // 1..3, as printed
    PiScaled lhs, rhs;
};

struct RecurrenceReport {
    long a_max = 0;
    size_t checked = 0;
    size_t skipped_divergent = 0;
    std::optional<RecurrenceFailure> first_failure;
    bool pass() const { return !first_failure.has_value(); }
};

// Checks, for all 2 <= a <= a_max and 2 <= b <= 2a-2:
//   (1) I_a^b = (b-1)/(2a-b-1) I_a^{b-2}
//   (2) I_a^b = (b-1)/(2a-2)   I_{a-1}^{b-2}
//   (3) I_a^b = (2a-b-3)/(2a-2) I_{a-1}^{b}
// skipping any relation whose other index fails to converge.
inline RecurrenceReport verify_recurrences(long a_max) {
    if (a_max < 3) throw std::domain_error("verify_recurrences: a_max must be >= 3");
    RecurrenceReport rep;
    rep.a_max = a_max;
    auto check = [&rep](IntegralIndex lhs_idx, int relation, const Rational& mult, IntegralIndex rhs_idx) {
        if (!convergent(rhs_idx)) {
            ++rep.skipped_divergent;
            return;
        }
        PiScaled lhs = integral_exact(lhs_idx);
        PiScaled rhs = mult * integral_exact(rhs_idx);
        ++rep.checked;
        if (lhs != rhs && !rep.first_failure)
            rep.first_failure = RecurrenceFailure{lhs_idx, relation, lhs, rhs};
    };
    for (long a = 2; a <= a_max; ++a) {
        for (long b = 2; b <= 2 * a - 2; ++b) {
            IntegralIndex idx{a, b};
            check(idx, 1, rat(b - 1, 2 * a - b - 1), {a, b - 2});
            check(idx, 2, rat(b - 1, 2 * a - 2), {a - 1, b - 2});
            check(idx, 3, rat(2 * a - b - 3, 2 * a - 2), {a - 1, b});
        }
    }
    return rep;
}

struct NoRationalRatio : std::domain_error {
    NoRationalRatio(IntegralIndex i, IntegralIndex base)
        : std::domain_error("no rational ratio between " + i.str() + " and " + base.str()) {}
};

// Exact rational r with I_idx = r * I_base, found by breadth-first
// composition of the three recurrences over the convergent lattice.
inline Rational reduce_to_base(IntegralIndex idx, IntegralIndex base) {
    if (!convergent(idx)) throw DivergentIntegral(idx);
    if (!convergent(base)) throw DivergentIntegral(base);
    if ((idx.b - base.b) % 2 != 0) throw NoRationalRatio(idx, base);
    if (idx == base) return Rational(1);

    const long a_hi = std::max(idx.a, base.a) + 1;
    const long b_hi = std::max(idx.b, base.b) + 2;

    std::map<IntegralIndex, Rational> mult;  // I_idx = mult[v] * I_v
    std::deque<IntegralIndex> queue;
    mult[idx] = Rational(1);
    queue.push_back(idx);

    auto push = [&](IntegralIndex v, const Rational& m) {
        if (v.a < 1 || v.a > a_hi || v.b < 0 || v.b > b_hi) return;
        if (!convergent(v)) return;
        if (mult.count(v)) return;
        mult[v] = m;
        queue.push_back(v);
    };

    while (!queue.empty()) {
        IntegralIndex u = queue.front();
        queue.pop_front();
        const Rational m = mult[u];
        if (u == base) return m;
        const long a = u.a, b = u.b;
        // (1) I_a^b = (b-1)/(2a-b-1) I_a^{b-2}, both directions
        if (b >= 2) push({a, b - 2}, m * rat(b - 1, 2 * a - b - 1));
        if (2 * a - b - 3 > 0) push({a, b + 2}, m * rat(2 * a - b - 3, b + 1));
        // (2) I_a^b = (b-1)/(2a-2) I_{a-1}^{b-2}
        if (b >= 2 && a >= 2) push({a - 1, b - 2}, m * rat(b - 1, 2 * a - 2));
        push({a + 1, b + 2}, m * rat(2 * a, b + 1));
        // (3) I_a^b = (2a-b-3)/(2a-2) I_{a-1}^{b}
        if (a >= 2 && 2 * a - b - 3 > 0) push({a - 1, b}, m * rat(2 * a - b - 3, 2 * a - 2));
        push({a + 1, b}, m * rat(2 * a, 2 * a - b - 1));
    }
    throw std::domain_error("reduce_to_base: " + base.str() + " unreachable from " + idx.str());
}

// Volume of the unit sphere S^m: 2 pi^{(m+1)/2} / Gamma((m+1)/2), always a
// rational times pi^{ceil(m/2)}.
inline PiScaled sphere_volume(long m) {
    if (m < 1) throw std::domain_error("sphere_volume: dimension must be >= 1");
    if (m % 2 == 1) {
        long p = (m + 1) / 2;
        Rational q(2, factorial(static_cast<unsigned long>(p - 1)));
        q.canonicalize();
        return PiScaled(q, static_cast<unsigned>(p));
    }
    Int num = 1;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m / 2 + 1));
    return PiScaled(rat(num, double_factorial(m - 1)), static_cast<unsigned>(m / 2));
}

}  // namespace ycert
