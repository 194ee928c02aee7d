#pragma once

// Arbitrary-precision integers and rationals (GMP-backed) plus the small set
// of exact helpers the certification layers need: square-root enclosures,
// best rational approximation under a denominator bound, and the simplest
// rational inside an open interval.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ycert {

using Int = mpz_class;
using Rational = mpq_class;  // canonical: gcd(|num|,den)=1, den >= 1, zero is 0/1

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline int sign_of(const Rational& r) { return sgn(r); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Int floor_rat(const Rational& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rational& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
    Rational r = 1;
    Rational b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Exact factorial and double factorial, used by the Beta/Gamma closed forms.
inline Int factorial(unsigned long m) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

inline Int double_factorial(long m) {
    // (-1)!! = 1 by convention
    if (m <= 0) return 1;
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

// Enclosure lo <= sqrt(r) <= hi with hi - lo <= 1/(den(r)*scale); exact when
// r is a perfect square of a rational on the chosen grid.
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& r, const Int& scale) {
    if (sgn(r) < 0) throw std::domain_error("sqrt_bounds of negative rational");
    if (sgn(r) == 0) return {Rational(0), Rational(0)};
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    Int t = p * q * scale * scale;
    Int s, rem;
    mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t());
    Rational lo(s, q * scale);
    lo.canonicalize();
    if (rem == 0) return {lo, lo};
    Rational hi(s + 1, q * scale);
    hi.canonicalize();
    return {lo, hi};
}

// Largest grid rational <= sqrt(r) on denominator grid den(r)*scale.
inline Rational sqrt_lower_bound(const Rational& r, const Int& scale) {
    return sqrt_bounds(r, scale).first;
}

// Best rational approximation to x among all rationals with denominator
// <= max_den (continued-fraction convergents and semiconvergents).
inline Rational best_approx_max_den(const Rational& x, const Int& max_den) {
    if (max_den < 1) throw std::domain_error("best_approx_max_den: bound < 1");
    if (x.get_den() <= max_den) return x;
    // Walk the continued fraction keeping convergents p/q.
    Int p0 = 1, q0 = 0;  // h_{-1}
    Int p1, q1;          // h_0 = floor(x)
    Rational rest = x;
    Int a = floor_rat(rest);
    p1 = a;
    q1 = 1;
    rest -= Rational(a);
    while (sgn(rest) != 0) {
        rest = 1 / rest;
        a = floor_rat(rest);
        rest -= Rational(a);
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        if (q2 > max_den) {
            // Best semiconvergent: largest t with q0 + t*q1 <= max_den.
            Int t = (max_den - q0) / q1;
            Rational semi(p0 + t * p1, q0 + t * q1);
            semi.canonicalize();
            Rational conv(p1, q1);
            conv.canonicalize();
            return abs(x - semi) < abs(x - conv) ? semi : conv;
        }
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
    }
    Rational conv(p1, q1);
    conv.canonicalize();
    return conv;
}

namespace detail {

// Simplest rational in the open interval (a, b) for 0 <= a < b; b absent
// means +infinity.
inline Rational simplest_nonneg(const Rational& a, const std::optional<Rational>& b) {
    Int fl = floor_rat(a);
    Rational cand(fl + 1);
    if (!b || cand < *b) return cand;
    // Both endpoints in [fl, fl+1): recurse on reciprocals of the fractional parts.
    Rational fa = a - Rational(fl);
    Rational fb = *b - Rational(fl);
    std::optional<Rational> inner_hi;
    if (sgn(fa) != 0) inner_hi = 1 / fa;
    Rational inner = simplest_nonneg(1 / fb, inner_hi);
    return Rational(fl) + 1 / inner;
}

}  // namespace detail

// Simplest rational (smallest denominator, then smallest |numerator|)
// strictly inside (a, b).
inline Rational simplest_in_open(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::domain_error("simplest_in_open: empty interval");
    if (sgn(a) < 0 && sgn(b) > 0) return Rational(0);
    if (sgn(b) <= 0) return -detail::simplest_nonneg(-b, -a);
    if (sgn(a) == 0) {
        // (0, b): the reciprocal trick with an unbounded upper side.
        Rational inner = detail::simplest_nonneg(1 / b, std::nullopt);
        return 1 / inner;
    }
    return detail::simplest_nonneg(a, b);
}

}  // namespace ycert
