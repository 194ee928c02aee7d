#pragma once

// The coefficient families behind the test-function expansion, built
// symbolically in n at fixed integers (omega, k):
//
//   nu_k    = (omega-2k+2)(n+omega-2k)
//   d_k     = 4[(n-1)(n-2) nu_k - n(n-2)^2 + (omega+2)^2 (n^2+n+2)]
//   u_k     = ((n-3)/(4(n-2)) - ((n-1)^2+(n-1)(omega+2)^2)/(4(n-2)(nu_k-n+1))) nu_k
//   Delta_k = (n-2)^2 - d_k u_k / nu_k^2
//   c_k     = (n-2)^2 / d_k
//   P(x)    quadratic in x with UniPoly-in-n coefficients, U_k = P(nu_k)
//
// Every family is constructed from its defining expression; expanded forms
// are derived by the engine, never transcribed.

#include "ycert/partial_fractions.hpp"
#include "ycert/integrals.hpp"

#include <optional>

namespace ycert {

struct SpectralParams {
    int omega;
    int k;
    SpectralParams(int omega_, int k_) : omega(omega_), k(k_) {
        if (omega < 3) throw std::domain_error("SpectralParams: omega must be >= 3");
        if (k < 1 || k > omega / 2) throw std::domain_error("SpectralParams: k out of [1, omega/2]");
    }
    int alpha() const { return omega - 2 * k + 2; }  // nu_k = alpha (n + omega - 2k)
};

inline int k_max_worst_case(int omega) { return omega / 2; }

// Dimensional constraint omega + 2 <= (n-2)/2 of the expansion: the ray of
// admissible n starts here.
inline long ray_start(int omega) { return 2L * omega + 6; }

inline UniPoly nu(SpectralParams p) {
    const long a = p.alpha();
    return Rational(a) * (UniPoly::var() + UniPoly(Rational(p.omega - 2 * p.k)));
}

inline UniPoly d(SpectralParams p) {
    const UniPoly n = UniPoly::var();
    const Rational w2 = pow_rat(Rational(p.omega + 2), 2);
    UniPoly inner = (n - 1) * (n - 2) * nu(p) - n * (n - 2) * (n - 2) + w2 * (n * n + n + 2);
    return Rational(4) * inner;
}

inline RatFunc c_of(SpectralParams p) {
    const UniPoly n = UniPoly::var();
    return RatFunc((n - 2) * (n - 2), d(p));
}

inline RatFunc u(SpectralParams p) {
    const UniPoly n = UniPoly::var();
    const Rational w2 = pow_rat(Rational(p.omega + 2), 2);
    RatFunc nuk(nu(p));
    RatFunc first(n - 3, Rational(4) * (n - 2));
    RatFunc second((n - 1) * (n - 1) + w2 * (n - 1), Rational(4) * (n - 2) * (nu(p) - n + UniPoly(Rational(1))));
    return (first - second) * nuk;
}

inline RatFunc delta(SpectralParams p) {
    const UniPoly n = UniPoly::var();
    RatFunc nuk(nu(p));
    return RatFunc((n - 2) * (n - 2)) - RatFunc(d(p)) * u(p) / (nuk * nuk);
}

// Quadratic in the auxiliary symbol x with UniPoly coefficients in n.
struct PPoly {
    UniPoly c0, c1, c2;  // c2 x^2 + c1 x + c0

    UniPoly at(const UniPoly& x_value) const { return (c2 * x_value + c1) * x_value + c0; }

    PPoly derivative_in_x() const { return {c1, Rational(2) * c2, UniPoly{}}; }

    bool operator==(const PPoly& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
};

// P(x) = [(n-1)(n-2)x - n(n-2)^2 + (w+2)^2(n^2+n+2)]
//        * [(n-3)(x-n+1) - (n-1)^2 - (n-1)(w+2)^2]  -  (n-2)^3 (x^2-(n-1)x)
inline PPoly p_poly(int omega) {
    if (omega < 3) throw std::domain_error("p_poly: omega must be >= 3");
    const UniPoly n = UniPoly::var();
    const Rational w2 = pow_rat(Rational(omega + 2), 2);
    // first factor: A1 x + A0
    UniPoly A1 = (n - 1) * (n - 2);
    UniPoly A0 = -(n * (n - 2) * (n - 2)) + w2 * (n * n + n + 2);
    // second factor: B1 x + B0, from (n-3)(x-n+1) - (n-1)^2 - (n-1)(w+2)^2
    UniPoly B1 = n - 3;
    UniPoly B0 = (n - 3) * (UniPoly(Rational(1)) - n) - (n - 1) * (n - 1) - w2 * (n - 1);
    UniPoly cube = (n - 2) * (n - 2) * (n - 2);
    PPoly P;
    P.c2 = A1 * B1 - cube;
    P.c1 = A1 * B0 + A0 * B1 + cube * (n - 1);
    P.c0 = A0 * B0;
    return P;
}

// The printed derivative: P'(x) = -2(n-2) x - 2n(n-2)^3 + 2(n^2-3n-2)(w+2)^2.
inline PPoly p_prime_printed(int omega) {
    const UniPoly n = UniPoly::var();
    const Rational w2 = pow_rat(Rational(omega + 2), 2);
    PPoly Pp;
    Pp.c2 = UniPoly{};
    Pp.c1 = Rational(-2) * (n - 2);
    Pp.c0 = Rational(-2) * n * (n - 2) * (n - 2) * (n - 2) + Rational(2) * w2 * (n * n - Rational(3) * n - 2);
    return Pp;
}

struct PPrimeCheck {
    int omega = 0;
    bool match = false;
    PPoly derived;
    PPoly printed;
};

inline PPrimeCheck p_prime_check(int omega) {
    PPrimeCheck rep;
    rep.omega = omega;
    rep.derived = p_poly(omega).derivative_in_x();
    rep.printed = p_prime_printed(omega);
    rep.match = rep.derived == rep.printed;
    return rep;
}

// U_k = P(nu_k) expanded in n. Also verifies the defining identity
// U_k = (nu_k-n+1) d_k [ (n-2) u_k/nu_k - (n-2)^3 nu_k/d_k ] exactly.
inline UniPoly U(SpectralParams p) {
    const UniPoly n = UniPoly::var();
    UniPoly composed = p_poly(p.omega).at(nu(p));
    RatFunc nuk(nu(p)), dk(d(p));
    RatFunc bracket = RatFunc((n - 2)) * u(p) / nuk - RatFunc((n - 2) * (n - 2) * (n - 2)) * nuk / dk;
    RatFunc defining = (nuk - RatFunc(n) + RatFunc(Rational(1))) * dk * bracket;
    if (defining != RatFunc(composed))
        throw std::logic_error("U_k: P(nu_k) disagrees with the defining product form");
    return composed;
}

// Complete partial-fraction decomposition of Delta_k over its actual
// denominator factorization. The printed form
//   Delta_k = a n^2 + b n + e + h/(n-2) + s/(nu_k+1-n)
// omits a possible residue over nu_k itself; nu_residue records it (in the
// normalization t/nu_k) whenever it is nonzero.
struct DeltaDecomposition {
    SpectralParams params;
    Rational a, b, e;                  // polynomial part a n^2 + b n + e
    Rational h;                        // residue over (n-2)
    Rational s;                        // residue over (nu_k+1-n), paper normalization
    std::optional<Rational> nu_residue;  // residue over nu_k, absent when it vanishes
    PartialFractions raw;              // decomposition over monic linear factors
};

inline DeltaDecomposition delta_partial_fractions(SpectralParams p) {
    RatFunc D = delta(p);
    const Rational alpha(p.alpha());
    // candidate roots: n = 2, root of nu_k+1-n, root of nu_k
    const Rational root_pole(2);
    const Rational root_shift = -(alpha - 1);     // nu_k - n + 1 = (alpha-1)(n + alpha - 1)
    const Rational root_nu = -(alpha - 2);        // nu_k = alpha (n + alpha - 2)
    std::vector<UniPoly> factors;
    for (const Rational& r : {root_pole, root_shift, root_nu})
        factors.push_back(UniPoly::var() - UniPoly(r));

    DeltaDecomposition out{p, {}, {}, {}, {}, {}, std::nullopt, partial_fractions(D, factors)};
    const PartialFractions& pf = out.raw;
    out.a = pf.poly.coeff(2);
    out.b = pf.poly.coeff(1);
    out.e = pf.poly.coeff(0);
    for (const auto& t : pf.terms) {
        if (t.power != 1) throw std::logic_error("Delta_k decomposition: unexpected repeated pole");
        if (t.root == root_pole) {
            out.h = t.coeff;
        } else if (t.root == root_shift) {
            // c/(n-root) = c(alpha-1)/(nu_k+1-n) ... note nu_k+1-n = (alpha-1)(n-root)
            out.s = t.coeff * (alpha - 1);
        } else if (t.root == root_nu) {
            out.nu_residue = t.coeff * alpha;  // t/nu_k with nu_k = alpha (n-root)
        }
    }
    return out;
}

// -(n(n-2)^2 - (w+2)^2(n^2+n+2)) / ((n-1)(n-2)): the exact coefficient of
// the f^2 term in the braces of the expansion, after reduction to the base
// integral I_{n-2}^{n+2w+1}.
inline RatFunc f2_coefficient(int omega) {
    if (omega < 3) throw std::domain_error("f2_coefficient: omega must be >= 3");
    const UniPoly n = UniPoly::var();
    const Rational w2 = pow_rat(Rational(omega + 2), 2);
    UniPoly num = -(n * (n - 2) * (n - 2)) + w2 * (n * n + n + 2);
    return RatFunc(num, (n - 1) * (n - 2));
}

struct ExpansionCheck {
    int omega = 0;
    long n = 0;
    bool logarithmic = false;  // n == 2*omega+6: base integral is the log case
    Rational reduced;          // assembled f^2 coefficient over the base integral
    Rational expected;         // f2_coefficient(omega) at n
    bool match = false;
};

// Assembles the raw f^2-coefficient of the gradient expansion,
//   (w-n+4)^2 I_n^{2w+n+5} + 2(w+2)(w-n+4) I_n^{2w+n+3} + (w+2)^2 I_n^{2w+n+1},
// plus the normalization correction -(N-1)(n-2)^2 (I_n^{n+1}/I_n^{n-1})
// I_n^{2w+n+3} with N = 2n/(n-2), reduces everything to the base integral
// I_{n-2}^{n+2w+1}, and compares with f2_coefficient.
//
// At the boundary n = 2w+6 the bracket's leading index and the base are both
// logarithmic with equal rates, so only the leading coefficients are
// compared: (w-n+4)^2 against f2_coefficient at n.
inline ExpansionCheck expansion_check(int omega, long n) {
    if (omega < 3) throw std::domain_error("expansion_check: omega must be >= 3");
    if (n < 2L * omega + 6) throw std::domain_error("expansion_check: n below the admissible range");
    ExpansionCheck rep;
    rep.omega = omega;
    rep.n = n;
    rep.expected = f2_coefficient(omega).eval(n);
    const Rational wn4(omega - n + 4);
    if (n == 2L * omega + 6) {
        rep.logarithmic = true;
        rep.reduced = wn4 * wn4;
        rep.match = rep.reduced == rep.expected;
        return rep;
    }
    const IntegralIndex base{n - 2, n + 2 * omega + 1};
    const Rational r5 = reduce_to_base({n, 2 * omega + n + 5}, base);
    const Rational r3 = reduce_to_base({n, 2 * omega + n + 3}, base);
    const Rational r1 = reduce_to_base({n, 2 * omega + n + 1}, base);
    const Rational grad_ratio = reduce_to_base({n, n + 1}, {n, n - 1});
    const Rational Nm1 = rat(n + 2, n - 2);  // N - 1 with N = 2n/(n-2)
    const Rational w2 = pow_rat(Rational(omega + 2), 2);
    rep.reduced = wn4 * wn4 * r5 + 2 * Rational(omega + 2) * wn4 * r3 + w2 * r1
                  - Nm1 * rat(n - 2, 1) * rat(n - 2, 1) * grad_ratio * r3;
    rep.match = rep.reduced == rep.expected;
    return rep;
}

}  // namespace ycert
