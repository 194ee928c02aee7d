#pragma once

// Floating cross-checks of exact results. Every certified sign is
// re-evaluated in high precision; a definite numeric sign that contradicts a
// certificate fails the build. Indefinite evaluations (|value| within the
// error bound) are never treated as confirmation or contradiction.

#include "ycert/claims.hpp"
#include "ycert/quadrature.hpp"

namespace ycert {

inline HPValue eval_hp(const PiScaled& p, int digits) {
    const long bits = HPValue::bits_for_digits(digits);
    HPValue r = HPValue::from_rational(p.q(), bits);
    HPValue pi = HPValue::pi(bits);
    for (unsigned i = 0; i < p.e(); ++i) r = r * pi;
    return r;
}

inline HPValue eval_hp(const UniPoly& p, const Rational& x, int digits) {
    const long bits = HPValue::bits_for_digits(digits);
    HPValue acc = HPValue::from_long(0, bits);
    HPValue xv = HPValue::from_rational(x, bits);
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * xv + HPValue::from_rational(p.coeff(i), bits);
    return acc;
}

inline HPValue eval_hp(const RatFunc& f, const Rational& x, int digits) {
    return eval_hp(f.num(), x, digits) / eval_hp(f.den(), x, digits);
}

inline HPValue eval_hp(const AlgEndpoint& e, int digits) {
    const long bits = HPValue::bits_for_digits(digits);
    HPValue disc = HPValue::from_rational(e.disc, bits);
    return HPValue::from_rational(e.rat_part, bits) +
           HPValue::from_rational(e.coef, bits) * disc.sqrt();
}

inline HPValue eval_sqrtsum_hp(const Rational& A, const Rational& B, const Rational& C,
                               const Rational& u, const Rational& v, int digits) {
    const long bits = HPValue::bits_for_digits(digits);
    HPValue r = HPValue::from_rational(A, bits);
    r = r + HPValue::from_rational(B, bits) * HPValue::from_rational(u, bits).sqrt();
    r = r + HPValue::from_rational(C, bits) * HPValue::from_rational(v, bits).sqrt();
    return r;
}

// ---------------------------------------------------------------------------
// crosscheck: numeric re-evaluation of certificate bundles
// ---------------------------------------------------------------------------

struct CrosscheckReport {
    size_t certificates = 0;
    size_t checks = 0;
    size_t indefinite = 0;  // numeric sign too small to call; not a failure
    std::vector<std::string> disagreements;
    bool agree() const { return disagreements.empty(); }
};

namespace detail {

inline std::vector<long> ray_sample_points(long n0) {
    return {n0, n0 + 1, n0 + 7, n0 + 63, 3 * n0 + 100};
}

inline void crosscheck_poly(const SignCert& c, int digits, CrosscheckReport& rep) {
    UniPoly p = poly_from(c.witness.poly);
    if (p.is_zero()) return;
    const long hi = c.method == CertMethod::pointwise ? c.witness.point_hi : 0;
    for (long n : ray_sample_points(c.claim.n0)) {
        if (c.method == CertMethod::pointwise && n > hi) break;
        HPValue v = eval_hp(p, Rational(n), digits);
        ++rep.checks;
        int s = v.definite_sign();
        if (s == 0) ++rep.indefinite;
        else if (s != sign_to_int(c.sign))
            rep.disagreements.push_back("poly claim " + c.claim.expr + " at n=" + std::to_string(n));
    }
}

}  // namespace detail

inline void crosscheck_cert(const SignCert& c, int digits, CrosscheckReport& rep) {
    ++rep.certificates;
    switch (c.method) {
        case CertMethod::trivial:
            return;
        case CertMethod::composite:
            for (const auto& part : c.parts) crosscheck_cert(part, digits, rep);
            return;
        case CertMethod::descartes_shift:
        case CertMethod::sturm:
        case CertMethod::pointwise:
            detail::crosscheck_poly(c, digits, rep);
            return;
        case CertMethod::squaring_trace: {
            if (c.claim.aux.size() != 5) return;
            HPValue v = eval_sqrtsum_hp(c.claim.aux[0], c.claim.aux[1], c.claim.aux[2], c.claim.aux[3],
                                        c.claim.aux[4], digits);
            ++rep.checks;
            int s = v.definite_sign();
            if (s == 0) {
                ++rep.indefinite;
                if (c.sign != Sign::zero) return;  // cannot contradict
            } else if (s != sign_to_int(c.sign)) {
                rep.disagreements.push_back("sqrtsum claim " + c.claim.expr + " omega=" +
                                            std::to_string(c.claim.omega) + " n=" + std::to_string(c.claim.n));
            }
            return;
        }
        case CertMethod::rational_eval: {
            // window witness: quadratic values must evaluate negative
            if (c.claim.kind != "window_witness" || c.claim.aux.size() != 1) return;
            const Rational& cval = c.claim.aux[0];
            for (int k = 1; k <= c.claim.k; ++k) {
                SpectralParams p(c.claim.omega, k);
                const long bits = HPValue::bits_for_digits(digits);
                Rational nm2 = rat(c.claim.n - 2, 1);
                HPValue dv = eval_hp(d(p), Rational(c.claim.n), digits);
                HPValue nv = eval_hp(nu(p), Rational(c.claim.n), digits);
                HPValue uv = eval_hp(u(p), Rational(c.claim.n), digits);
                HPValue cc = HPValue::from_rational(cval, bits);
                HPValue nm2v = HPValue::from_rational(nm2, bits);
                HPValue two = HPValue::from_long(2, bits);
                HPValue val = dv / (two * nm2v) * cc * cc - nm2v * cc + nm2v * uv / (two * nv * nv);
                ++rep.checks;
                int s = val.definite_sign();
                if (s == 0) ++rep.indefinite;
                else if (s > 0)
                    rep.disagreements.push_back("witness quadratic positive at omega=" +
                                                std::to_string(c.claim.omega) + " n=" +
                                                std::to_string(c.claim.n) + " k=" + std::to_string(k));
            }
            return;
        }
    }
}

inline CrosscheckReport crosscheck(const std::vector<SignCert>& certs, int digits = 60) {
    CrosscheckReport rep;
    for (const auto& c : certs) crosscheck_cert(c, digits, rep);
    return rep;
}

inline CrosscheckReport crosscheck(const LemmaPolyCertificates& lp, int digits = 60) {
    return crosscheck(lp.certs, digits);
}

inline CrosscheckReport crosscheck(const CWindow& w, int digits = 60) {
    std::vector<SignCert> certs = w.comparisons;
    certs.push_back(w.cert);
    CrosscheckReport rep = crosscheck(certs, digits);
    // endpoint sanity: x_k < y_k numerically
    for (const auto& [x, y] : w.endpoints) {
        HPValue diff = eval_hp(y, digits) - eval_hp(x, digits);
        ++rep.checks;
        int s = diff.definite_sign();
        if (s == 0) ++rep.indefinite;
        else if (s < 0)
            rep.disagreements.push_back("interval inverted at k=" + std::to_string(x.k));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// leading-constant identities and the conformal threshold constant
// ---------------------------------------------------------------------------

struct LeadingConstantReport {
    long n = 0;
    int digits = 0;
    // (i) printed identity: 4(n-2) I_n^{n+1} / (I_n^{n-2})^{(n-2)/n} vs n
    HPValue printed_lhs;
    HPValue printed_residual;  // lhs/n - 1
    // (ii) sphere-constant identity:
    //     4(n-2) I_n^{n+1} w_{n-1}^{2/n} vs n (I_n^{n-1})^{(n-2)/n} w_n^{2/n}
    HPValue sphere_lhs, sphere_rhs;
    HPValue sphere_residual;  // lhs/rhs - 1
};

// Evaluates both variants and reports residuals; asserts neither.
inline LeadingConstantReport leading_constant_check(long n, int digits) {
    if (n < 3) throw std::domain_error("leading_constant_check: n must be >= 3");
    if (digits < 10) throw std::domain_error("leading_constant_check: precision must be >= 10 digits");
    const long bits = HPValue::bits_for_digits(digits);
    LeadingConstantReport rep{n, digits,       HPValue(bits), HPValue(bits), HPValue(bits),
                              HPValue(bits),   HPValue(bits)};
    const Rational exp_frac = rat(n - 2, n);
    const Rational two_over_n = rat(2, n);
    HPValue one = HPValue::from_long(1, bits);
    HPValue four_nm2 = HPValue::from_long(4 * (n - 2), bits);
    HPValue In_np1 = eval_hp(integral_exact({n, n + 1}), digits);
    HPValue In_nm1 = eval_hp(integral_exact({n, n - 1}), digits);
    HPValue In_nm2 = eval_hp(integral_exact({n, n - 2}), digits);
    HPValue nv = HPValue::from_long(n, bits);

    rep.printed_lhs = four_nm2 * In_np1 / In_nm2.pow(exp_frac);
    rep.printed_residual = rep.printed_lhs / nv - one;

    HPValue wn1 = eval_hp(sphere_volume(n - 1), digits);
    HPValue wn = eval_hp(sphere_volume(n), digits);
    rep.sphere_lhs = four_nm2 * In_np1 * wn1.pow(two_over_n);
    rep.sphere_rhs = nv * In_nm1.pow(exp_frac) * wn.pow(two_over_n);
    rep.sphere_residual = rep.sphere_lhs / rep.sphere_rhs - one;
    return rep;
}

// n(n-1) w_n^{2/n} m^{2/n}: the strict upper threshold for the invariant
// energy, with the orbit cardinality entering only as the scalar m^{2/n}.
inline HPValue hv_threshold(long n, long m, int digits) {
    if (n < 3 || m < 1) throw std::domain_error("hv_threshold: need n >= 3, m >= 1");
    const long bits = HPValue::bits_for_digits(digits);
    const Rational two_over_n = rat(2, n);
    HPValue wn = eval_hp(sphere_volume(n), digits);
    HPValue mv = HPValue::from_long(m, bits);
    return HPValue::from_long(n * (n - 1), bits) * wn.pow(two_over_n) * mv.pow(two_over_n);
}

}  // namespace ycert
