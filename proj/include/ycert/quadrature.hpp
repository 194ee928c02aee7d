#pragma once

// Double-exponential (tanh-sinh) quadrature on MPFR values, the radial
// moment integral at finite (eps, delta), and a quadrature route to I_a^b
// that is independent of the Beta/Gamma closed form.

#include "ycert/hp.hpp"
#include "ycert/integrals.hpp"

#include <functional>

namespace ycert {

using MpfrFn = std::function<void(mpfr_ptr, mpfr_srcptr)>;  // out = f(x)

// Integral of f over [a, b]; error estimated from the last level doubling.
inline HPValue tanh_sinh(const MpfrFn& f, const Rational& a, const Rational& b, int digits,
                         int max_level = 12) {
    const long bits = HPValue::bits_for_digits(digits) + 24;
    mpfr_t half_width, center, pio2, h, t, sh, ch, tanh_arg, sech2, x, w, fx, sum, prev;
    for (auto* p : {&half_width, &center, &pio2, &h, &t, &sh, &ch, &tanh_arg, &sech2, &x, &w, &fx, &sum, &prev})
        mpfr_init2(*p, bits);
    mpfr_set_q(half_width, Rational((b - a) / 2).get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(center, Rational((b + a) / 2).get_mpq_t(), MPFR_RNDN);
    mpfr_const_pi(pio2, MPFR_RNDN);
    mpfr_div_ui(pio2, pio2, 2, MPFR_RNDN);
    mpfr_set_zero(prev, 1);

    mpfr_t err_est;
    mpfr_init2(err_est, 64);
    mpfr_set_d(err_est, 1e300, MPFR_RNDU);

    auto add_node = [&](long k) {
        mpfr_mul_si(t, h, k, MPFR_RNDN);
        mpfr_sinh_cosh(sh, ch, t, MPFR_RNDN);
        mpfr_mul(tanh_arg, pio2, sh, MPFR_RNDN);
        // x = center + half_width * tanh(tanh_arg)
        mpfr_tanh(x, tanh_arg, MPFR_RNDN);
        mpfr_mul(x, x, half_width, MPFR_RNDN);
        mpfr_add(x, x, center, MPFR_RNDN);
        // w = half_width * pio2 * ch / cosh(tanh_arg)^2
        mpfr_cosh(sech2, tanh_arg, MPFR_RNDN);
        mpfr_sqr(sech2, sech2, MPFR_RNDN);
        mpfr_mul(w, pio2, ch, MPFR_RNDN);
        mpfr_div(w, w, sech2, MPFR_RNDN);
        mpfr_mul(w, w, half_width, MPFR_RNDN);
        if (mpfr_zero_p(w) || mpfr_get_exp(w) < -(bits + 256)) return;  // negligible tail
        f(fx, x);
        mpfr_mul(fx, fx, w, MPFR_RNDN);
        mpfr_add(sum, sum, fx, MPFR_RNDN);
    };

    mpfr_set_zero(sum, 1);
    int level0 = 3;
    for (int level = level0; level <= max_level; ++level) {
        mpfr_set_ui(h, 1, MPFR_RNDN);
        mpfr_div_2ui(h, h, static_cast<unsigned long>(level), MPFR_RNDN);
        const long K = (8L << level);  // |t| <= 8
        if (level == level0) {
            for (long k = -K; k <= K; ++k) add_node(k);
        } else {
            // refine: the raw f-sum keeps prior (even) nodes, add odd ones
            for (long k = -K; k <= K; ++k)
                if (k % 2 != 0) add_node(k);
        }
        mpfr_mul(x, sum, h, MPFR_RNDN);  // current estimate
        if (level > level0) {
            mpfr_sub(w, x, prev, MPFR_RNDA);
            mpfr_abs(w, w, MPFR_RNDU);
            mpfr_set(err_est, w, MPFR_RNDU);
            mpfr_set(prev, x, MPFR_RNDN);
            mpfr_t target;
            mpfr_init2(target, 64);
            mpfr_abs(target, x, MPFR_RNDU);
            mpfr_mul_2si(target, target, -HPValue::bits_for_digits(digits), MPFR_RNDU);
            bool done = mpfr_cmp(err_est, target) <= 0;
            mpfr_clear(target);
            if (done) break;
        } else {
            mpfr_set(prev, x, MPFR_RNDN);
        }
    }

    HPValue result(bits);
    result.set_value(prev);
    result.set_err(err_est);
    result.add_ulps(16);

    for (auto* p : {&half_width, &center, &pio2, &h, &t, &sh, &ch, &tanh_arg, &sech2, &x, &w, &fx, &sum, &prev})
        mpfr_clear(*p);
    mpfr_clear(err_est);
    return result;
}

// I_a^b by quadrature: t = tan(theta) turns it into
// int_0^{pi/2} sin^b cos^{2a-b-2} dtheta, analytic on the closed interval.
inline HPValue integral_by_quadrature(IntegralIndex idx, int digits) {
    if (!convergent(idx)) throw DivergentIntegral(idx);
    const long b = idx.b, c = 2 * idx.a - idx.b - 2;
    const long bits = HPValue::bits_for_digits(digits) + 24;
    MpfrFn f = [b, c, bits](mpfr_ptr out, mpfr_srcptr theta) {
        mpfr_t s, co;
        mpfr_init2(s, bits);
        mpfr_init2(co, bits);
        mpfr_sin_cos(s, co, theta, MPFR_RNDN);
        mpfr_pow_si(out, s, b, MPFR_RNDN);
        mpfr_pow_si(co, co, c, MPFR_RNDN);
        mpfr_mul(out, out, co, MPFR_RNDN);
        mpfr_clear(s);
        mpfr_clear(co);
    };
    // endpoints: integrand is a polynomial in sin, cos; [0, pi/2] via rational
    // bracketing of pi/2 is fine for tanh-sinh since endpoint weights vanish
    // double-exponentially. Integrate over [0,1] after theta = (pi/2) u.
    MpfrFn g = [f, bits](mpfr_ptr out, mpfr_srcptr u) {
        mpfr_t theta;
        mpfr_init2(theta, bits);
        mpfr_const_pi(theta, MPFR_RNDN);
        mpfr_div_ui(theta, theta, 2, MPFR_RNDN);
        mpfr_mul(theta, theta, u, MPFR_RNDN);
        f(out, theta);
        mpfr_clear(theta);
    };
    HPValue raw = tanh_sinh(g, Rational(0), Rational(1), digits);
    return raw * HPValue::pi(bits) * HPValue::from_rational(rat(1, 2), bits);
}

struct MomentCheck {
    HPValue numeric;   // quadrature of the radial integral
    HPValue leading;   // eps^{alpha+n-beta(n-2)/2} I_{(n-2)beta/2}^{alpha+n-1}
    HPValue rel_gap;   // |numeric/leading - 1|
};

// Radial moment int_0^delta r^{alpha+n-1} (eps/(r^2+eps^2))^{beta(n-2)/2} dr,
// computed after the substitution t = r/eps, against its leading term.
inline MomentCheck quad_moment(long alpha, long beta, long n, const Rational& eps, const Rational& delta,
                               int digits) {
    if (beta < 2 || alpha < 0 || alpha >= (n - 2) * (beta - 1) - n)
        throw std::domain_error("quad_moment: exponent constraints violated");
    if (sgn(eps) <= 0 || !(eps < delta)) throw std::domain_error("quad_moment: need 0 < eps < delta");
    const long bits = HPValue::bits_for_digits(digits) + 24;
    const long tpow = alpha + n - 1;
    const Rational half_exp = rat(beta * (n - 2), 2);
    const bool int_exp = is_integer(half_exp);
    MpfrFn f = [tpow, half_exp, int_exp, bits](mpfr_ptr out, mpfr_srcptr t) {
        mpfr_t base;
        mpfr_init2(base, bits);
        mpfr_sqr(base, t, MPFR_RNDN);
        mpfr_add_ui(base, base, 1, MPFR_RNDN);
        if (int_exp) {
            mpfr_pow_si(base, base, -half_exp.get_num().get_si(), MPFR_RNDN);
        } else {
            mpfr_t e;
            mpfr_init2(e, bits);
            mpfr_set_q(e, Rational(-half_exp).get_mpq_t(), MPFR_RNDN);
            mpfr_pow(base, base, e, MPFR_RNDN);
            mpfr_clear(e);
        }
        mpfr_pow_si(out, t, tpow, MPFR_RNDN);
        mpfr_mul(out, out, base, MPFR_RNDN);
        mpfr_clear(base);
    };
    MomentCheck out{HPValue(bits), HPValue(bits), HPValue(bits)};
    out.numeric = tanh_sinh(f, Rational(0), delta / eps, digits);
    // overall scale eps^{alpha+n-beta(n-2)/2}
    Rational scale_exp = Rational(alpha + n) - half_exp;
    HPValue eps_hp = HPValue::from_rational(eps, bits);
    HPValue scale = eps_hp.pow(scale_exp);
    out.numeric = out.numeric * scale;

    // leading coefficient: I_{(n-2)beta/2}^{alpha+n-1} via the Gamma form,
    // in MPFR so half-integer first indices are allowed
    mpfr_t g1, g2, g3, acc;
    for (auto* p : {&g1, &g2, &g3, &acc}) mpfr_init2(*p, bits);
    auto gamma_q = [&](mpfr_ptr outp, const Rational& q) {
        mpfr_set_q(outp, q.get_mpq_t(), MPFR_RNDN);
        mpfr_gamma(outp, outp, MPFR_RNDN);
    };
    gamma_q(g1, rat(tpow + 1, 2));
    gamma_q(g2, half_exp - rat(tpow + 1, 2));
    gamma_q(g3, half_exp);
    mpfr_mul(acc, g1, g2, MPFR_RNDN);
    mpfr_div(acc, acc, g3, MPFR_RNDN);
    mpfr_div_ui(acc, acc, 2, MPFR_RNDN);
    HPValue lead(bits);
    lead.set_value(acc);
    lead.add_ulps(8);
    for (auto* p : {&g1, &g2, &g3, &acc}) mpfr_clear(*p);
    out.leading = lead * scale;

    HPValue one = HPValue::from_long(1, bits);
    out.rel_gap = (out.numeric / out.leading - one).abs_value();
    return out;
}

}  // namespace ycert
