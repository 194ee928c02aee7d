#pragma once

// High-precision floating values with tracked error bounds (MPFR-backed).
// |value - true| <= err is maintained through every operation; sign queries
// answer only when the bound permits. The oracle can fail an exact result
// but never confirms one on its own.

#include "ycert/rational.hpp"

#include <mpfr.h>

#include <cmath>

namespace ycert {

class HPValue {
  public:
    static long bits_for_digits(int digits) {
        return static_cast<long>(static_cast<double>(digits) * 3.3219280948873623) + 32;
    }

    explicit HPValue(long bits = 128) : bits_(bits) {
        mpfr_init2(v_, bits_);
        mpfr_init2(e_, kErrBits);
        mpfr_set_zero(v_, 1);
        mpfr_set_zero(e_, 1);
    }
    HPValue(const HPValue& o) : bits_(o.bits_) {
        mpfr_init2(v_, bits_);
        mpfr_init2(e_, kErrBits);
        mpfr_set(v_, o.v_, MPFR_RNDN);
        mpfr_set(e_, o.e_, MPFR_RNDU);
    }
    HPValue(HPValue&& o) noexcept : bits_(o.bits_) {
        mpfr_init2(v_, 2);
        mpfr_init2(e_, 2);
        mpfr_swap(v_, o.v_);
        mpfr_swap(e_, o.e_);
    }
    HPValue& operator=(HPValue o) {
        std::swap(bits_, o.bits_);
        mpfr_swap(v_, o.v_);
        mpfr_swap(e_, o.e_);
        return *this;
    }
    ~HPValue() {
        mpfr_clear(v_);
        mpfr_clear(e_);
    }

    long bits() const { return bits_; }
    mpfr_srcptr value() const { return v_; }
    mpfr_srcptr err() const { return e_; }

    static HPValue from_rational(const Rational& q, long bits) {
        HPValue r(bits);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        r.bump_ulp();
        return r;
    }
    static HPValue from_long(long x, long bits) {
        HPValue r(bits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static HPValue pi(long bits) {
        HPValue r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        r.bump_ulp();
        return r;
    }

    friend HPValue operator+(const HPValue& a, const HPValue& b) {
        HPValue r(std::max(a.bits_, b.bits_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        mpfr_add(r.e_, a.e_, b.e_, MPFR_RNDU);
        r.bump_ulp();
        return r;
    }
    friend HPValue operator-(const HPValue& a, const HPValue& b) {
        HPValue r(std::max(a.bits_, b.bits_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        mpfr_add(r.e_, a.e_, b.e_, MPFR_RNDU);
        r.bump_ulp();
        return r;
    }
    HPValue operator-() const {
        HPValue r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend HPValue operator*(const HPValue& a, const HPValue& b) {
        HPValue r(std::max(a.bits_, b.bits_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        // err <= |a| eb + |b| ea + ea eb
        mpfr_t t1, t2;
        mpfr_init2(t1, kErrBits);
        mpfr_init2(t2, kErrBits);
        mpfr_abs(t1, a.v_, MPFR_RNDU);
        mpfr_mul(t1, t1, b.e_, MPFR_RNDU);
        mpfr_abs(t2, b.v_, MPFR_RNDU);
        mpfr_mul(t2, t2, a.e_, MPFR_RNDU);
        mpfr_add(r.e_, t1, t2, MPFR_RNDU);
        mpfr_mul(t1, a.e_, b.e_, MPFR_RNDU);
        mpfr_add(r.e_, r.e_, t1, MPFR_RNDU);
        mpfr_clear(t1);
        mpfr_clear(t2);
        r.bump_ulp();
        return r;
    }
    friend HPValue operator/(const HPValue& a, const HPValue& b) {
        // requires |b| > 2 err_b
        HPValue r(std::max(a.bits_, b.bits_));
        if (b.definite_sign() == 0) throw std::domain_error("HPValue division by indefinite value");
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        // err <= (|a| + |a/b| |b|_lo err_b/|b|_lo ... use (ea + |a/b| eb) / (|b| - eb)
        mpfr_t t1, t2, babs;
        mpfr_init2(t1, kErrBits);
        mpfr_init2(t2, kErrBits);
        mpfr_init2(babs, kErrBits);
        mpfr_abs(babs, b.v_, MPFR_RNDD);
        mpfr_sub(babs, babs, b.e_, MPFR_RNDD);  // lower bound on |true b|
        mpfr_abs(t1, r.v_, MPFR_RNDU);
        mpfr_mul(t1, t1, b.e_, MPFR_RNDU);
        mpfr_add(t1, t1, a.e_, MPFR_RNDU);
        mpfr_div(r.e_, t1, babs, MPFR_RNDU);
        mpfr_clear(t1);
        mpfr_clear(t2);
        mpfr_clear(babs);
        r.bump_ulp();
        return r;
    }

    HPValue sqrt() const {
        if (mpfr_sgn(v_) < 0) throw std::domain_error("HPValue sqrt of negative value");
        HPValue r(bits_);
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        // err <= e / (2 sqrt(x_lo)) for x_lo = x - e > 0, else coarse sqrt(e)
        mpfr_t lo;
        mpfr_init2(lo, kErrBits);
        mpfr_sub(lo, v_, e_, MPFR_RNDD);
        if (mpfr_sgn(lo) > 0) {
            mpfr_sqrt(lo, lo, MPFR_RNDD);
            mpfr_mul_ui(lo, lo, 2, MPFR_RNDD);
            mpfr_div(r.e_, e_, lo, MPFR_RNDU);
        } else {
            mpfr_sqrt(r.e_, e_, MPFR_RNDU);
        }
        mpfr_clear(lo);
        r.bump_ulp();
        return r;
    }

    // x^(p/q) for definite-positive x via mpfr_pow; error via the derivative
    // bound |y x^{y-1}| ea (the exponent is exact).
    HPValue pow(const Rational& expo) const {
        if (definite_sign() <= 0) throw std::domain_error("HPValue pow of non-positive value");
        HPValue r(bits_);
        mpfr_t y;
        mpfr_init2(y, bits_);
        mpfr_set_q(y, expo.get_mpq_t(), MPFR_RNDN);
        mpfr_pow(r.v_, v_, y, MPFR_RNDN);
        mpfr_t t, xlo;
        mpfr_init2(t, kErrBits);
        mpfr_init2(xlo, kErrBits);
        mpfr_sub(xlo, v_, e_, MPFR_RNDD);                 // 0 < xlo <= true x
        mpfr_abs(t, r.v_, MPFR_RNDU);
        mpfr_div(t, t, xlo, MPFR_RNDU);                   // ~ |x^y| / x
        mpfr_mul(t, t, e_, MPFR_RNDU);
        mpfr_abs(y, y, MPFR_RNDU);
        mpfr_mul(t, t, y, MPFR_RNDU);                     // |y| |x^y / x| e
        mpfr_mul_ui(t, t, 2, MPFR_RNDU);                  // slack for curvature
        mpfr_set(r.e_, t, MPFR_RNDU);
        mpfr_clear(t);
        mpfr_clear(xlo);
        mpfr_clear(y);
        r.bump_ulp();
        return r;
    }

    // sign when |value| > err, else 0 (indefinite)
    int definite_sign() const {
        mpfr_t a;
        mpfr_init2(a, kErrBits);
        mpfr_abs(a, v_, MPFR_RNDD);
        int cmp = mpfr_cmp(a, e_);
        mpfr_clear(a);
        if (cmp <= 0) return 0;
        return mpfr_sgn(v_);
    }

    // |value - q| <= tol, accounting for err
    bool within_of(const Rational& q, const Rational& tol) const {
        mpfr_t d, t;
        mpfr_init2(d, bits_);
        mpfr_init2(t, bits_);
        mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
        mpfr_sub(d, v_, t, MPFR_RNDA);
        mpfr_abs(d, d, MPFR_RNDU);
        mpfr_add(d, d, e_, MPFR_RNDU);
        mpfr_set_q(t, tol.get_mpq_t(), MPFR_RNDD);
        int cmp = mpfr_cmp(d, t);
        mpfr_clear(d);
        mpfr_clear(t);
        return cmp <= 0;
    }

    void set_value(mpfr_srcptr x) { mpfr_set(v_, x, MPFR_RNDN); }
    void set_err(mpfr_srcptr x) { mpfr_set(e_, x, MPFR_RNDU); }

    HPValue abs_value() const {
        HPValue r(*this);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    double approx() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double err_approx() const { return mpfr_get_d(e_, MPFR_RNDU); }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "?";
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    // inflate the error bound by k ulps of the current value
    void add_ulps(unsigned long k = 1) {
        mpfr_t u;
        mpfr_init2(u, kErrBits);
        if (mpfr_zero_p(v_)) {
            mpfr_set_ui_2exp(u, 1, -bits_ * 2, MPFR_RNDU);
        } else {
            mpfr_abs(u, v_, MPFR_RNDU);
            mpfr_mul_2si(u, u, 1 - bits_, MPFR_RNDU);
        }
        mpfr_mul_ui(u, u, k, MPFR_RNDU);
        mpfr_add(e_, e_, u, MPFR_RNDU);
        mpfr_clear(u);
    }

  private:
    static constexpr long kErrBits = 96;

    void bump_ulp() { add_ulps(1); }

    mpfr_t v_;
    mpfr_t e_;
    long bits_;
};

inline HPValue eval_hp(const Rational& q, int digits) {
    return HPValue::from_rational(q, HPValue::bits_for_digits(digits));
}

}  // namespace ycert
