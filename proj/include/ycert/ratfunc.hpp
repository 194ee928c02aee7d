#pragma once

// Canonical rational functions num/den: gcd(num, den) = 1 and den monic.

#include "ycert/unipoly.hpp"

namespace ycert {

class RatFunc {
  public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFunc(const UniPoly& p) : num_(p), den_(Rational(1)) {}
    RatFunc(UniPoly num, UniPoly den) { assign(std::move(num), std::move(den)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    const UniPoly& to_poly() const {
        if (!is_polynomial()) throw std::domain_error("RatFunc is not a polynomial");
        return num_;
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (sgn(d) == 0) throw std::domain_error("RatFunc evaluated at a pole");
        return num_.eval(x) / d;
    }
    Rational eval(long x) const { return eval(Rational(x)); }

    std::string str(const std::string& sym = "n") const {
        if (is_polynomial()) return num_.str(sym);
        return "(" + num_.str(sym) + ") / (" + den_.str(sym) + ")";
    }

  private:
    void assign(UniPoly num, UniPoly den) {
        if (den.is_zero()) throw std::domain_error("RatFunc with zero denominator");
        if (num.is_zero()) {
            num_ = {};
            den_ = UniPoly(Rational(1));
            return;
        }
        UniPoly g = gcd_monic(num, den);
        if (g.degree() > 0) {
            num = num.divrem(g).first;
            den = den.divrem(g).first;
        }
        Rational scale = den.lc();
        num_ = num / scale;
        den_ = den / scale;
    }

    UniPoly num_;
    UniPoly den_;
};

inline RatFunc ratfunc_normalize(const UniPoly& num, const UniPoly& den) {
    return RatFunc(num, den);
}

}  // namespace ycert
