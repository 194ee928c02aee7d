#pragma once

// Exact values of the form q * pi^e with q rational and e a nonnegative
// integer. Addition of different pi-powers is a bug in the calling code and
// throws rather than promoting to a polynomial in pi.

#include "ycert/rational.hpp"

namespace ycert {

struct PiMixError : std::domain_error {
    PiMixError() : std::domain_error("PiScaled: adding values with different pi powers") {}
};

class PiScaled {
  public:
    PiScaled() : q_(0), e_(0) {}
    PiScaled(const Rational& q, unsigned e = 0) : q_(q), e_(sgn(q) == 0 ? 0 : e) {}
    PiScaled(long q, unsigned e = 0) : PiScaled(Rational(q), e) {}

    const Rational& q() const { return q_; }
    unsigned e() const { return e_; }
    bool is_zero() const { return sgn(q_) == 0; }

    bool operator==(const PiScaled& o) const { return q_ == o.q_ && e_ == o.e_; }
    bool operator!=(const PiScaled& o) const { return !(*this == o); }

    PiScaled operator-() const { return PiScaled(-q_, e_); }

    friend PiScaled operator+(const PiScaled& a, const PiScaled& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.e_ != b.e_) throw PiMixError();
        return PiScaled(a.q_ + b.q_, a.e_);
    }
    friend PiScaled operator-(const PiScaled& a, const PiScaled& b) { return a + (-b); }

    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.q_ * b.q_, a.e_ + b.e_);
    }
    friend PiScaled operator*(const Rational& s, const PiScaled& a) {
        return PiScaled(s * a.q_, a.e_);
    }
    friend PiScaled operator*(const PiScaled& a, const Rational& s) { return s * a; }

    friend PiScaled operator/(const PiScaled& a, const Rational& s) {
        if (sgn(s) == 0) throw std::domain_error("PiScaled division by zero");
        return PiScaled(a.q_ / s, a.e_);
    }
    friend Rational operator/(const PiScaled& a, const PiScaled& b) {
        if (b.is_zero()) throw std::domain_error("PiScaled division by zero");
        if (a.is_zero()) return Rational(0);
        if (a.e_ != b.e_) throw PiMixError();
        return a.q_ / b.q_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s = rat_str(q_);
        if (e_ == 1) s += "*pi";
        else if (e_ > 1) s += "*pi^" + std::to_string(e_);
        return s;
    }

  private:
    Rational q_;
    unsigned e_;
};

}  // namespace ycert
