#pragma once

// Univariate polynomials over the rationals in a single formal symbol
// (written "n" throughout). Coefficients are stored by ascending degree and
// kept normalized: the zero polynomial has no coefficients.

#include "ycert/rational.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ycert {

class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(const Rational& c) { if (sgn(c) != 0) c_.push_back(c); }
    UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly var() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    static UniPoly monomial(const Rational& coeff, int deg) {
        if (sgn(coeff) == 0) return {};
        std::vector<Rational> c(static_cast<size_t>(deg) + 1, Rational(0));
        c.back() = coeff;
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& lc() const {
        static const Rational zero(0);
        return c_.empty() ? zero : c_.back();
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        if (sgn(s) == 0) return {};
        UniPoly r(p);
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend UniPoly operator*(const UniPoly& p, const Rational& s) { return s * p; }

    UniPoly operator/(const Rational& s) const {
        if (sgn(s) == 0) throw std::domain_error("UniPoly division by zero scalar");
        return (Rational(1) / s) * *this;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rational eval(long x) const { return eval(Rational(x)); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return UniPoly(std::move(d));
    }

    // p(shift + t) as a polynomial in t.
    UniPoly shift(const Rational& s) const {
        UniPoly t = var() + UniPoly(s);
        return compose(t);
    }
    UniPoly shift(long s) const { return shift(Rational(s)); }

    // p(inner) by Horner over polynomials.
    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly(*it);
        return acc;
    }

    // Euclidean division: *this = q*den + r with deg r < deg den.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& den) const {
        if (den.is_zero()) throw std::domain_error("UniPoly division by zero polynomial");
        UniPoly r(*this);
        std::vector<Rational> q;
        int dd = den.degree();
        if (r.degree() >= dd) q.assign(static_cast<size_t>(r.degree() - dd) + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= dd) {
            int shift_deg = r.degree() - dd;
            Rational f = r.lc() / den.lc();
            q[static_cast<size_t>(shift_deg)] = f;
            r -= UniPoly::monomial(f, shift_deg) * den;
        }
        return {UniPoly(std::move(q)), r};
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return *this / lc();
    }

    std::string str(const std::string& sym = "n") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational c = coeff(i);
            if (sgn(c) == 0) continue;
            if (!first) os << (sgn(c) > 0 ? " + " : " - ");
            else if (sgn(c) < 0) os << "-";
            first = false;
            Rational a = abs(c);
            if (i == 0 || a != 1) os << rat_str(a);
            if (i > 0) {
                if (a != 1) os << "*";
                os << sym;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UniPoly poly_derivative(const UniPoly& p) { return p.derivative(); }
inline UniPoly poly_shift(const UniPoly& p, long n0) { return p.shift(n0); }
inline UniPoly poly_shift(const UniPoly& p, const Rational& n0) { return p.shift(n0); }

inline UniPoly gcd_monic(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return {};
    return a.monic();
}

}  // namespace ycert
