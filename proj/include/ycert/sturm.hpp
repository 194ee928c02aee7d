#pragma once

// Sturm sequences for exact real-root counting on rays.

#include "ycert/unipoly.hpp"

namespace ycert {

struct SturmChain {
    std::vector<UniPoly> polys;   // p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i)
    std::vector<UniPoly> quots;   // p_{i-1} = quots[i-1]*p_i - p_{i+1}
};

inline SturmChain sturm_chain(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_chain of the zero polynomial");
    SturmChain c;
    c.polys.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero()) return c;
    c.polys.push_back(d);
    while (true) {
        const UniPoly& a = c.polys[c.polys.size() - 2];
        const UniPoly& b = c.polys.back();
        auto [q, r] = a.divrem(b);
        c.quots.push_back(q);
        if (r.is_zero()) break;
        c.polys.push_back(-r);
    }
    return c;
}

inline int sturm_variations_at(const SturmChain& c, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : c.polys) {
        int s = sign_of(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

inline int sturm_variations_at_inf(const SturmChain& c) {
    int var = 0, prev = 0;
    for (const auto& q : c.polys) {
        int s = sign_of(q.lc());
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots in (x, +inf); requires p(x) != 0.
inline int sturm_roots_right_of(const SturmChain& c, const Rational& x) {
    if (sign_of(c.polys.front().eval(x)) == 0)
        throw std::domain_error("sturm_roots_right_of: ray endpoint is a root");
    return sturm_variations_at(c, x) - sturm_variations_at_inf(c);
}

}  // namespace ycert
