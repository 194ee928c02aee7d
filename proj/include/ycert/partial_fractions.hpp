#pragma once

// Partial-fraction decomposition of a rational function over a prescribed
// list of linear factors (repetition expresses multiplicity).

#include "ycert/ratfunc.hpp"

#include <map>

namespace ycert {

struct PFTerm {
    Rational root;   // term is coeff / (n - root)^power
    int power = 1;
    Rational coeff;
};

struct PartialFractions {
    UniPoly poly;
    std::vector<PFTerm> terms;
};

inline RatFunc recombine(const PartialFractions& pf) {
    RatFunc acc(pf.poly);
    for (const auto& t : pf.terms) {
        UniPoly lin = UniPoly::var() - UniPoly(t.root);
        UniPoly den(Rational(1));
        for (int i = 0; i < t.power; ++i) den *= lin;
        acc += RatFunc(UniPoly(t.coeff), den);
    }
    return acc;
}

// f must have den(f) dividing the product of the supplied linear factors
// (with their multiplicities). Nonlinear or non-dividing factor lists throw.
inline PartialFractions partial_fractions(const RatFunc& f, const std::vector<UniPoly>& factors) {
    // Collect distinct roots of the supplied factors.
    std::map<Rational, int> supplied;  // root -> supplied multiplicity
    for (const auto& fac : factors) {
        if (fac.degree() != 1) throw std::domain_error("partial_fractions: nonlinear factor supplied");
        Rational root = -fac.coeff(0) / fac.coeff(1);
        supplied[root] += 1;
    }

    PartialFractions out;
    auto [quot, rem] = f.num().divrem(f.den());
    out.poly = quot;

    UniPoly num = rem;
    UniPoly den = f.den();  // monic by RatFunc invariant

    // Multiplicity of each root actually present in den, bounded by the
    // supplied multiplicity.
    std::map<Rational, int> mult;
    UniPoly probe = den;
    for (const auto& [root, sup] : supplied) {
        UniPoly lin = UniPoly::var() - UniPoly(root);
        int m = 0;
        while (m < sup) {
            auto [q, r] = probe.divrem(lin);
            if (!r.is_zero()) break;
            probe = q;
            ++m;
        }
        if (m > 0) mult[root] = m;
    }
    if (probe.degree() != 0)
        throw std::domain_error("partial_fractions: factors do not divide den(f)");

    // Peel residues from the highest power down.
    for (const auto& [root, m0] : mult) {
        UniPoly lin = UniPoly::var() - UniPoly(root);
        for (int m = m0; m >= 1; --m) {
            if (num.is_zero()) break;
            // g = den / (n-root)^m ; residue at power m is num(root)/g(root)
            UniPoly g = den;
            for (int i = 0; i < m; ++i) g = g.divrem(lin).first;
            Rational c = num.eval(root) / g.eval(root);
            if (sgn(c) != 0) out.terms.push_back({root, m, c});
            // num - c*g vanishes at root; divide the factor out of both sides.
            UniPoly reduced = num - UniPoly(c) * g;
            num = reduced.is_zero() ? UniPoly{} : reduced.divrem(lin).first;
            den = den.divrem(lin).first;
        }
    }
    if (!num.is_zero())
        throw std::domain_error("partial_fractions: residue extraction left a remainder");
    return out;
}

}  // namespace ycert
