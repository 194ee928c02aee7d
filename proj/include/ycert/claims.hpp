#pragma once

// Binding between serialized claims and the coefficient families they talk
// about. Full verification of a certificate is
//   (1) rebuild the named expression from (omega, k, j, aux),
//   (2) compare it against the embedded witness polynomial / operands,
//   (3) replay the method-level argument (shift identity, Sturm chain,
//       squaring trace, rational evaluations).
// Everything here is rational arithmetic; no floating point.

#include "ycert/certify.hpp"

namespace ycert {

namespace detail {

inline UniPoly minorant_poly(const std::vector<Rational>& aux, size_t at) {
    if (aux.size() < at + 2) throw std::domain_error("claim aux: missing minorant coefficients");
    return UniPoly(std::vector<Rational>{aux[at + 1], aux[at]});  // sigma + rho n
}

}  // namespace detail

// Rebuilds the polynomial a poly_ray claim certifies. Returns nullopt for
// expressions this registry does not know (then binding fails).
inline std::optional<UniPoly> rebuild_poly_claim(const Claim& c) {
    const UniPoly n = UniPoly::var();
    auto params = [&](int k) { return SpectralParams(c.omega, k); };
    const std::string& e = c.expr;
    try {
        if (e == "d") return d(params(c.k));
        if (e == "nu") return nu(params(c.k));
        if (e == "nu_shift") return nu(params(c.k)) - n + UniPoly(Rational(1));
        if (e == "U") return U(params(c.k));
        if (e == "d_diff") return d(params(c.k)) - d(params(c.j));
        if (e == "L") return detail::minorant_poly(c.aux, 0);
        if (e == "pair_tail") {
            UniPoly dk = d(params(c.k)), dj = d(params(c.j));
            UniPoly Lk = detail::minorant_poly(c.aux, 0), Lj = detail::minorant_poly(c.aux, 2);
            return (n - 2) * (dj - dk) + dk * Lj + dj * Lk;
        }
        // composite halves of a known rational function
        auto strip = [&](const std::string& suffix) -> std::optional<std::string> {
            if (e.size() > suffix.size() && e.compare(e.size() - suffix.size(), suffix.size(), suffix) == 0)
                return e.substr(0, e.size() - suffix.size());
            return std::nullopt;
        };
        for (const char* side : {".num", ".den"}) {
            if (auto base = strip(side)) {
                Claim parent = c;
                parent.expr = *base;
                if (auto rf = [&]() -> std::optional<RatFunc> {
                        if (*base == "Delta") return delta(params(c.k));
                        if (*base == "u") return u(params(c.k));
                        if (*base == "gap") {
                            RatFunc lin(detail::minorant_poly(c.aux, 0));
                            return delta(params(c.k)) - lin * lin;
                        }
                        return std::nullopt;
                    }()) {
                    return std::string(side) == ".num" ? rf->num() : rf->den();
                }
                return std::nullopt;
            }
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

inline std::optional<RatFunc> rebuild_ratfunc_claim(const Claim& c) {
    try {
        if (c.expr == "Delta") return delta(SpectralParams(c.omega, c.k));
        if (c.expr == "u") return u(SpectralParams(c.omega, c.k));
        if (c.expr == "gap") {
            RatFunc lin(detail::minorant_poly(c.aux, 0));
            return delta(SpectralParams(c.omega, c.k)) - lin * lin;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

// Endpoint comparison operands (A, B, C, u, v) for claims "cmp:t1-t2".
inline std::optional<std::vector<Rational>> rebuild_cmp_operands(const Claim& c) {
    if (c.expr.size() != 7 || c.expr.compare(0, 4, "cmp:") != 0 || c.expr[5] != '-') return std::nullopt;
    char t1 = c.expr[4], t2 = c.expr[6];
    if ((t1 != 'x' && t1 != 'y') || (t2 != 'x' && t2 != 'y')) return std::nullopt;
    try {
        auto [x1, y1] = roots(SpectralParams(c.omega, c.k), c.n);
        auto [x2, y2] = roots(SpectralParams(c.omega, c.j), c.n);
        const AlgEndpoint& e1 = t1 == 'x' ? x1 : y1;
        const AlgEndpoint& e2 = t2 == 'x' ? x2 : y2;
        return std::vector<Rational>{e1.rat_part - e2.rat_part, e1.coef, -e2.coef, e1.disc, e2.disc};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Recomputes the feasibility-quadratic values for a window witness claim.
inline std::optional<std::vector<Rational>> rebuild_witness_values(const Claim& c) {
    if (c.aux.size() != 1 || c.k < 1) return std::nullopt;
    try {
        const Rational& cval = c.aux[0];
        const Rational nm2 = rat(c.n - 2, 1);
        std::vector<Rational> values;
        for (int k = 1; k <= c.k; ++k) {
            SpectralParams p(c.omega, k);
            Rational dv = d(p).eval(c.n);
            Rational nv = nu(p).eval(c.n);
            Rational uv = u(p).eval(c.n);
            Rational disc = delta(p).eval(c.n);
            if (sign_of(dv) <= 0 || sign_of(disc) <= 0) return std::nullopt;  // window ill-formed
            values.push_back(dv / (2 * nm2) * cval * cval - nm2 * cval + nm2 * uv / (2 * nv * nv));
        }
        return values;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Full verification: claim binding plus method replay.
inline bool verify_cert(const SignCert& cert) {
    const Claim& c = cert.claim;
    if (c.kind == "note") return cert.method == CertMethod::trivial;

    if (c.kind == "poly_ray") {
        auto p = rebuild_poly_claim(c);
        if (!p || p->coeffs() != cert.witness.poly) return false;
        return replay_sign_cert(cert) && cert.sign == c.sign;
    }
    if (c.kind == "ratfunc_ray") {
        auto f = rebuild_ratfunc_claim(c);
        if (!f || cert.parts.size() != 2) return false;
        if (f->num().coeffs() != cert.parts[0].witness.poly) return false;
        if (f->den().coeffs() != cert.parts[1].witness.poly) return false;
        return replay_sign_cert(cert) && cert.sign == c.sign;
    }
    if (c.kind == "sqrtsum" || c.kind == "window_empty") {
        if (c.aux.size() != 5) return false;
        if (c.expr.rfind("cmp:", 0) == 0) {
            auto ops = rebuild_cmp_operands(c);
            if (!ops || *ops != c.aux) return false;
        }
        if (c.kind == "window_empty" && cert.sign == Sign::positive) return false;
        return replay_sign_cert(cert) && cert.sign == c.sign;
    }
    if (c.kind == "window_witness") {
        auto values = rebuild_witness_values(c);
        if (!values || *values != cert.witness.values) return false;
        for (const auto& v : *values)
            if (sign_of(v) >= 0) return false;
        return cert.method == CertMethod::rational_eval && cert.sign == Sign::negative;
    }
    return false;
}

}  // namespace ycert
