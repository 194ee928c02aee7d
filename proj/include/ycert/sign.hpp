#pragma once

// Exact sign determination with replayable certificates.
//
// Ray certificates prove a polynomial keeps one strict sign on [n0, +inf):
//   descartes-shift      all nonzero coefficients of p(n0+t) share a sign
//   sturm                no real roots right of n0, sign taken at n0
//   pointwise-exhaustive integer points up to a root bound, leading sign after
// Squaring-trace certificates give the exact sign of A + B*sqrt(u) + C*sqrt(v)
// by sign-tracked repeated squaring; zero is detected symbolically, never by
// tolerance.

#include "ycert/sturm.hpp"
#include "ycert/ratfunc.hpp"

#include <chrono>
#include <optional>

namespace ycert {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_from_int(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }
inline int sign_to_int(Sign s) { return static_cast<int>(s); }
inline std::string sign_name(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        default: return "positive";
    }
}

enum class CertMethod { trivial, descartes_shift, sturm, squaring_trace, pointwise, rational_eval, composite };

inline std::string method_name(CertMethod m) {
    switch (m) {
        case CertMethod::trivial: return "trivial";
        case CertMethod::descartes_shift: return "descartes-shift";
        case CertMethod::sturm: return "sturm";
        case CertMethod::squaring_trace: return "squaring-trace";
        case CertMethod::pointwise: return "pointwise-exhaustive";
        case CertMethod::rational_eval: return "rational-eval";
        default: return "composite";
    }
}

// What is being asserted. `expr` names the expression family so a verifier
// can rebuild it from (omega, k, j, aux) and compare against the embedded
// witness; `aux` carries claim-level rational parameters (minorant
// coefficients, sqrt-sum operands, witness constants).
struct Claim {
    std::string kind;  // poly_ray | ratfunc_ray | sqrtsum | window_witness | window_empty | value | note
    std::string expr;
    int omega = 0;
    int k = 0;
    int j = 0;
    long n = 0;   // pointwise claims
    long n0 = 0;  // ray claims: domain is n >= n0
    Sign sign = Sign::zero;
    std::vector<Rational> aux;

    bool operator==(const Claim&) const = default;
};

struct TraceStep {
    std::string tag;
    Rational lhs, rhs;
    int rel = 0;  // sign(lhs - rhs)
    bool operator==(const TraceStep&) const = default;
};

struct CertWitness {
    std::vector<Rational> poly;                 // certified polynomial, ascending degree
    std::vector<Rational> shifted;              // descartes-shift: p(n0+t)
    std::vector<std::vector<Rational>> chain;   // sturm chain
    std::vector<std::vector<Rational>> quots;   // sturm quotients
    std::vector<TraceStep> trace;               // squaring trace
    std::vector<Rational> values;               // rational evaluations
    long point_hi = 0;                          // pointwise: integer points n0..point_hi checked

    bool operator==(const CertWitness&) const = default;
};

struct SignCert {
    Claim claim;
    CertMethod method = CertMethod::trivial;
    Sign sign = Sign::zero;
    CertWitness witness;
    std::vector<SignCert> parts;  // composite certificates
    bool verified = false;
    double wall_ms = 0.0;
};

struct RayCertFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// All nonzero coefficients share a sign and the constant term is nonzero.
inline Sign one_sign_coeffs(const std::vector<Rational>& cs) {
    if (cs.empty()) return Sign::zero;
    if (sign_of(cs.front()) == 0) return Sign::zero;
    int s = 0;
    for (const auto& c : cs) {
        int cc = sign_of(c);
        if (cc == 0) continue;
        if (s == 0) s = cc;
        else if (s != cc) return Sign::zero;
    }
    return sign_from_int(s);
}

inline std::vector<Rational> coeff_vector(const UniPoly& p) { return p.coeffs(); }

// Cauchy bound: every real root has |x| <= 1 + max |a_i / a_deg|.
inline Rational cauchy_root_bound(const UniPoly& p) {
    Rational m(0);
    const Rational lead = abs(p.lc());
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = abs(p.coeff(i)) / lead;
        if (q > m) m = q;
    }
    return m + 1;
}

}  // namespace detail

inline std::optional<SignCert> try_descartes_shift(const UniPoly& p, long n0, const Claim& claim) {
    auto t0 = std::chrono::steady_clock::now();
    UniPoly q = p.shift(n0);
    Sign s = detail::one_sign_coeffs(q.coeffs());
    if (s == Sign::zero) return std::nullopt;
    SignCert cert;
    cert.claim = claim;
    cert.method = CertMethod::descartes_shift;
    cert.sign = s;
    cert.witness.poly = p.coeffs();
    cert.witness.shifted = q.coeffs();
    cert.verified = true;
    cert.wall_ms = detail::ms_since(t0);
    return cert;
}

inline std::optional<SignCert> try_sturm_ray(const UniPoly& p, long n0, const Claim& claim) {
    auto t0 = std::chrono::steady_clock::now();
    const Rational x0(n0);
    if (sign_of(p.eval(x0)) == 0) return std::nullopt;
    SturmChain chain = sturm_chain(p);
    if (sturm_roots_right_of(chain, x0) != 0) return std::nullopt;
    SignCert cert;
    cert.claim = claim;
    cert.method = CertMethod::sturm;
    cert.sign = sign_from_int(sign_of(p.eval(x0)));
    cert.witness.poly = p.coeffs();
    for (const auto& q : chain.polys) cert.witness.chain.push_back(q.coeffs());
    for (const auto& q : chain.quots) cert.witness.quots.push_back(q.coeffs());
    cert.verified = true;
    cert.wall_ms = detail::ms_since(t0);
    return cert;
}

// Integer-only fallback: checks every integer in [n0, B] for a Cauchy root
// bound B, plus the leading-coefficient sign beyond B. Only certifies the
// claim over the integers.
inline SignCert pointwise_integer_cert(const UniPoly& p, long n0, const Claim& claim) {
    auto t0 = std::chrono::steady_clock::now();
    Rational bound = detail::cauchy_root_bound(p);
    long hi = static_cast<long>(ceil_rat(bound).get_si());
    if (hi < n0) hi = n0;
    if (hi - n0 > 200000) throw RayCertFail("pointwise fallback range too large for " + claim.expr);
    int s = sign_of(p.lc());
    for (long n = n0; n <= hi; ++n) {
        if (sign_of(p.eval(n)) != s)
            throw RayCertFail("sign claim false at integer n=" + std::to_string(n) + " for " + claim.expr);
    }
    SignCert cert;
    cert.claim = claim;
    cert.method = CertMethod::pointwise;
    cert.sign = sign_from_int(s);
    cert.witness.poly = p.coeffs();
    cert.witness.point_hi = hi;
    cert.verified = true;
    cert.wall_ms = detail::ms_since(t0);
    return cert;
}

// Full escalation ladder. Throws RayCertFail when the claim is false even
// over the integers.
inline SignCert poly_sign_on_ray(const UniPoly& p, long n0, Claim claim) {
    if (p.is_zero()) throw std::domain_error("poly_sign_on_ray of the zero polynomial");
    claim.kind = claim.kind.empty() ? "poly_ray" : claim.kind;
    claim.n0 = n0;
    if (p.degree() == 0) {
        SignCert cert;
        cert.claim = claim;
        cert.claim.sign = sign_from_int(sign_of(p.coeff(0)));
        cert.method = CertMethod::trivial;
        cert.sign = cert.claim.sign;
        cert.witness.poly = p.coeffs();
        cert.verified = true;
        return cert;
    }
    if (auto c = try_descartes_shift(p, n0, claim)) {
        c->claim.sign = c->sign;
        return *c;
    }
    if (auto c = try_sturm_ray(p, n0, claim)) {
        c->claim.sign = c->sign;
        return *c;
    }
    SignCert c = pointwise_integer_cert(p, n0, claim);
    c.claim.sign = c.sign;
    return c;
}

// Composite certificate for num/den on a ray; throws on a pole at or past n0
// (the denominator certificate would fail).
inline SignCert ratfunc_sign_on_ray(const RatFunc& f, long n0, Claim claim) {
    if (f.is_zero()) throw std::domain_error("ratfunc_sign_on_ray of the zero function");
    claim.kind = "ratfunc_ray";
    claim.n0 = n0;
    Claim num_claim = claim, den_claim = claim;
    num_claim.kind = "poly_ray";
    num_claim.expr = claim.expr + ".num";
    den_claim.kind = "poly_ray";
    den_claim.expr = claim.expr + ".den";
    SignCert num_cert = poly_sign_on_ray(f.num(), n0, num_claim);
    SignCert den_cert = poly_sign_on_ray(f.den(), n0, den_claim);
    SignCert cert;
    cert.claim = claim;
    cert.method = CertMethod::composite;
    cert.sign = sign_from_int(sign_to_int(num_cert.sign) * sign_to_int(den_cert.sign));
    cert.claim.sign = cert.sign;
    cert.parts = {std::move(num_cert), std::move(den_cert)};
    cert.verified = cert.parts[0].verified && cert.parts[1].verified;
    cert.wall_ms = cert.parts[0].wall_ms + cert.parts[1].wall_ms;
    return cert;
}

namespace detail {

struct TraceRecorder {
    std::vector<TraceStep>* out;
    int cmp(const std::string& tag, const Rational& lhs, const Rational& rhs) {
        int rel = sign_of(lhs - rhs);
        if (out) out->push_back({tag, lhs, rhs, rel});
        return rel;
    }
};

// sign(A + B*sqrt(u)) with u >= 0.
inline int sqrtsum_one_root(const Rational& A, const Rational& B, const Rational& u, TraceRecorder& rec) {
    const bool root_term = sign_of(B) != 0 && sign_of(u) != 0;
    if (!root_term) return rec.cmp("rational-sign", A, Rational(0));
    if (sign_of(A) == 0) return rec.cmp("pure-root-sign", B, Rational(0));
    int sa = sign_of(A), sb = sign_of(B);
    if (sa == sb) return rec.cmp("aligned-sign", A, Rational(0));
    // |A| vs |B| sqrt(u): square both sides, orientation carried by sa.
    int sq = rec.cmp("square-cmp", A * A, B * B * u);
    if (sq == 0) return 0;
    return sq > 0 ? sa : sb;
}

}  // namespace detail

// Exact sign of A + B*sqrt(u) + C*sqrt(v) for nonnegative rational u, v.
inline SignCert sqrtsum_sign_at(const Rational& A, const Rational& B, const Rational& C,
                                const Rational& u, const Rational& v, Claim claim = {}) {
    if (sign_of(u) < 0 || sign_of(v) < 0)
        throw std::domain_error("sqrtsum_sign_at: negative radicand");
    auto t0 = std::chrono::steady_clock::now();
    SignCert cert;
    claim.kind = "sqrtsum";
    if (claim.aux.empty()) claim.aux = {A, B, C, u, v};
    cert.claim = claim;
    cert.method = CertMethod::squaring_trace;
    detail::TraceRecorder rec{&cert.witness.trace};

    const bool bu = sign_of(B) != 0 && sign_of(u) != 0;
    const bool cv = sign_of(C) != 0 && sign_of(v) != 0;
    int result;
    if (!bu && !cv) {
        result = rec.cmp("rational-sign", A, Rational(0));
    } else if (bu != cv) {
        const Rational& coef = bu ? B : C;
        const Rational& rad = bu ? u : v;
        result = detail::sqrtsum_one_root(A, coef, rad, rec);
    } else {
        // s = B sqrt(u) + C sqrt(v)
        int sb = sign_of(B), sc = sign_of(C);
        int s_sign;
        if (sb == sc) {
            s_sign = rec.cmp("roots-aligned", Rational(sb), Rational(0));
        } else {
            int sq = rec.cmp("roots-square-cmp", B * B * u, C * C * v);
            s_sign = sq == 0 ? 0 : (sq > 0 ? sb : sc);
        }
        if (s_sign == 0) {
            result = rec.cmp("rational-sign", A, Rational(0));
        } else if (sign_of(A) == 0) {
            result = s_sign;
            rec.cmp("pure-roots-sign", Rational(s_sign), Rational(0));
        } else if (sign_of(A) == s_sign) {
            result = rec.cmp("aligned-sign", A, Rational(0));
        } else {
            // compare A^2 with (B sqrt(u) + C sqrt(v))^2 = B^2 u + C^2 v + 2BC sqrt(uv)
            Rational D = A * A - B * B * u - C * C * v;
            Rational E = Rational(2) * B * C;
            int inner = detail::sqrtsum_one_root(D, -E, u * v, rec);
            // inner = sign(A^2 - s^2)
            result = inner == 0 ? 0 : (inner > 0 ? sign_of(A) : s_sign);
        }
    }
    cert.sign = sign_from_int(result);
    cert.claim.sign = cert.sign;
    cert.verified = true;
    cert.wall_ms = detail::ms_since(t0);
    return cert;
}

// ---------------------------------------------------------------------------
// Replay: re-checks a certificate from its witness data. The expression
// binding (that witness.poly really is d_k, etc.) is checked by the caller
// via the claim registry; this layer validates the method-level argument.
// ---------------------------------------------------------------------------

namespace detail {

inline UniPoly poly_from(const std::vector<Rational>& cs) { return UniPoly(std::vector<Rational>(cs)); }

inline bool replay_descartes(const SignCert& c) {
    if (c.witness.poly.empty() || c.witness.shifted.empty()) return false;
    UniPoly p = poly_from(c.witness.poly);
    UniPoly q = poly_from(c.witness.shifted);
    if (q.degree() != p.degree()) return false;
    // shift identity, checked by evaluation at deg+1 points
    for (long t = 0; t <= p.degree(); ++t)
        if (q.eval(t) != p.eval(Rational(c.claim.n0 + t))) return false;
    return one_sign_coeffs(q.coeffs()) == c.sign && c.sign != Sign::zero;
}

inline bool replay_sturm(const SignCert& c) {
    if (c.witness.chain.size() < 2) return false;
    std::vector<UniPoly> chain;
    chain.reserve(c.witness.chain.size());
    for (const auto& cs : c.witness.chain) chain.push_back(poly_from(cs));
    UniPoly p = poly_from(c.witness.poly);
    if (chain.front() != p || chain[1] != p.derivative()) return false;
    if (c.witness.quots.size() + 1 != chain.size()) return false;
    if (chain.back().is_zero()) return false;
    // division identities p_{i-1} = q_i p_i - p_{i+1} with degrees decreasing,
    // which pins the chain as the canonical signed-remainder sequence
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        UniPoly qi = poly_from(c.witness.quots[i]);
        UniPoly next = (i + 2 < chain.size()) ? chain[i + 2] : UniPoly{};
        if (chain[i] != qi * chain[i + 1] - next) return false;
        if (!next.is_zero() && next.degree() >= chain[i + 1].degree()) return false;
    }
    SturmChain sc;
    sc.polys = chain;
    Rational x0(c.claim.n0);
    if (sign_of(p.eval(x0)) != sign_to_int(c.sign)) return false;
    return sturm_variations_at(sc, x0) == sturm_variations_at_inf(sc);
}

inline bool replay_pointwise(const SignCert& c) {
    UniPoly p = poly_from(c.witness.poly);
    if (p.is_zero()) return false;
    if (sign_of(p.lc()) != sign_to_int(c.sign)) return false;
    long hi_needed = static_cast<long>(ceil_rat(cauchy_root_bound(p)).get_si());
    if (hi_needed < c.claim.n0) hi_needed = c.claim.n0;
    if (c.witness.point_hi < hi_needed) return false;
    for (long n = c.claim.n0; n <= c.witness.point_hi; ++n)
        if (sign_of(p.eval(n)) != sign_to_int(c.sign)) return false;
    return true;
}

}  // namespace detail

inline bool replay_sign_cert(const SignCert& c) {
    switch (c.method) {
        case CertMethod::trivial: {
            if (c.claim.kind == "note") return true;
            UniPoly p = detail::poly_from(c.witness.poly);
            return p.degree() <= 0 && sign_from_int(sign_of(p.coeff(0))) == c.sign;
        }
        case CertMethod::descartes_shift:
            return detail::replay_descartes(c);
        case CertMethod::sturm:
            return detail::replay_sturm(c);
        case CertMethod::pointwise:
            return detail::replay_pointwise(c);
        case CertMethod::squaring_trace: {
            if (c.claim.aux.size() != 5) return false;
            SignCert fresh = sqrtsum_sign_at(c.claim.aux[0], c.claim.aux[1], c.claim.aux[2],
                                             c.claim.aux[3], c.claim.aux[4]);
            return fresh.sign == c.sign && fresh.witness.trace == c.witness.trace;
        }
        case CertMethod::composite: {
            if (c.parts.size() != 2) return false;
            int prod = 1;
            for (const auto& part : c.parts) {
                if (!replay_sign_cert(part)) return false;
                prod *= sign_to_int(part.sign);
            }
            return sign_from_int(prod) == c.sign;
        }
        case CertMethod::rational_eval:
            // values are claim-specific; the domain layer re-derives them
            return !c.witness.values.empty();
    }
    return false;
}

}  // namespace ycert
