#pragma once

// Root intervals (x_k, y_k) of the feasibility quadratic
//   d_k/(2(n-2)) c^2 - (n-2) c + (n-2) u_k/(2 nu_k^2) < 0
// at fixed integer n, their exact intersection over k <= k_max, and rational
// witnesses proving nonemptiness by pure rational arithmetic.

#include "ycert/sign.hpp"
#include "ycert/spectral.hpp"

namespace ycert {

// Pointwise evaluations of one (omega, k) coefficient row.
struct SpectralRow {
    SpectralParams params;
    UniPoly nu_poly, d_poly;
    RatFunc u_func, delta_func;
};

struct WindowContext {
    int omega = 0;
    int k_max = 0;
    std::vector<SpectralRow> rows;  // index k-1

    static WindowContext make(int omega, int k_max) {
        if (k_max < 1 || k_max > k_max_worst_case(omega))
            throw std::domain_error("WindowContext: k_max out of range");
        WindowContext ctx;
        ctx.omega = omega;
        ctx.k_max = k_max;
        for (int k = 1; k <= k_max; ++k) {
            SpectralParams p(omega, k);
            ctx.rows.push_back({p, nu(p), d(p), u(p), delta(p)});
        }
        return ctx;
    }
};

// One root ((n-2)^2 + side (n-2) sqrt(Delta_k)) / d_k, held as
// rat_part + coef * sqrt(disc) with exact rational parts.
struct AlgEndpoint {
    int omega = 0, k = 0;
    long n = 0;
    bool upper = false;  // y_k if true, x_k otherwise
    Rational rat_part;   // (n-2)^2 / d_k
    Rational coef;       // +-(n-2)/d_k
    Rational disc;       // Delta_k(n), positive

    Rational lower_bound(const Int& scale) const {
        auto [lo, hi] = sqrt_bounds(disc, scale);
        return rat_part + coef * (sign_of(coef) >= 0 ? lo : hi);
    }
    Rational upper_bound(const Int& scale) const {
        auto [lo, hi] = sqrt_bounds(disc, scale);
        return rat_part + coef * (sign_of(coef) >= 0 ? hi : lo);
    }
};

struct DiscriminantNotPositive : std::runtime_error {
    DiscriminantNotPositive(int omega, int k, long n)
        : std::runtime_error("Delta_" + std::to_string(k) + " not positive at omega=" +
                             std::to_string(omega) + ", n=" + std::to_string(n)) {}
};

inline std::pair<AlgEndpoint, AlgEndpoint> roots(const SpectralRow& row, long n) {
    const int omega = row.params.omega;
    if (n < ray_start(omega)) throw std::domain_error("roots: n below 2*omega+6");
    Rational dv = row.d_poly.eval(n);
    Rational disc = row.delta_func.eval(n);
    if (sign_of(disc) <= 0 || sign_of(dv) <= 0) throw DiscriminantNotPositive(omega, row.params.k, n);
    Rational base = rat(n - 2, 1) * rat(n - 2, 1) / dv;
    Rational coef = rat(n - 2, 1) / dv;
    AlgEndpoint x{omega, row.params.k, n, false, base, -coef, disc};
    AlgEndpoint y{omega, row.params.k, n, true, base, coef, disc};
    return {x, y};
}

inline std::pair<AlgEndpoint, AlgEndpoint> roots(SpectralParams p, long n) {
    SpectralRow row{p, nu(p), d(p), u(p), delta(p)};
    return roots(row, n);
}

// sign(e1 - e2) as an exact squaring-trace certificate.
inline SignCert endpoint_compare(const AlgEndpoint& e1, const AlgEndpoint& e2) {
    Claim claim;
    claim.kind = "sqrtsum";
    claim.expr = std::string("cmp:") + (e1.upper ? "y" : "x") + "-" + (e2.upper ? "y" : "x");
    claim.omega = e1.omega;
    claim.k = e1.k;
    claim.j = e2.k;
    claim.n = e1.n;
    return sqrtsum_sign_at(e1.rat_part - e2.rat_part, e1.coef, -e2.coef, e1.disc, e2.disc, claim);
}

// Pure rational check of the feasibility quadratic at c for every k <= k_max.
// This is the binding, square-root-free proof of a witness.
inline SignCert witness_verify(const WindowContext& ctx, long n, const Rational& c, int k_max) {
    if (k_max < 1 || k_max > ctx.k_max) throw std::domain_error("witness_verify: bad k_max");
    auto t0 = std::chrono::steady_clock::now();
    SignCert cert;
    cert.claim.kind = "window_witness";
    cert.claim.expr = "feasibility-quadratic";
    cert.claim.omega = ctx.omega;
    cert.claim.n = n;
    cert.claim.k = k_max;
    cert.claim.sign = Sign::negative;
    cert.claim.aux = {c};
    cert.method = CertMethod::rational_eval;
    cert.sign = Sign::negative;
    const Rational nm2 = rat(n - 2, 1);
    bool ok = true;
    for (int k = 1; k <= k_max; ++k) {
        const SpectralRow& row = ctx.rows[static_cast<size_t>(k - 1)];
        Rational dv = row.d_poly.eval(n);
        Rational nv = row.nu_poly.eval(n);
        Rational uv = row.u_func.eval(n);
        Rational v = dv / (2 * nm2) * c * c - nm2 * c + nm2 * uv / (2 * nv * nv);
        cert.witness.values.push_back(v);
        ok = ok && sign_of(v) < 0;
    }
    cert.verified = ok;
    cert.wall_ms = detail::ms_since(t0);
    return cert;
}

inline SignCert witness_verify(int omega, long n, const Rational& c, int k_max) {
    return witness_verify(WindowContext::make(omega, k_max), n, c, k_max);
}

struct CWindow {
    int omega = 0;
    long n = 0;
    int k_max = 0;
    std::vector<std::pair<AlgEndpoint, AlgEndpoint>> endpoints;  // (x_k, y_k)
    int argmax_x = 0, argmin_y = 0;
    bool nonempty = false;
    Rational witness;                 // set when nonempty
    std::pair<int, int> separating;   // (k, j) with y_k <= x_j when empty
    SignCert cert;                    // window_witness or the separating sqrtsum
    std::vector<SignCert> comparisons;  // selection traces
};

// Exact intersection of the open intervals (x_k, y_k) for k = 1..k_max.
inline CWindow window(const WindowContext& ctx, long n, int k_max) {
    if (k_max < 1 || k_max > ctx.k_max) throw std::domain_error("window: bad k_max");
    CWindow w;
    w.omega = ctx.omega;
    w.n = n;
    w.k_max = k_max;
    for (int k = 1; k <= k_max; ++k) w.endpoints.push_back(roots(ctx.rows[static_cast<size_t>(k - 1)], n));

    auto x_of = [&](int k) -> const AlgEndpoint& { return w.endpoints[static_cast<size_t>(k - 1)].first; };
    auto y_of = [&](int k) -> const AlgEndpoint& { return w.endpoints[static_cast<size_t>(k - 1)].second; };

    int kx = 1, ky = 1;
    for (int k = 2; k <= k_max; ++k) {
        SignCert cx = endpoint_compare(x_of(k), x_of(kx));
        if (cx.sign == Sign::positive) kx = k;
        w.comparisons.push_back(std::move(cx));
        SignCert cy = endpoint_compare(y_of(k), y_of(ky));
        if (cy.sign == Sign::negative) ky = k;
        w.comparisons.push_back(std::move(cy));
    }
    w.argmax_x = kx;
    w.argmin_y = ky;

    if (kx != ky) {
        SignCert gap = endpoint_compare(y_of(ky), x_of(kx));
        if (gap.sign != Sign::positive) {
            w.nonempty = false;
            w.separating = {ky, kx};
            gap.claim.kind = "window_empty";
            w.cert = std::move(gap);
            return w;
        }
        w.comparisons.push_back(std::move(gap));
    }
    w.nonempty = true;

    // Witness: rational midpoint approximation (denominator <= 10^6), with
    // exact fallbacks inside a rational enclosure of the window.
    const Int den_bound = Int(1000000);
    std::vector<Rational> candidates;
    if (kx == ky) candidates.push_back(x_of(kx).rat_part);  // exact interval midpoint
    Int scale("1000000000000");
    for (int attempt = 0; attempt < 6; ++attempt, scale *= scale) {
        Rational x_hi = x_of(kx).upper_bound(scale);
        Rational y_lo = y_of(ky).lower_bound(scale);
        if (x_hi < y_lo) {
            Rational mid = (x_hi + y_lo) / 2;
            candidates.push_back(best_approx_max_den(mid, den_bound));
            candidates.push_back(simplest_in_open(x_hi, y_lo));
            candidates.push_back(mid);
            break;
        }
    }
    for (const Rational& c : candidates) {
        SignCert v = witness_verify(ctx, n, c, k_max);
        if (v.verified) {
            w.witness = c;
            w.cert = std::move(v);
            return w;
        }
    }
    throw std::logic_error("window: failed to select a witness in a nonempty window");
}

inline CWindow window(int omega, long n, int k_max) {
    return window(WindowContext::make(omega, k_max), n, k_max);
}

}  // namespace ycert
