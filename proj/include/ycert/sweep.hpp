#pragma once

// Batch drivers behind the CLI: full certification sweeps, falsification
// scans, and the dimension-by-dimension corollary table.

#include "ycert/report.hpp"
#include "ycert/oracle.hpp"

namespace ycert {

namespace detail {

inline void append_bundle(std::vector<SignCert>& out, OmegaBundle&& b) {
    for (auto& c : b.poly.certs) out.push_back(std::move(c));
    out.push_back(std::move(b.mu_branch));
    for (auto& c : b.inter.delta_pos) out.push_back(std::move(c));
    for (auto& m : b.inter.minorants) {
        out.push_back(std::move(m.positive));
        out.push_back(std::move(m.gap));
    }
    for (auto& p : b.inter.pairs) {
        out.push_back(std::move(p.d_diff));
        out.push_back(std::move(p.G));
    }
    for (auto& w : b.inter.windows) out.push_back(std::move(w.cert));
}

}  // namespace detail

// certify --omega A..B: Descartes/Sturm ray certificates for the polynomial
// lemma, exhaustive windows with rational witnesses, and square-root-free
// tail certificates. Verdict CERTIFIED only if every piece replays.
inline LemmaReport cmd_certify(const RunConfig& config) {
    config.validate();
    auto t0 = std::chrono::steady_clock::now();
    LemmaReport rep;
    rep.config = config;
    rep.verdict = Verdict::certified;
    for (int omega = config.omega_lo; omega <= config.omega_hi; ++omega) {
        int k_cap = k_max_worst_case(omega);
        int q = config.q > 0 ? std::min(config.q, k_cap) : 0;
        OmegaBundle b = certify_omega(omega, config.n_tail, config.n_exhaustive_max, q, config.threads);
        if (b.inter.empty_window_at) {
            const long n_bad = *b.inter.empty_window_at;
            rep.verdict = Verdict::falsified;
            for (const auto& w : b.inter.windows) {
                if (w.n == n_bad) {
                    rep.falsified = FalsifiedAt{omega, n_bad, w.separating};
                    rep.certificates.push_back(w.cert);
                    break;
                }
            }
            break;
        }
        for (const auto& item : b.inter.inconclusive) rep.inconclusive_items.push_back(item);
        if (!b.certified && b.inter.inconclusive.empty())
            rep.inconclusive_items.push_back("uncertified bundle at omega=" + std::to_string(omega));
        detail::append_bundle(rep.certificates, std::move(b));
    }
    if (rep.verdict != Verdict::falsified && !rep.inconclusive_items.empty())
        rep.verdict = Verdict::inconclusive;
    rep.wall_ms_total = detail::ms_since(t0);
    return rep;
}

// falsify --omega W --n A..B: scan for the smallest n whose worst-case
// window is empty. Every nonempty window below it is certified by witness,
// so the minimality of the reported n replays too.
inline LemmaReport cmd_falsify(int omega, long n_lo, long n_hi, int threads = 0, int q = 0) {
    if (omega < 3) throw std::invalid_argument("falsify: omega must be >= 3");
    if (n_lo < ray_start(omega))
        throw std::invalid_argument("falsify: scan must start at or after n = " + std::to_string(ray_start(omega)));
    if (n_hi < n_lo) throw std::invalid_argument("falsify: empty n range");
    auto t0 = std::chrono::steady_clock::now();
    LemmaReport rep;
    rep.config.omega_lo = rep.config.omega_hi = omega;
    rep.config.n_exhaustive_max = n_hi;
    rep.config.n_tail = n_hi;
    rep.config.q = q;
    rep.config.threads = threads;
    const int k_max = q > 0 ? std::min(q, k_max_worst_case(omega)) : k_max_worst_case(omega);
    const WindowContext ctx = WindowContext::make(omega, k_max);

    const long chunk = 256;
    bool found = false;
    for (long base = n_lo; base <= n_hi && !found; base += chunk) {
        const long hi = std::min(n_hi, base + chunk - 1);
        std::vector<CWindow> block(static_cast<size_t>(hi - base + 1));
        parallel_for(block.size(), threads,
                     [&](size_t i) { block[i] = window(ctx, base + static_cast<long>(i), k_max); });
        for (auto& w : block) {
            if (!w.nonempty) {
                rep.falsified = FalsifiedAt{omega, w.n, w.separating};
                rep.certificates.push_back(w.cert);
                found = true;
                break;
            }
            rep.certificates.push_back(std::move(w.cert));
        }
    }
    rep.verdict = found ? Verdict::falsified : Verdict::certified;
    rep.wall_ms_total = detail::ms_since(t0);
    return rep;
}

// sweep-corollary: for every dimension n in [3, 37], certify the window of
// every in-scope omega <= (n-6)/2, recording explicit deferrals otherwise.
inline LemmaReport cmd_sweep_corollary(int threads = 0) {
    auto t0 = std::chrono::steady_clock::now();
    LemmaReport rep;
    rep.config.omega_lo = 3;
    rep.config.omega_hi = 15;
    rep.config.n_exhaustive_max = 37;
    rep.config.n_tail = 37;
    rep.config.threads = threads;
    rep.verdict = Verdict::certified;
    for (long dim = 3; dim <= 37; ++dim) {
        CorollaryRow row;
        row.dim = dim;
        const long omega_cap = (dim - 6) / 2;
        if (omega_cap < 3) {
            row.deferred = "no omega in [3,(n-6)/2]; low-dimension or low-order cases settle it";
        } else {
            for (int omega = 3; omega <= static_cast<int>(std::min<long>(omega_cap, 15)); ++omega) {
                CWindow w = window(omega, dim, k_max_worst_case(omega));
                if (!w.nonempty) {
                    rep.verdict = Verdict::falsified;
                    rep.falsified = FalsifiedAt{omega, dim, w.separating};
                    rep.certificates.push_back(w.cert);
                    return rep;
                }
                rep.certificates.push_back(std::move(w.cert));
                row.omegas.push_back(omega);
            }
            // omega <= 2 and omega > (n-6)/2 always defer to the general theory
        }
        rep.corollary.push_back(std::move(row));
    }
    rep.wall_ms_total = detail::ms_since(t0);
    return rep;
}

inline int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::certified: return 0;
        case Verdict::falsified: return 1;
        default: return 2;
    }
}

}  // namespace ycert
