#pragma once

// Report model and serialization. JSON schema v1:
//   { "schema": 1, "config": {...}, "certificates": [...], "verdict": "..." }
// with optional "falsified" / "inconclusive" / "corollary" blocks for the
// non-certified outcomes and the dimension sweep. Emission order is fixed so
// identical configurations give byte-identical output modulo wall_time_ms.

#include "ycert/claims.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ycert {

using json = nlohmann::ordered_json;

enum class Verdict { certified, falsified, inconclusive };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::certified: return "CERTIFIED";
        case Verdict::falsified: return "FALSIFIED";
        default: return "INCONCLUSIVE";
    }
}

struct RunConfig {
    int omega_lo = 3;
    int omega_hi = 15;
    long n_exhaustive_max = 200;
    long n_tail = 200;
    int q = 0;  // 0: worst case floor(omega/2)
    int precision = 60;
    std::string format = "json";
    int threads = 0;
    std::string out_dir;

    void validate() const {
        if (omega_lo < 3)
            throw std::invalid_argument("omega <= 2 is covered by the low-order theory; this tool starts at 3");
        if (omega_hi < omega_lo) throw std::invalid_argument("empty omega range");
        if (n_exhaustive_max < 2L * omega_lo + 6)
            throw std::invalid_argument("n_exhaustive_max must be at least 2*omega+6");
        if (n_tail < n_exhaustive_max) throw std::invalid_argument("n_tail must be >= n_exhaustive_max");
        if (precision < 30) throw std::invalid_argument("precision must be >= 30 digits");
        if (q < 0) throw std::invalid_argument("q must be positive when given");
    }
};

struct FalsifiedAt {
    int omega = 0;
    long n = 0;
    std::pair<int, int> pair{0, 0};  // y_first <= x_second
};

struct CorollaryRow {
    long dim = 0;                  // the dimension n in [3, 37]
    std::vector<int> omegas;       // in-scope omega values, all certified
    std::string deferred;          // nonempty when no omega is in scope
};

struct LemmaReport {
    int schema = 1;
    RunConfig config;
    Verdict verdict = Verdict::inconclusive;
    std::vector<SignCert> certificates;
    std::optional<FalsifiedAt> falsified;
    std::vector<std::string> inconclusive_items;
    std::vector<CorollaryRow> corollary;  // cmd_sweep_corollary only
    double wall_ms_total = 0;
};

// --------------------------- JSON emission --------------------------------

namespace detail {

inline json rat_json(const Rational& r) { return rat_str(r); }

inline json rat_list_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_json(r));
    return a;
}

inline json poly_list_json(const std::vector<std::vector<Rational>>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(rat_list_json(p));
    return a;
}

inline json cert_json(const SignCert& c) {
    json claim;
    claim["kind"] = c.claim.kind;
    claim["expr"] = c.claim.expr;
    claim["sign"] = sign_name(c.claim.sign);
    if (!c.claim.aux.empty()) claim["aux"] = rat_list_json(c.claim.aux);

    json domain;
    domain["omega"] = c.claim.omega;
    if (c.claim.k) domain["k"] = c.claim.k;
    if (c.claim.j) domain["j"] = c.claim.j;
    if (c.claim.n) domain["n"] = c.claim.n;
    if (c.claim.n0) domain["n_range"] = json::array({c.claim.n0, nullptr});

    json witness = json::object();
    if (!c.witness.poly.empty()) witness["poly"] = rat_list_json(c.witness.poly);
    if (!c.witness.shifted.empty()) witness["shifted"] = rat_list_json(c.witness.shifted);
    if (!c.witness.chain.empty()) witness["chain"] = poly_list_json(c.witness.chain);
    if (!c.witness.quots.empty()) witness["quots"] = poly_list_json(c.witness.quots);
    if (!c.witness.trace.empty()) {
        json steps = json::array();
        for (const auto& s : c.witness.trace)
            steps.push_back(json{{"tag", s.tag}, {"lhs", rat_json(s.lhs)}, {"rhs", rat_json(s.rhs)}, {"rel", s.rel}});
        witness["trace"] = steps;
    }
    if (!c.witness.values.empty()) witness["values"] = rat_list_json(c.witness.values);
    if (c.witness.point_hi) witness["point_hi"] = c.witness.point_hi;

    json out;
    out["claim"] = claim;
    out["domain"] = domain;
    out["method"] = method_name(c.method);
    out["witness"] = witness;
    if (!c.parts.empty()) {
        json parts = json::array();
        for (const auto& p : c.parts) parts.push_back(cert_json(p));
        out["parts"] = parts;
    }
    out["verified"] = c.verified;
    out["wall_time_ms"] = c.wall_ms;
    return out;
}

inline json config_json(const RunConfig& c) {
    json j;
    j["omega_lo"] = c.omega_lo;
    j["omega_hi"] = c.omega_hi;
    j["n_exhaustive_max"] = c.n_exhaustive_max;
    j["n_tail"] = c.n_tail;
    j["q"] = c.q;
    j["precision"] = c.precision;
    j["format"] = c.format;
    j["threads"] = c.threads;
    return j;
}

}  // namespace detail

inline json emit_json(const LemmaReport& rep) {
    json j;
    j["schema"] = rep.schema;
    j["config"] = detail::config_json(rep.config);
    json certs = json::array();
    for (const auto& c : rep.certificates) certs.push_back(detail::cert_json(c));
    j["certificates"] = certs;
    j["verdict"] = verdict_name(rep.verdict);
    if (rep.falsified) {
        j["falsified"] = json{{"omega", rep.falsified->omega},
                              {"n", rep.falsified->n},
                              {"pair", json::array({rep.falsified->pair.first, rep.falsified->pair.second})}};
    }
    if (!rep.inconclusive_items.empty()) j["inconclusive"] = rep.inconclusive_items;
    if (!rep.corollary.empty()) {
        json rows = json::array();
        for (const auto& r : rep.corollary) {
            json row;
            row["n"] = r.dim;
            row["omegas"] = r.omegas;
            if (!r.deferred.empty()) row["deferred"] = r.deferred;
            rows.push_back(row);
        }
        j["corollary"] = rows;
    }
    j["wall_ms_total"] = rep.wall_ms_total;
    return j;
}

// --------------------------- JSON parsing ---------------------------------

namespace detail {

inline Sign sign_from_name(const std::string& s) {
    if (s == "negative") return Sign::negative;
    if (s == "positive") return Sign::positive;
    if (s == "zero") return Sign::zero;
    throw std::invalid_argument("bad sign name: " + s);
}

inline CertMethod method_from_name(const std::string& s) {
    for (CertMethod m : {CertMethod::trivial, CertMethod::descartes_shift, CertMethod::sturm,
                         CertMethod::squaring_trace, CertMethod::pointwise, CertMethod::rational_eval,
                         CertMethod::composite})
        if (method_name(m) == s) return m;
    throw std::invalid_argument("bad method name: " + s);
}

inline std::vector<Rational> parse_rat_list(const json& a) {
    std::vector<Rational> out;
    for (const auto& x : a) out.push_back(rat_from_string(x.get<std::string>()));
    return out;
}

inline SignCert parse_cert(const json& j) {
    SignCert c;
    const json& claim = j.at("claim");
    c.claim.kind = claim.at("kind").get<std::string>();
    c.claim.expr = claim.at("expr").get<std::string>();
    c.claim.sign = sign_from_name(claim.at("sign").get<std::string>());
    if (claim.contains("aux")) c.claim.aux = parse_rat_list(claim["aux"]);
    const json& domain = j.at("domain");
    c.claim.omega = domain.at("omega").get<int>();
    if (domain.contains("k")) c.claim.k = domain["k"].get<int>();
    if (domain.contains("j")) c.claim.j = domain["j"].get<int>();
    if (domain.contains("n")) c.claim.n = domain["n"].get<long>();
    if (domain.contains("n_range")) c.claim.n0 = domain["n_range"][0].get<long>();
    c.method = method_from_name(j.at("method").get<std::string>());
    c.sign = c.claim.sign;
    const json& w = j.at("witness");
    if (w.contains("poly")) c.witness.poly = parse_rat_list(w["poly"]);
    if (w.contains("shifted")) c.witness.shifted = parse_rat_list(w["shifted"]);
    if (w.contains("chain"))
        for (const auto& p : w["chain"]) c.witness.chain.push_back(parse_rat_list(p));
    if (w.contains("quots"))
        for (const auto& p : w["quots"]) c.witness.quots.push_back(parse_rat_list(p));
    if (w.contains("trace"))
        for (const auto& s : w["trace"])
            c.witness.trace.push_back(TraceStep{s.at("tag").get<std::string>(),
                                                rat_from_string(s.at("lhs").get<std::string>()),
                                                rat_from_string(s.at("rhs").get<std::string>()),
                                                s.at("rel").get<int>()});
    if (w.contains("values")) c.witness.values = parse_rat_list(w["values"]);
    if (w.contains("point_hi")) c.witness.point_hi = w["point_hi"].get<long>();
    if (j.contains("parts"))
        for (const auto& p : j["parts"]) c.parts.push_back(parse_cert(p));
    c.verified = j.at("verified").get<bool>();
    c.wall_ms = j.at("wall_time_ms").get<double>();
    return c;
}

}  // namespace detail

inline LemmaReport parse_json_report(const json& j) {
    LemmaReport rep;
    rep.schema = j.at("schema").get<int>();
    if (rep.schema != 1) throw std::invalid_argument("unsupported schema version");
    const json& c = j.at("config");
    rep.config.omega_lo = c.at("omega_lo").get<int>();
    rep.config.omega_hi = c.at("omega_hi").get<int>();
    rep.config.n_exhaustive_max = c.at("n_exhaustive_max").get<long>();
    rep.config.n_tail = c.at("n_tail").get<long>();
    rep.config.q = c.at("q").get<int>();
    rep.config.precision = c.at("precision").get<int>();
    rep.config.format = c.at("format").get<std::string>();
    rep.config.threads = c.at("threads").get<int>();
    for (const auto& cj : j.at("certificates")) rep.certificates.push_back(detail::parse_cert(cj));
    const std::string v = j.at("verdict").get<std::string>();
    rep.verdict = v == "CERTIFIED"   ? Verdict::certified
                  : v == "FALSIFIED" ? Verdict::falsified
                                     : Verdict::inconclusive;
    if (j.contains("falsified")) {
        FalsifiedAt f;
        f.omega = j["falsified"].at("omega").get<int>();
        f.n = j["falsified"].at("n").get<long>();
        f.pair = {j["falsified"].at("pair")[0].get<int>(), j["falsified"].at("pair")[1].get<int>()};
        rep.falsified = f;
    }
    if (j.contains("inconclusive"))
        for (const auto& s : j["inconclusive"]) rep.inconclusive_items.push_back(s.get<std::string>());
    if (j.contains("corollary"))
        for (const auto& r : j["corollary"]) {
            CorollaryRow row;
            row.dim = r.at("n").get<long>();
            for (const auto& o : r.at("omegas")) row.omegas.push_back(o.get<int>());
            if (r.contains("deferred")) row.deferred = r["deferred"].get<std::string>();
            rep.corollary.push_back(row);
        }
    if (j.contains("wall_ms_total")) rep.wall_ms_total = j["wall_ms_total"].get<double>();
    return rep;
}

inline LemmaReport load_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open report file: " + path);
    json j = json::parse(in);
    return parse_json_report(j);
}

// --------------------------- replay ---------------------------------------

struct ReplayResult {
    size_t total = 0;
    size_t failed = 0;
    std::vector<std::string> failures;
    bool ok() const { return failed == 0; }
};

inline ReplayResult replay_report(const LemmaReport& rep) {
    ReplayResult r;
    for (const auto& c : rep.certificates) {
        ++r.total;
        if (!verify_cert(c)) {
            ++r.failed;
            if (r.failures.size() < 32)
                r.failures.push_back(c.claim.kind + "/" + c.claim.expr + " omega=" +
                                     std::to_string(c.claim.omega) + " k=" + std::to_string(c.claim.k) +
                                     " n=" + std::to_string(c.claim.n ? c.claim.n : c.claim.n0));
        }
    }
    if (rep.verdict == Verdict::certified && r.failed != 0) r.failures.push_back("verdict CERTIFIED but replay failed");
    return r;
}

// --------------------------- Markdown -------------------------------------

inline std::string emit_markdown(const LemmaReport& rep) {
    std::ostringstream md;
    md << "# Feasibility window certification report\n\n";
    md << "- verdict: **" << verdict_name(rep.verdict) << "**\n";
    md << "- omega range: [" << rep.config.omega_lo << ", " << rep.config.omega_hi << "]\n";
    md << "- exhaustive n: [2*omega+6, " << rep.config.n_exhaustive_max << "], tail ray from n = "
       << rep.config.n_tail << "\n";
    md << "- certificates: " << rep.certificates.size() << "\n";
    if (rep.falsified)
        md << "- falsified at omega=" << rep.falsified->omega << ", n=" << rep.falsified->n
           << ", separating pair (y_" << rep.falsified->pair.first << " <= x_" << rep.falsified->pair.second
           << ")\n";
    if (!rep.inconclusive_items.empty()) {
        md << "- inconclusive items:\n";
        for (const auto& s : rep.inconclusive_items) md << "  - " << s << "\n";
    }
    md << "\n";

    if (!rep.corollary.empty()) {
        md << "## Dimension sweep\n\n| n | in-scope omega | status |\n|---|---|---|\n";
        for (const auto& row : rep.corollary) {
            md << "| " << row.dim << " | ";
            if (row.omegas.empty()) md << "(none)";
            for (size_t i = 0; i < row.omegas.size(); ++i) md << (i ? " " : "") << row.omegas[i];
            md << " | " << (row.deferred.empty() ? "certified" : row.deferred) << " |\n";
        }
        md << "\n";
    }

    // witness tables per omega, built from the window certificates
    std::map<int, std::vector<const SignCert*>> witnesses;
    for (const auto& c : rep.certificates)
        if (c.claim.kind == "window_witness") witnesses[c.claim.omega].push_back(&c);
    for (auto& [omega, certs] : witnesses) {
        std::sort(certs.begin(), certs.end(),
                  [](const SignCert* a, const SignCert* b) { return a->claim.n < b->claim.n; });
        md << "## omega = " << omega << "\n\n";
        md << "| n | witness c | verified |\n|---|---|---|\n";
        for (const SignCert* c : certs)
            md << "| " << c->claim.n << " | " << rat_str(c->claim.aux.at(0)) << " | "
               << (c->verified ? "yes" : "NO") << " |\n";
        md << "\n";
    }

    // tail minorants
    bool header = false;
    for (const auto& c : rep.certificates) {
        if (c.claim.kind == "poly_ray" && c.claim.expr == "pair_tail") {
            if (!header) {
                md << "## Tail pair certificates\n\n| omega | k | j | method | verified |\n|---|---|---|---|---|\n";
                header = true;
            }
            md << "| " << c.claim.omega << " | " << c.claim.k << " | " << c.claim.j << " | "
               << method_name(c.method) << " | " << (c.verified ? "yes" : "NO") << " |\n";
        }
    }
    return md.str();
}

inline void write_report_files(const LemmaReport& rep, const std::string& dir) {
    std::ofstream js(dir + "/report.json");
    if (!js) throw std::runtime_error("cannot write report.json under " + dir);
    js << emit_json(rep).dump(1) << "\n";
    std::ofstream md(dir + "/report.md");
    if (!md) throw std::runtime_error("cannot write report.md under " + dir);
    md << emit_markdown(rep);
}

}  // namespace ycert
