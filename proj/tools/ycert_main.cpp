// ycert: exact certificates for the spectral feasibility windows of the
// conformal test-function construction.
//
// Subcommands
//   certify          ray + window certificates over an omega range
//   falsify          scan for the smallest n with an empty worst-case window
//   sweep-corollary  dimension table n in [3,37]
//   window           inspect one (omega, n) window
//   recurrences      exact check of the integral recurrences
//   threshold        numeric threshold constant n(n-1) w_n^{2/n} m^{2/n}
//   verify           replay a persisted certificate file
//
// Exit codes: 0 certified / 1 falsified / 2 inconclusive / 3 usage.

#include "ycert/ycert.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

std::pair<long, long> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
}

int env_precision(int fallback) {
    if (const char* p = std::getenv("YC_PRECISION")) {
        int v = std::atoi(p);
        if (v >= 30) return v;
    }
    return fallback;
}

void maybe_write(const ycert::LemmaReport& rep, const std::string& out_dir, const std::string& format) {
    if (!out_dir.empty()) {
        ycert::write_report_files(rep, out_dir);
        std::cout << "report written to " << out_dir << "/report.{json,md}\n";
    } else if (format == "md") {
        std::cout << ycert::emit_markdown(rep);
    }
}

void print_verdict(const ycert::LemmaReport& rep) {
    std::cout << "verdict: " << ycert::verdict_name(rep.verdict);
    if (rep.falsified)
        std::cout << " at omega=" << rep.falsified->omega << ", n=" << rep.falsified->n
                  << " (separating pair y_" << rep.falsified->pair.first << " <= x_"
                  << rep.falsified->pair.second << ")";
    std::cout << "  [" << rep.certificates.size() << " certificates, "
              << static_cast<long>(rep.wall_ms_total) << " ms]\n";
    for (const auto& item : rep.inconclusive_items) std::cout << "  inconclusive: " << item << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of spectral feasibility windows"};
    app.require_subcommand(1);

    std::string omega_range = "3..15";
    std::string n_range;
    std::string format = "json";
    std::string out_dir;
    long n_max = 200, n_tail = 200;
    int q = 0, threads = 0, precision = 60;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|md")->check(CLI::IsMember({"json", "md"}));
        cmd->add_option("--out", out_dir, "directory for report.json / report.md");
        cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    };

    auto* certify = app.add_subcommand("certify", "certify the omega range end to end");
    certify->add_option("--omega", omega_range, "omega or A..B (default 3..15)");
    certify->add_option("--n-max", n_max, "exhaustive exact windows for n in [2*omega+6, n-max]");
    certify->add_option("--n-tail", n_tail, "ray certificates from this n on (>= n-max)");
    certify->add_option("--q", q, "restrict to k <= q instead of the worst case floor(omega/2)");
    certify->add_option("--precision", precision, "oracle digits (>= 30)");
    add_common(certify);

    auto* falsify = app.add_subcommand("falsify", "find the smallest n with an empty window");
    int f_omega = 16;
    std::string f_range = "38..2000";
    falsify->add_option("--omega", f_omega, "omega to refute (default 16)");
    falsify->add_option("--n", f_range, "scan range A..B (default 38..2000)");
    falsify->add_option("--q", q, "restrict to k <= q");
    add_common(falsify);

    auto* corollary = app.add_subcommand("sweep-corollary", "certify all dimensions n in [3,37]");
    add_common(corollary);

    auto* windowc = app.add_subcommand("window", "inspect one (omega, n) window");
    int w_omega = 3;
    long w_n = 12;
    windowc->add_option("--omega", w_omega)->required();
    windowc->add_option("--n", w_n)->required();
    windowc->add_option("--q", q, "restrict to k <= q");

    auto* recur = app.add_subcommand("recurrences", "exact check of the integral recurrences");
    long a_max = 30;
    recur->add_option("--a-max", a_max, "lattice bound (default 30)");

    auto* thresh = app.add_subcommand("threshold", "numeric threshold n(n-1) w_n^{2/n} m^{2/n}");
    long t_n = 3, t_m = 1;
    thresh->add_option("--n", t_n)->required();
    thresh->add_option("--m", t_m, "orbit cardinality factor (default 1)");
    thresh->add_option("--precision", precision, "digits");

    auto* verify = app.add_subcommand("verify", "replay a persisted certificate file");
    std::string verify_path;
    verify->add_option("file", verify_path, "report.json to replay")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    precision = env_precision(precision);

    try {
        if (certify->parsed()) {
            auto [lo, hi] = parse_range(omega_range);
            ycert::RunConfig cfg;
            cfg.omega_lo = static_cast<int>(lo);
            cfg.omega_hi = static_cast<int>(hi);
            cfg.n_exhaustive_max = n_max;
            cfg.n_tail = n_tail;
            cfg.q = q;
            cfg.precision = precision;
            cfg.format = format;
            cfg.threads = threads;
            cfg.out_dir = out_dir;
            ycert::LemmaReport rep = ycert::cmd_certify(cfg);
            print_verdict(rep);
            maybe_write(rep, out_dir, format);
            return ycert::exit_code_for(rep.verdict);
        }
        if (falsify->parsed()) {
            auto [lo, hi] = parse_range(f_range);
            ycert::LemmaReport rep = ycert::cmd_falsify(f_omega, lo, hi, threads, q);
            if (rep.falsified)
                std::cout << "first empty window: n = " << rep.falsified->n << " (separating pair y_"
                          << rep.falsified->pair.first << " <= x_" << rep.falsified->pair.second << ")\n";
            else
                std::cout << "none found in [" << lo << ", " << hi << "]\n";
            maybe_write(rep, out_dir, format);
            return ycert::exit_code_for(rep.verdict);
        }
        if (corollary->parsed()) {
            ycert::LemmaReport rep = ycert::cmd_sweep_corollary(threads);
            print_verdict(rep);
            maybe_write(rep, out_dir, format);
            return ycert::exit_code_for(rep.verdict);
        }
        if (windowc->parsed()) {
            int km = q > 0 ? q : ycert::k_max_worst_case(w_omega);
            ycert::CWindow w = ycert::window(w_omega, w_n, km);
            std::cout << "omega=" << w.omega << " n=" << w.n << " k_max=" << w.k_max << "\n";
            for (int k = 1; k <= w.k_max; ++k) {
                const auto& [x, y] = w.endpoints[static_cast<size_t>(k - 1)];
                std::cout << "  k=" << k << "  x ~ " << ycert::eval_hp(x, 20).str(8) << "  y ~ "
                          << ycert::eval_hp(y, 20).str(8) << "\n";
            }
            if (w.nonempty)
                std::cout << "nonempty, witness c = " << ycert::rat_str(w.witness) << "\n";
            else
                std::cout << "EMPTY, separating pair y_" << w.separating.first << " <= x_"
                          << w.separating.second << "\n";
            return w.nonempty ? 0 : 1;
        }
        if (recur->parsed()) {
            ycert::RecurrenceReport rep = ycert::verify_recurrences(a_max);
            std::cout << "recurrences a<=" << a_max << ": " << (rep.pass() ? "pass" : "FAIL") << " ("
                      << rep.checked << " checked, " << rep.skipped_divergent << " skipped)\n";
            if (!rep.pass()) {
                std::cout << "  first failure at " << rep.first_failure->idx.str() << " relation "
                          << rep.first_failure->relation << "\n";
                return 2;
            }
            return 0;
        }
        if (thresh->parsed()) {
            ycert::HPValue v = ycert::hv_threshold(t_n, t_m, precision);
            std::cout << "n(n-1) w_n^{2/n} m^{2/n} at n=" << t_n << ", m=" << t_m << ": "
                      << v.str(std::min(precision, 40)) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            ycert::LemmaReport rep = ycert::load_report_file(verify_path);
            ycert::ReplayResult rr = ycert::replay_report(rep);
            std::cout << "replayed " << rr.total << " certificates, " << rr.failed << " failed\n";
            for (const auto& f : rr.failures) std::cout << "  bad: " << f << "\n";
            if (!rr.ok()) return 2;
            return ycert::exit_code_for(rep.verdict);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
