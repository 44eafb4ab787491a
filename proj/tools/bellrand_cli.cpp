// Command-line front end: reproduces the certified-randomness table and
// figure data, runs certifications, bound checks, SOS checks, and see-saw
// sweeps. Every command writes its outputs plus a run manifest with digests.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bellrand/behavior.hpp"
#include "bellrand/reports.hpp"

namespace fs = std::filesystem;
using namespace bellrand;

namespace {

struct OutputWriter {
    fs::path dir;
    RunManifest manifest;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(const std::string& name, const std::string& content) {
        fs::create_directories(dir);
        std::ofstream out(dir / name, std::ios::binary);
        out << content;
        manifest.outputs.push_back({name, fnv1a64(content)});
    }

    void finish() {
        manifest.duration_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        fs::create_directories(dir);
        std::ofstream out(dir / "manifest.json", std::ios::binary);
        out << manifest_to_json(manifest);
    }
};

int run_table1(int restarts, std::uint64_t seed, const std::string& out_dir,
               double tolerance) {
    OutputWriter writer{out_dir, {"table1", {{"restarts", std::to_string(restarts)}}, seed}};
    const auto cells = compute_table1({restarts, seed});
    writer.write("table1.csv", table1_to_csv(cells));
    writer.finish();

    int failures = 0;
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= 3; ++m) {
            double closed = 0, simulated = 0;
            for (const Table1Cell& c : cells)
                if (c.n == n && c.m == m) (c.source == "closed_form" ? closed : simulated) = c.bits;
            const double diff = std::abs(closed - simulated);
            std::printf("n=%d m=%d closed=%.4f simulated=%.4f %s\n", n, m, closed,
                        simulated, diff <= tolerance ? "ok" : "MISMATCH");
            if (diff > tolerance) ++failures;
        }
    return failures == 0 ? 0 : 1;
}

int run_figure2(int n_max, int restarts, std::uint64_t seed, const std::string& out_dir) {
    OutputWriter writer{out_dir,
                        {"figure2",
                         {{"n_max", std::to_string(n_max)},
                          {"restarts", std::to_string(restarts)}},
                         seed}};
    const auto points = compute_figure2({n_max, restarts, seed});
    writer.write("figure2.csv", figure2_to_csv(points));
    writer.write("figure2.svg", figure2_to_svg(points));
    writer.finish();
    for (const Figure2Point& p : points)
        std::printf("n=%d single=%.4f%s multi=%.4f\n", p.n, p.single_copy_bits,
                    p.single_copy_converged ? "" : " (not converged)", p.multi_copy_bits);
    return 0;
}

int run_certify(int n, int copies, const std::string& format, int restarts,
                std::uint64_t seed, const std::string& out_dir, bool emit_behavior) {
    OutputWriter writer{out_dir,
                        {"certify",
                         {{"n", std::to_string(n)},
                          {"copies", std::to_string(copies)},
                          {"format", format},
                          {"restarts", std::to_string(restarts)}},
                         seed}};
    const Realization realization = simulation_realization(n, copies, restarts, seed);
    const Behavior behavior = compute_behavior(realization);
    const RandomnessReport report = certify(behavior, realization.scheme, copies);

    if (format == "csv")
        writer.write("report.csv", report_to_csv(report));
    else
        writer.write("report.json", report_to_json(report));
    if (emit_behavior) {
        writer.write("behavior.csv", behavior_to_csv(behavior));
        writer.write("behavior.json", behavior_to_json(behavior));
    }
    writer.finish();

    std::printf("n=%d copies=%d bell=%.4f local=%lld violated=%s\n", n, copies,
                report.bell_value, static_cast<long long>(report.local_bound),
                report.violated ? "yes" : "no");
    std::printf("p*=%.4f r_min=%.4f bits r_max=%.4f bits\n", report.p_star,
                report.r_min, report.r_max);
    if (report.violated && !report.certified)
        std::printf("sub-optimal violation: not a DI-guaranteed bound\n");
    return 0;
}

int run_bounds(int n, const std::string& out_dir, std::uint64_t seed) {
    OutputWriter writer{out_dir, {"bounds", {{"n", std::to_string(n)}}, seed}};
    std::ostringstream csv;
    csv << "n,local_closed,local_bruteforce,quantum_optimum\n";
    const auto closed = local_bound_closed(n);
    const double quantum = std::exp2(n - 1) * std::sqrt(static_cast<double>(n));
    std::printf("local bound (closed form): %lld\n", static_cast<long long>(closed));
    std::string brute = "";
    if (n <= 12) {
        const auto bf = local_bound_bruteforce(n);
        brute = std::to_string(bf);
        std::printf("local bound (brute force): %lld\n", static_cast<long long>(bf));
    } else {
        std::printf("local bound (brute force): skipped, n > 12\n");
    }
    std::printf("quantum optimum 2^(n-1) sqrt(n): %.10f\n", quantum);
    char qbuf[32];
    std::snprintf(qbuf, sizeof(qbuf), "%.17g", quantum);
    csv << n << ',' << closed << ',' << brute << ',' << qbuf << '\n';
    writer.write("bounds.csv", csv.str());
    writer.finish();
    return 0;
}

int run_sos(int n, const std::string& out_dir, std::uint64_t seed) {
    OutputWriter writer{out_dir, {"sos", {{"n", std::to_string(n)}}, seed}};
    const Realization realization = canonical_realization(n);
    const SosCertificate cert = sos_certificate(realization);
    std::printf("beta = %.10f\n", cert.beta);
    std::printf("gap <gamma> = %.3e\n", cert.gap);
    if (cert.min_eigenvalue)
        std::printf("min eigenvalue of gamma = %.3e\n", *cert.min_eigenvalue);
    else
        std::printf("min eigenvalue: skipped, above the dense guard\n");
    std::ostringstream csv;
    csv << "n,beta,gap,min_eigenvalue\n";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,", n, cert.beta, cert.gap);
    csv << buf;
    if (cert.min_eigenvalue) {
        std::snprintf(buf, sizeof(buf), "%.17g", *cert.min_eigenvalue);
        csv << buf;
    }
    csv << '\n';
    writer.write("sos.csv", csv.str());
    writer.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bell-functional randomness certification toolkit"};
    app.require_subcommand(1);

    int n = 4, copies = 1, n_max = 10, restarts = 50;
    std::uint64_t seed = 7;
    std::string out_dir = "out";
    std::string format = "json";
    double tolerance = 1e-3;
    bool emit_behavior = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--out", out_dir, "output directory");
    };

    auto* table1 = app.add_subcommand("table1", "reproduce the 15-cell randomness table");
    table1->add_option("--restarts", restarts, "see-saw restarts per cell");
    table1->add_option("--tolerance", tolerance, "closed-form vs simulated tolerance");
    add_common(table1);

    auto* figure2 = app.add_subcommand("figure2", "randomness vs n for both curves");
    figure2->add_option("--n-max", n_max, "largest n")->check(CLI::Range(6, 20));
    figure2->add_option("--restarts", restarts, "see-saw restarts per point");
    add_common(figure2);

    auto* cert = app.add_subcommand("certify", "certify randomness for (n, copies)");
    cert->add_option("--n", n, "Bob settings count")->required()->check(CLI::Range(2, 24));
    cert->add_option("--copies", copies, "copies of the two-qubit state")
        ->required()
        ->check(CLI::PositiveNumber);
    cert->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cert->add_option("--restarts", restarts, "see-saw restarts (sub-optimal copies)");
    cert->add_flag("--emit-behavior", emit_behavior, "also write the behavior table");
    add_common(cert);

    auto* bounds = app.add_subcommand("bounds", "local and quantum bounds");
    bounds->add_option("--n", n, "Bob settings count")->required()->check(CLI::Range(2, 24));
    add_common(bounds);

    auto* sos = app.add_subcommand("sos", "SOS certificate for the canonical realization");
    sos->add_option("--n", n, "Bob settings count")->required()->check(CLI::Range(2, 16));
    add_common(sos);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table1->parsed()) return run_table1(restarts, seed, out_dir, tolerance);
        if (figure2->parsed()) return run_figure2(n_max, restarts, seed, out_dir);
        if (cert->parsed())
            return run_certify(n, copies, format, restarts, seed, out_dir, emit_behavior);
        if (bounds->parsed()) return run_bounds(n, out_dir, seed);
        if (sos->parsed()) return run_sos(n, out_dir, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
