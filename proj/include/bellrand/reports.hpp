#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bellrand/randomness.hpp"
#include "bellrand/seesaw.hpp"

namespace bellrand {

/// The realization simulated for n settings and m copies: canonical (padded)
/// when m suffices for the optimal violation, the duplicated construction when
/// Bob is exactly one observable short (n = 2m + 2), otherwise see-saw at
/// local dimension 2^m. converged (if given) is false only when the see-saw
/// path fails to converge.
Realization simulation_realization(int n, int m, int restarts, std::uint64_t seed,
                                   bool* converged = nullptr);

/// Certified bits simulated end to end via simulation_realization.
double simulated_bits(int n, int m, int restarts, std::uint64_t seed,
                      bool* converged = nullptr);

struct Table1Cell {
    int n, m;
    std::string source; // "closed_form" or "simulated"
    double bits;
};

struct Table1Options {
    int restarts = 50;
    std::uint64_t seed = 7;
};

/// All 15 cells (n in 2..6, m in 1..3) from both sources.
std::vector<Table1Cell> compute_table1(const Table1Options& options);

struct Figure2Point {
    int n;
    double single_copy_bits;
    bool single_copy_converged;
    double multi_copy_bits;
};

struct Figure2Options {
    int n_max = 10;
    int restarts = 20;
    std::uint64_t seed = 7;
};

/// Certified bits versus n: the closed-form m = floor(n/2) curve and the
/// see-saw single-copy curve (see-saw is engaged from n = 4 upward).
std::vector<Figure2Point> compute_figure2(const Figure2Options& options);

std::string table1_to_csv(const std::vector<Table1Cell>& cells);
std::string figure2_to_csv(const std::vector<Figure2Point>& points);

/// Minimal line plot: axes, two polylines, point markers.
std::string figure2_to_svg(const std::vector<Figure2Point>& points);

std::uint64_t fnv1a64(std::string_view data);

struct ManifestOutput {
    std::string file;
    std::uint64_t digest;
};

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::uint64_t seed = 0;
    double duration_ms = 0;
    std::vector<ManifestOutput> outputs;
};

std::string manifest_to_json(const RunManifest& manifest);

} // namespace bellrand
