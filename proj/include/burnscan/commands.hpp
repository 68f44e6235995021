#pragma once

#include "burnscan/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace burnscan {

/// Library backing of the CLI subcommands. Each function validates its
/// inputs, runs the pipeline, writes the documented outputs under out_dir,
/// and throws on fatal errors (the CLI maps exceptions to exit code 1).
/// Per-pixel soft failures never abort a scene run.

struct DetectCommand {
    std::string manifest;
    std::string out_dir;
    double h = 0.15;
    double alpha = 0.05;
    std::string fill = "linear";  // linear | spline
    int harmonics = 2;
    int max_breaks = 8;
    int threads = 0;  // 0 = all available
};

/// Writes breaks.csv, break_year.f32, missing_fraction.f32 (+ sidecars).
void cmd_detect(const DetectCommand& cmd);

struct MapCommand {
    std::string manifest;
    std::string detect_dir;  // directory holding breaks.csv from cmd_detect
    std::string out_dir;
    std::string fill = "linear";
    int threads = 0;
};

/// Writes severity_<year>.u8, burned_<year>.u8 per year and area_summary.csv.
void cmd_map(const MapCommand& cmd);

struct SimulateCommand {
    std::string grid;  // JSON config path
    std::string out_dir;
    int replicates = 0;       // 0 = grid value
    std::int64_t seed = -1;   // -1 = grid value
    int threads = 0;
};

/// Writes metrics.csv with one row per scenario cell.
void cmd_simulate(const SimulateCommand& cmd);

struct CritvalsCommand {
    std::vector<double> hs{0.15, 0.23, 0.45};
    std::vector<double> alphas{0.01, 0.025, 0.05, 0.10};
    std::string out;  // table path
    int grid_n = 322;
    int replicates = 200000;
    std::uint64_t seed = 20220423;
    int threads = 0;
};

/// Regenerates the critical-value table file.
void cmd_simulate_critvals(const CritvalsCommand& cmd);

struct AssessCommand {
    std::string pred;     // burned-mask plane (u8)
    std::string ref;      // reference burned-mask plane (u8)
    std::string missing;  // missing-fraction plane (f32)
    std::string strata;   // optional JSON bounds
    std::string region;   // optional region-mask plane (u8); default all
    std::string out_dir;
};

/// Writes accuracy.csv with whole / poor / moderate rows.
void cmd_assess(const AssessCommand& cmd);

FillMethod parse_fill(const std::string& name);
void apply_thread_count(int threads);

}  // namespace burnscan
