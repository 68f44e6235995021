#pragma once

#include "burnscan/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace burnscan {

enum class TrendSpecKind { OneBreak, NoChange, TwoBreak };

const char* trend_spec_name(TrendSpecKind k);

/// One Monte Carlo cell: 322-sample series (2003-2016 grid) with harmonic
/// seasonality, Gaussian noise, an optional trend change, and P randomly
/// masked samples.
struct SimScenario {
    double amplitude = 0.15;
    double phase_deg = 0.0;
    double sigma = 0.02;
    TrendSpecKind trend = TrendSpecKind::OneBreak;
    int two_break_gap = 0;  // ell; TwoBreak only
    int missing_count = 0;  // P
    FillMethod fill = FillMethod::Linear;
    double h = 0.15;
    double alpha = 0.05;
    int harmonic_order = 2;
    int max_breaks = 8;
    int max_iterations = 10;
    int replicates = 1000;
    std::uint64_t seed = 1u;

    /// Ground-truth trend of this scenario (global-time convention).
    PiecewiseTrend true_trend() const;
    /// True breakpoints (empty for NoChange).
    std::vector<int> true_breaks() const;
    void validate() const;
};

/// Noiseless series length (14 years of 23 samples).
inline constexpr int kSimLength = 322;
inline constexpr int kSimStartYear = 2003;

/// y_t = T_t + amplitude*cos(2*pi*t/23 - phase) + N(0, sigma^2), t = 1..322,
/// deterministically seeded by (scenario.seed, replicate_index). No mask yet.
SampledSeries synth_series(const SimScenario& scenario, int replicate_index);

/// Masks exactly P positions chosen uniformly without replacement,
/// deterministically seeded by (seed, replicate_index). Throws when P >= n.
SampledSeries apply_missing(const SampledSeries& series, int P, std::uint64_t seed,
                            int replicate_index);

/// Outcome of one replicate, kept small so replicate vectors merge cheaply.
struct ReplicateOutcome {
    std::int16_t n_breaks = 0;   // -1 marks a detector failure
    std::int16_t matched = 0;    // true breakpoints recovered exactly
    std::int32_t sole_break = 0; // the single estimated break when n_breaks == 1
};

ReplicateOutcome run_replicate(const SimScenario& scenario, int replicate_index);

struct SimMetrics {
    double coverage = 0.0;            // exactly the target break count detected
    double correct_estimation = 0.0;  // all true breaks dated exactly | exact count
    double false_negative_rate = 0.0; // >= 1 break detected (NoChange cells)
    double mse = 0.0;                 // squared dating error, single-break replicates
    double under_one = 0.0;           // one of two true breaks hit | 1 detected
    double under_two = 0.0;           // one of two true breaks hit | 2 detected
    double under_more = 0.0;          // one of two true breaks hit | > 2 detected
    double overestimation = 0.0;      // more than the target count detected
    int replicates = 0;
    int n_target_count = 0;           // replicates hitting the target count
    int n_failures = 0;               // detector errors, counted as no detection
};

SimMetrics tally(const SimScenario& scenario, const std::vector<ReplicateOutcome>& outcomes);

/// Runs scenario.replicates independent replicates. The parallel version
/// distributes replicates over OpenMP threads; outputs are bit-identical to
/// the serial reference for any thread count.
SimMetrics run_experiment(const SimScenario& scenario);
SimMetrics run_experiment_serial(const SimScenario& scenario);

/// Experiment grid declared in JSON (lists of amplitudes, sigmas, h values,
/// missing counts, fills, gaps) expanded in row-major declaration order.
struct ExperimentGrid {
    TrendSpecKind trend = TrendSpecKind::OneBreak;
    std::vector<double> amplitudes{0.15};
    std::vector<double> sigmas{0.02};
    std::vector<double> hs{0.15};
    std::vector<int> missing_counts{0};
    std::vector<FillMethod> fills{FillMethod::Linear};
    std::vector<int> gaps{0};  // ell values; TwoBreak only
    double alpha = 0.05;
    int harmonic_order = 2;
    int max_breaks = 8;
    int max_iterations = 10;
    int replicates = 1000;
    std::uint64_t seed = 1u;

    static ExperimentGrid load(const std::string& path);
    std::vector<SimScenario> expand() const;
};

/// One CSV row per scenario cell, deterministic under a fixed seed.
void write_metrics_csv(const std::string& path, const std::vector<SimScenario>& cells,
                       const std::vector<SimMetrics>& metrics);

}  // namespace burnscan
