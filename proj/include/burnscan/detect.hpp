#pragma once

#include "burnscan/mosum.hpp"
#include "burnscan/types.hpp"

#include <vector>

namespace burnscan {

struct DetectionResult {
    /// OLS-MOSUM verdict of the final iteration at level alpha.
    bool significant = false;
    /// Trend breakpoints; empty when not significant or when the information
    /// criterion prefers the no-break model.
    std::vector<int> breakpoints;
    PiecewiseTrend trend;
    HarmonicModel season;
    MosumPath mosum;
    int iterations_used = 0;
    bool converged = false;
    bool max_breaks_clamped = false;
    bool fill_warning = false;  // spline fell back to linear

    bool has_breaks() const { return !breakpoints.empty(); }
    /// Calendar year of breakpoint k.
    int break_year(int k, int start_year) const;
};

/// Full detection pipeline on a gappy series:
///   1. gap-fill; 2. fit the seasonal harmonic; 3. OLS-MOSUM test on the
///   deseasonalized series -- stop with no breaks if not significant,
///   otherwise date breaks by least-squares segmentation; 4. refit the
///   season on series minus trend; repeat 3-4 until the breakpoint set is
///   stable or cfg.max_iterations is reached.
/// The critical value comes from `table` (built-in table by default).
DetectionResult detect(const SampledSeries& series, const DetectorConfig& cfg,
                       FillMethod fill_method);
DetectionResult detect(const SampledSeries& series, const DetectorConfig& cfg,
                       FillMethod fill_method, const CriticalValueTable& table);

}  // namespace burnscan
