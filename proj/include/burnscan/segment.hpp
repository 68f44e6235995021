#pragma once

#include "burnscan/types.hpp"

#include <vector>

namespace burnscan {

struct SegmentationResult {
    PiecewiseTrend trend;
    double rss = 0.0;
    /// Minimal RSS for each candidate break count 0..used_max_breaks
    /// (infeasible counts hold +inf).
    std::vector<double> rss_by_count;
    int min_segment = 0;  // ceil(n*h)
    int requested_max_breaks = 0;
    int used_max_breaks = 0;
    bool max_breaks_clamped = false;
};

/// Optimal piecewise-linear segmentation: for each break count m up to
/// max_breaks, dynamic programming finds the placement minimizing total RSS
/// of per-segment line fits subject to minimum segment length ceil(n*h); the
/// count is then selected by BIC(m) = n*ln(RSS_m/n) + (3m+2)*ln(n). An
/// infeasible max_breaks is clamped to the feasible maximum and flagged.
/// Placements tied within 1e-12 relative RSS resolve to the one with the
/// lexicographically earliest breakpoints.
SegmentationResult segment_trend(const SampledSeries& series, double h, int max_breaks);
SegmentationResult segment_trend(const std::vector<double>& values, double h, int max_breaks);

}  // namespace burnscan
