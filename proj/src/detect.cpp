#include "burnscan/detect.hpp"

#include "burnscan/gapfill.hpp"
#include "burnscan/harmonic.hpp"
#include "burnscan/segment.hpp"

#include <stdexcept>

namespace burnscan {

int DetectionResult::break_year(int k, int start_year) const {
    const int tau = breakpoints.at(static_cast<std::size_t>(k));
    return start_year + (tau - 1) / kCadence;
}

DetectionResult detect(const SampledSeries& series, const DetectorConfig& cfg,
                       FillMethod fill_method) {
    return detect(series, cfg, fill_method, CriticalValueTable::builtin());
}

DetectionResult detect(const SampledSeries& series, const DetectorConfig& cfg,
                       FillMethod fill_method, const CriticalValueTable& table) {
    series.require_detectable();
    const int n = series.size();
    cfg.validate(n);
    const double crit = table.critical_value(cfg.bandwidth_h, cfg.significance_alpha);

    FillResult filled = fill(series, fill_method);
    const std::vector<double>& y = filled.series.values;

    DetectionResult res;
    res.fill_warning = filled.spline_fallback;
    res.season = fit_harmonic(y, cfg.harmonic_order);

    std::vector<double> deseason(y.size());
    bool have_prev = false;
    std::vector<int> prev_breaks;

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        res.iterations_used = iter;
        for (int i = 0; i < n; ++i) deseason[i] = y[i] - res.season.value_at(i + 1);

        res.mosum = ols_mosum(deseason, cfg.bandwidth_h);
        res.significant = res.mosum.max_abs() > crit;
        if (!res.significant) {
            res.breakpoints.clear();
            const LineFit f = fit_line(deseason, 0, n - 1);
            res.trend = PiecewiseTrend({}, {f.intercept}, {f.slope});
            res.converged = true;
            return res;
        }

        SegmentationResult seg = segment_trend(deseason, cfg.bandwidth_h, cfg.max_breaks);
        res.max_breaks_clamped = res.max_breaks_clamped || seg.max_breaks_clamped;
        res.trend = std::move(seg.trend);
        res.breakpoints = res.trend.breakpoints;

        if (have_prev && res.breakpoints == prev_breaks) {
            res.converged = true;
            return res;
        }
        prev_breaks = res.breakpoints;
        have_prev = true;

        std::vector<double> detrended(y.size());
        for (int i = 0; i < n; ++i) detrended[i] = y[i] - res.trend.value_at(i + 1);
        res.season = fit_harmonic(detrended, cfg.harmonic_order);
    }
    res.converged = false;
    return res;
}

}  // namespace burnscan
