#pragma once

#include <cstdint>
#include <vector>

namespace burnscan {

/// Observations per year on the 16-day compositing grid.
inline constexpr int kCadence = 23;

/// A fixed-cadence index time series with an explicit observation mask.
/// mask[i] == true means values[i] was observed; masked-out positions are
/// ignored by every fitting operation.
struct SampledSeries {
    std::vector<double> values;
    std::vector<std::uint8_t> mask;  // 1 = observed
    int start_year = 0;

    SampledSeries() = default;
    SampledSeries(std::vector<double> v, std::vector<std::uint8_t> m, int year);

    /// Fully observed series.
    static SampledSeries complete(std::vector<double> v, int year);

    int size() const { return static_cast<int>(values.size()); }
    bool observed(int i) const { return mask[static_cast<std::size_t>(i)] != 0; }
    int observed_count() const;
    bool fully_observed() const { return observed_count() == size(); }

    /// Calendar year containing 1-based sample index t.
    int year_of(int t) const { return start_year + (t - 1) / kCadence; }

    /// Detection needs at least two full years on the grid; utility
    /// operations (gap fill, missing fraction) accept shorter series.
    void require_detectable() const;
};

/// Piecewise-linear trend. Breakpoints are 1-based "last index of the left
/// segment": sample t belongs to segment j when tau_{j-1} < t <= tau_j.
/// Evaluation uses global time, value = intercept_j + slope_j * t.
struct PiecewiseTrend {
    std::vector<int> breakpoints;      // strictly increasing, each in (0, n)
    std::vector<double> intercepts;    // breakpoints.size() + 1 entries
    std::vector<double> slopes;

    PiecewiseTrend() = default;
    PiecewiseTrend(std::vector<int> taus, std::vector<double> alpha, std::vector<double> beta);

    static PiecewiseTrend constant(double level) { return {{}, {level}, {0.0}}; }

    int segment_count() const { return static_cast<int>(intercepts.size()); }

    /// 0-based index of the segment containing 1-based t.
    int segment_of(int t) const;

    /// Trend value at 1-based t; throws std::out_of_range for t < 1.
    double value_at(int t) const;
};

/// Sum of K harmonic pairs on the 23-step annual cycle plus a mean level.
struct HarmonicModel {
    int order = 0;
    std::vector<double> cos_coef;
    std::vector<double> sin_coef;
    double mean_level = 0.0;

    HarmonicModel() = default;
    HarmonicModel(int k, std::vector<double> c, std::vector<double> s, double mean);

    /// Seasonal value at 1-based t; throws std::out_of_range for t < 1.
    double value_at(int t) const;

    /// Amplitude of harmonic k (1-based).
    double amplitude(int k) const;
    /// Phase angle of harmonic k (1-based), radians in (-pi, pi].
    double phase(int k) const;
};

/// White-noise specification for Eq.-style additive models.
struct NoiseSpec {
    double sigma = 0.0;

    explicit NoiseSpec(double s);
};

enum class FillMethod { Linear, CubicSpline };

/// Detector settings. bandwidth_h controls both the moving-sum window
/// (ceil(n*h) residuals) and the minimum admissible segment length.
struct DetectorConfig {
    double bandwidth_h = 0.15;
    double significance_alpha = 0.05;
    int max_breaks = 8;
    int max_iterations = 10;
    int harmonic_order = 2;

    /// Throws std::invalid_argument when a field is out of range or the
    /// window is too short to estimate a trend segment on length-n input.
    void validate(int n) const;
};

/// ceil(n*h) without floating-point edge surprises for the h grid in use.
int window_length(int n, double h);

}  // namespace burnscan
