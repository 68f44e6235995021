#pragma once

#include "burnscan/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace burnscan {

/// OLS line fit y = intercept + slope * t over 1-based t.
struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rss = 0.0;
};

/// Least-squares line through values[first..last] (0-based, inclusive),
/// regressor t = index + 1.
LineFit fit_line(const std::vector<double>& values, int first, int last);

/// The moving-sum process of OLS residuals under the no-change null
/// (single line fit over the whole series).
struct MosumPath {
    std::vector<double> statistics;  // n - window_len + 1 window positions
    int window_len = 0;              // ceil(n*h)
    double sigma_hat = 0.0;          // sqrt(RSS / (n - 2)); 0 for exact-fit input

    double max_abs() const;
};

/// Computes M_j = (sum of window residuals) / (sigma_hat * sqrt(n)) for every
/// admissible window start. Residuals that are identically zero yield an
/// all-zero path. Throws std::invalid_argument when the series is not fully
/// observed, h is outside (0,1), or ceil(n*h) < 3.
MosumPath ols_mosum(const SampledSeries& detrended, double h);
MosumPath ols_mosum(const std::vector<double>& detrended, double h);

/// Two-sided critical values c(h, alpha) for max_j |M_j|, precomputed by
/// Monte Carlo simulation of the limiting process and shipped as a versioned
/// table. Lookup is exact-match only; interpolation in h is refused.
class CriticalValueTable {
public:
    struct Row {
        double h;
        double alpha;
        double value;
    };

    CriticalValueTable() = default;
    explicit CriticalValueTable(std::vector<Row> rows, std::string version = "1");

    /// Table compiled into the library (h in {0.15, 0.23, 0.45},
    /// alpha in {0.01, 0.025, 0.05, 0.10}).
    static const CriticalValueTable& builtin();

    static CriticalValueTable load(const std::string& path);
    void save(const std::string& path) const;

    /// Throws std::invalid_argument when (h, alpha) is not tabulated.
    double critical_value(double h, double alpha) const;

    const std::vector<Row>& rows() const { return rows_; }
    const std::string& version() const { return version_; }

private:
    std::vector<Row> rows_;
    std::string version_ = "1";
};

/// c(h, alpha) from the built-in table.
double mosum_critical_value(double h, double alpha);

/// Regenerates the table by simulating the limiting process of the moving
/// sums: increments, over windows of relative width h, of the Brownian
/// bridge adjusted for the intercept+trend regression
///   V(s) = W(s) - (4s - 3s^2) W(1) - (6s^2 - 6s) \int_0^1 u dW(u),
/// discretized on a grid of `grid_n` points (the sampling grid the test runs
/// on). Deterministic in `seed`; replicates are simulated independently.
CriticalValueTable generate_critical_values(const std::vector<double>& hs,
                                            const std::vector<double>& alphas,
                                            int grid_n = 322,
                                            int replicates = 200000,
                                            std::uint64_t seed = 20220423);

}  // namespace burnscan
