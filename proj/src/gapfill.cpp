#include "burnscan/gapfill.hpp"

#include <stdexcept>
#include <vector>

namespace burnscan {

namespace {

std::vector<int> observed_indices(const SampledSeries& s) {
    std::vector<int> idx;
    idx.reserve(s.values.size());
    for (int i = 0; i < s.size(); ++i) {
        if (s.observed(i)) idx.push_back(i);
    }
    return idx;
}

void extend_edges(std::vector<double>& out, const std::vector<int>& idx) {
    for (int i = 0; i < idx.front(); ++i) out[i] = out[idx.front()];
    for (int i = idx.back() + 1; i < static_cast<int>(out.size()); ++i) out[i] = out[idx.back()];
}

void fill_linear(std::vector<double>& out, const std::vector<int>& idx) {
    extend_edges(out, idx);
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
        const int a = idx[k];
        const int b = idx[k + 1];
        for (int t = a + 1; t < b; ++t) {
            const double w = static_cast<double>(t - a) / static_cast<double>(b - a);
            out[t] = out[a] + w * (out[b] - out[a]);
        }
    }
}

// Natural cubic spline through the observed knots; second derivatives from
// the standard tridiagonal system solved by the Thomas algorithm.
void fill_spline(std::vector<double>& out, const std::vector<int>& idx) {
    const int m = static_cast<int>(idx.size());
    std::vector<double> x(m), y(m);
    for (int i = 0; i < m; ++i) {
        x[i] = static_cast<double>(idx[i]);
        y[i] = out[idx[i]];
    }
    std::vector<double> h(m - 1);
    for (int i = 0; i + 1 < m; ++i) h[i] = x[i + 1] - x[i];

    // interior rows: h[i-1]*M[i-1] + 2(h[i-1]+h[i])*M[i] + h[i]*M[i+1] = rhs
    std::vector<double> diag(m, 1.0), lower(m, 0.0), upper(m, 0.0), rhs(m, 0.0);
    for (int i = 1; i + 1 < m; ++i) {
        lower[i] = h[i - 1];
        diag[i] = 2.0 * (h[i - 1] + h[i]);
        upper[i] = h[i];
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1]);
    }
    std::vector<double> cp(m, 0.0), dp(m, 0.0);
    cp[0] = upper[0] / diag[0];
    dp[0] = rhs[0] / diag[0];
    for (int i = 1; i < m; ++i) {
        const double den = diag[i] - lower[i] * cp[i - 1];
        cp[i] = upper[i] / den;
        dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / den;
    }
    std::vector<double> M(m);
    M[m - 1] = dp[m - 1];
    for (int i = m - 2; i >= 0; --i) M[i] = dp[i] - cp[i] * M[i + 1];

    extend_edges(out, idx);
    for (int seg = 0; seg + 1 < m; ++seg) {
        const double hh = h[seg];
        for (int t = idx[seg] + 1; t < idx[seg + 1]; ++t) {
            const double a = (x[seg + 1] - t) / hh;
            const double b = (t - x[seg]) / hh;
            out[t] = a * y[seg] + b * y[seg + 1] +
                     ((a * a * a - a) * M[seg] + (b * b * b - b) * M[seg + 1]) * hh * hh / 6.0;
        }
    }
}

}  // namespace

FillResult fill(const SampledSeries& series, FillMethod method) {
    const auto idx = observed_indices(series);
    if (idx.size() < 2) {
        throw std::invalid_argument("fill: need at least 2 observed values");
    }
    FillResult res;
    res.series.values = series.values;
    res.series.start_year = series.start_year;
    res.series.mask.assign(series.values.size(), 1);

    FillMethod effective = method;
    if (method == FillMethod::CubicSpline && idx.size() < 4) {
        effective = FillMethod::Linear;
        res.spline_fallback = true;
    }
    if (effective == FillMethod::Linear) {
        fill_linear(res.series.values, idx);
    } else {
        fill_spline(res.series.values, idx);
    }
    return res;
}

double missing_fraction(const SampledSeries& series) {
    if (series.size() < 1) throw std::invalid_argument("missing_fraction: empty series");
    const int missing = series.size() - series.observed_count();
    return static_cast<double>(missing) / static_cast<double>(series.size());
}

}  // namespace burnscan
