#include "burnscan/segment.hpp"

#include "burnscan/mosum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace burnscan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieRelTol = 1e-12;

// Prefix sums enabling O(1) per-segment line-fit RSS.
struct CostTables {
    std::vector<double> st, stt, sy, sty, syy;

    explicit CostTables(const std::vector<double>& y) {
        const std::size_t n = y.size();
        st.assign(n + 1, 0.0);
        stt.assign(n + 1, 0.0);
        sy.assign(n + 1, 0.0);
        sty.assign(n + 1, 0.0);
        syy.assign(n + 1, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i + 1);
            st[i + 1] = st[i] + t;
            stt[i + 1] = stt[i] + t * t;
            sy[i + 1] = sy[i] + y[i];
            sty[i + 1] = sty[i] + t * y[i];
            syy[i + 1] = syy[i] + y[i] * y[i];
        }
    }

    // RSS of the least-squares line through 1-based samples [i, j].
    double rss(int i, int j) const {
        const double cnt = static_cast<double>(j - i + 1);
        const double sumt = st[j] - st[i - 1];
        const double sumy = sy[j] - sy[i - 1];
        const double tbar = sumt / cnt;
        const double ybar = sumy / cnt;
        const double ctt = (stt[j] - stt[i - 1]) - cnt * tbar * tbar;
        const double cty = (sty[j] - sty[i - 1]) - cnt * tbar * ybar;
        const double cyy = (syy[j] - syy[i - 1]) - cnt * ybar * ybar;
        if (ctt <= 0.0) return std::max(cyy, 0.0);
        return std::max(cyy - cty * cty / ctt, 0.0);
    }
};

}  // namespace

SegmentationResult segment_trend(const std::vector<double>& values, double h, int max_breaks) {
    const int n = static_cast<int>(values.size());
    if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("segment_trend: h must lie in (0, 1)");
    if (max_breaks < 1) throw std::invalid_argument("segment_trend: max_breaks must be >= 1");
    const int L = window_length(n, h);
    if (L < 3) throw std::invalid_argument("segment_trend: ceil(n*h) must be >= 3");

    SegmentationResult res;
    res.min_segment = L;
    res.requested_max_breaks = max_breaks;
    const int feasible = n / L - 1;
    res.used_max_breaks = std::min(max_breaks, std::max(feasible, 0));
    res.max_breaks_clamped = res.used_max_breaks < max_breaks;
    const int mmax = res.used_max_breaks;

    const CostTables cost(values);

    // suf[k][s]: minimal RSS covering 1-based [s, n] with k breaks.
    std::vector<std::vector<double>> suf(mmax + 1, std::vector<double>(n + 2, kInf));
    for (int s = 1; s + L - 1 <= n; ++s) suf[0][s] = cost.rss(s, n);
    for (int k = 1; k <= mmax; ++k) {
        for (int s = 1; s + (k + 1) * L - 1 <= n; ++s) {
            double best = kInf;
            const int tau_hi = n - k * L;
            for (int tau = s + L - 1; tau <= tau_hi; ++tau) {
                const double v = cost.rss(s, tau) + suf[k - 1][tau + 1];
                if (v < best) best = v;
            }
            suf[k][s] = best;
        }
    }

    res.rss_by_count.assign(mmax + 1, kInf);
    for (int m = 0; m <= mmax; ++m) res.rss_by_count[m] = suf[m][1];

    // BIC selection; RSS below the cancellation noise of the prefix-sum cost
    // (relative ~1e-13 of the data's sum of squares) is floored so that a
    // noiseless exact fit prefers the smallest break count instead of
    // chasing rounding noise.
    const double mean = cost.sy[n] / n;
    const double css = std::max(cost.syy[n] - n * mean * mean, 0.0);
    const double floor_rss = css * 1e-13 + 1e-300;
    int best_m = 0;
    double best_bic = kInf;
    for (int m = 0; m <= mmax; ++m) {
        if (!(res.rss_by_count[m] < kInf)) continue;
        const double rss = std::max(res.rss_by_count[m], floor_rss);
        const double bic = n * std::log(rss / n) + (3.0 * m + 2.0) * std::log(static_cast<double>(n));
        if (best_bic == kInf || bic < best_bic - 1e-9 * std::abs(best_bic)) {
            best_bic = bic;
            best_m = m;
        }
    }

    // Earliest-lexicographic reconstruction of the winning placement.
    std::vector<int> taus;
    taus.reserve(best_m);
    int s = 1;
    for (int k = best_m; k >= 1; --k) {
        const double target = suf[k][s];
        const double tol = kTieRelTol * std::max(1.0, std::abs(target));
        const int tau_hi = n - k * L;
        for (int tau = s + L - 1; tau <= tau_hi; ++tau) {
            if (cost.rss(s, tau) + suf[k - 1][tau + 1] <= target + tol) {
                taus.push_back(tau);
                s = tau + 1;
                break;
            }
        }
    }

    std::vector<double> alphas, betas;
    double total_rss = 0.0;
    int lo = 0;
    for (int seg = 0; seg <= static_cast<int>(taus.size()); ++seg) {
        const int hi = seg < static_cast<int>(taus.size()) ? taus[seg] - 1 : n - 1;
        const LineFit f = fit_line(values, lo, hi);
        alphas.push_back(f.intercept);
        betas.push_back(f.slope);
        total_rss += f.rss;
        lo = hi + 1;
    }
    res.trend = PiecewiseTrend(std::move(taus), std::move(alphas), std::move(betas));
    res.rss = total_rss;
    return res;
}

SegmentationResult segment_trend(const SampledSeries& series, double h, int max_breaks) {
    if (!series.fully_observed()) {
        throw std::invalid_argument("segment_trend: series must be fully observed");
    }
    return segment_trend(series.values, h, max_breaks);
}

}  // namespace burnscan
