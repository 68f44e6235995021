#include "burnscan/mosum.hpp"

#include "burnscan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace burnscan {

LineFit fit_line(const std::vector<double>& values, int first, int last) {
    const int n = last - first + 1;
    if (n < 2) throw std::invalid_argument("fit_line: need at least 2 points");
    double st = 0.0, sy = 0.0;
    for (int i = first; i <= last; ++i) {
        st += static_cast<double>(i + 1);
        sy += values[i];
    }
    const double tbar = st / n;
    const double ybar = sy / n;
    double stt = 0.0, sty = 0.0, syy = 0.0;
    for (int i = first; i <= last; ++i) {
        const double dt = static_cast<double>(i + 1) - tbar;
        const double dy = values[i] - ybar;
        stt += dt * dt;
        sty += dt * dy;
        syy += dy * dy;
    }
    LineFit f;
    f.slope = stt > 0.0 ? sty / stt : 0.0;
    f.intercept = ybar - f.slope * tbar;
    f.rss = std::max(syy - f.slope * sty, 0.0);
    return f;
}

double MosumPath::max_abs() const {
    double m = 0.0;
    for (double v : statistics) m = std::max(m, std::abs(v));
    return m;
}

MosumPath ols_mosum(const std::vector<double>& detrended, double h) {
    const int n = static_cast<int>(detrended.size());
    if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("ols_mosum: h must lie in (0, 1)");
    const int w = window_length(n, h);
    if (w < 3 || n < w) throw std::invalid_argument("ols_mosum: series too short for ceil(n*h) >= 3");

    const LineFit null_fit = fit_line(detrended, 0, n - 1);
    std::vector<double> resid(n);
    double mean = 0.0;
    for (double v : detrended) mean += v;
    mean /= n;
    double css = 0.0;
    for (double v : detrended) css += (v - mean) * (v - mean);
    for (int i = 0; i < n; ++i) {
        resid[i] = detrended[i] - (null_fit.intercept + null_fit.slope * (i + 1));
    }

    MosumPath path;
    path.window_len = w;
    path.statistics.assign(n - w + 1, 0.0);
    // an exact-fit input leaves only cancellation noise; treat it as
    // residual-free rather than dividing by a ~1e-16 scale
    if (null_fit.rss <= css * 1e-13 + 1e-300) {
        path.sigma_hat = 0.0;
        return path;
    }
    path.sigma_hat = std::sqrt(null_fit.rss / (n - 2));

    const double scale = path.sigma_hat * std::sqrt(static_cast<double>(n));
    double window_sum = 0.0;
    for (int i = 0; i < w; ++i) window_sum += resid[i];
    path.statistics[0] = window_sum / scale;
    for (int j = 1; j + w <= n; ++j) {
        window_sum += resid[j + w - 1] - resid[j - 1];
        path.statistics[j] = window_sum / scale;
    }
    return path;
}

MosumPath ols_mosum(const SampledSeries& detrended, double h) {
    if (!detrended.fully_observed()) {
        throw std::invalid_argument("ols_mosum: series must be fully observed");
    }
    return ols_mosum(detrended.values, h);
}

CriticalValueTable::CriticalValueTable(std::vector<Row> rows, std::string version)
    : rows_(std::move(rows)), version_(std::move(version)) {}

double CriticalValueTable::critical_value(double h, double alpha) const {
    for (const Row& r : rows_) {
        if (std::abs(r.h - h) < 1e-9 && std::abs(r.alpha - alpha) < 1e-9) return r.value;
    }
    std::ostringstream msg;
    msg << "no tabulated critical value for (h=" << h << ", alpha=" << alpha
        << "); interpolation is refused, regenerate the table with `simulate critvals`";
    throw std::invalid_argument(msg.str());
}

void CriticalValueTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write critical value table: " + path);
    out << "# burnscan ols-mosum critical values, format v" << version_ << "\n";
    out << "# h alpha c\n";
    char line[128];
    for (const Row& r : rows_) {
        std::snprintf(line, sizeof(line), "%.6f %.6f %.8f\n", r.h, r.alpha, r.value);
        out << line;
    }
}

CriticalValueTable CriticalValueTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read critical value table: " + path);
    std::vector<Row> rows;
    std::string version = "1";
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("format v");
            if (pos != std::string::npos) version = line.substr(pos + 8);
            continue;
        }
        std::istringstream ls(line);
        Row r{};
        if (!(ls >> r.h >> r.alpha >> r.value)) {
            throw std::runtime_error("malformed critical value row in " + path + ": " + line);
        }
        rows.push_back(r);
    }
    if (rows.empty()) throw std::runtime_error("empty critical value table: " + path);
    return CriticalValueTable(std::move(rows), std::move(version));
}

double mosum_critical_value(double h, double alpha) {
    return CriticalValueTable::builtin().critical_value(h, alpha);
}

namespace {

// One draw of max_j |V(s_{j+w}) - V(s_j)| on the grid, V the trend-adjusted
// bridge built from grid_n Gaussian increments.
double limit_process_max(int grid_n, int w, Rng& rng, std::vector<double>& walk) {
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(grid_n));
    walk.resize(grid_n + 1);
    walk[0] = 0.0;
    double ito = 0.0;  // \int u dW with the left-point rule
    for (int i = 0; i < grid_n; ++i) {
        const double e = rng.normal() * inv_sqrt;
        walk[i + 1] = walk[i] + e;
        ito += (static_cast<double>(i) / grid_n) * e;
    }
    const double w1 = walk[grid_n];
    double mx = 0.0;
    for (int j = 0; j + w <= grid_n; ++j) {
        const double s0 = static_cast<double>(j) / grid_n;
        const double s1 = static_cast<double>(j + w) / grid_n;
        auto adjust = [&](double s, double ws) {
            return ws - (4.0 * s - 3.0 * s * s) * w1 - (6.0 * s * s - 6.0 * s) * ito;
        };
        const double inc = adjust(s1, walk[j + w]) - adjust(s0, walk[j]);
        mx = std::max(mx, std::abs(inc));
    }
    return mx;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    // type-7 empirical quantile
    const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

CriticalValueTable generate_critical_values(const std::vector<double>& hs,
                                            const std::vector<double>& alphas,
                                            int grid_n, int replicates, std::uint64_t seed) {
    if (grid_n < 8) throw std::invalid_argument("generate_critical_values: grid_n too small");
    if (replicates < 100) throw std::invalid_argument("generate_critical_values: need >= 100 replicates");
    std::vector<CriticalValueTable::Row> rows;
    for (double h : hs) {
        if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("generate_critical_values: h outside (0,1)");
        const int w = window_length(grid_n, h);
        std::vector<double> maxima(replicates);
#pragma omp parallel
        {
            std::vector<double> walk;
#pragma omp for schedule(static)
            for (int r = 0; r < replicates; ++r) {
                // window length folded into the seed keeps the h-streams apart
                Rng rng(derive_stream(seed ^ (static_cast<std::uint64_t>(w) * 0x9E3779B1ULL),
                                      static_cast<std::uint64_t>(r), StreamTag::CritVal));
                maxima[r] = limit_process_max(grid_n, w, rng, walk);
            }
        }
        std::sort(maxima.begin(), maxima.end());
        for (double alpha : alphas) {
            if (!(alpha > 0.0 && alpha < 1.0)) {
                throw std::invalid_argument("generate_critical_values: alpha outside (0,1)");
            }
            rows.push_back({h, alpha, quantile_sorted(maxima, 1.0 - alpha)});
        }
    }
    return CriticalValueTable(std::move(rows));
}

}  // namespace burnscan
