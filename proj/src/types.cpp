#include "burnscan/types.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace burnscan {

SampledSeries::SampledSeries(std::vector<double> v, std::vector<std::uint8_t> m, int year)
    : values(std::move(v)), mask(std::move(m)), start_year(year) {
    if (values.size() != mask.size()) {
        throw std::invalid_argument("SampledSeries: values and mask lengths differ");
    }
}

SampledSeries SampledSeries::complete(std::vector<double> v, int year) {
    std::vector<std::uint8_t> m(v.size(), 1);
    return SampledSeries(std::move(v), std::move(m), year);
}

int SampledSeries::observed_count() const {
    int c = 0;
    for (auto b : mask) c += (b != 0);
    return c;
}

void SampledSeries::require_detectable() const {
    if (size() < 2 * kCadence) {
        throw std::invalid_argument("SampledSeries: need at least " +
                                    std::to_string(2 * kCadence) + " samples, got " +
                                    std::to_string(size()));
    }
}

PiecewiseTrend::PiecewiseTrend(std::vector<int> taus, std::vector<double> alpha,
                               std::vector<double> beta)
    : breakpoints(std::move(taus)), intercepts(std::move(alpha)), slopes(std::move(beta)) {
    if (intercepts.size() != slopes.size() ||
        intercepts.size() != breakpoints.size() + 1) {
        throw std::invalid_argument("PiecewiseTrend: need one (intercept, slope) per segment");
    }
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        const bool increasing = i == 0 || breakpoints[i] > breakpoints[i - 1];
        if (breakpoints[i] <= 0 || !increasing) {
            throw std::invalid_argument("PiecewiseTrend: breakpoints must be strictly increasing and positive");
        }
    }
}

int PiecewiseTrend::segment_of(int t) const {
    int j = 0;
    while (j < static_cast<int>(breakpoints.size()) && t > breakpoints[j]) ++j;
    return j;
}

double PiecewiseTrend::value_at(int t) const {
    if (t < 1) throw std::out_of_range("PiecewiseTrend: t must be >= 1");
    const int j = segment_of(t);
    return intercepts[j] + slopes[j] * static_cast<double>(t);
}

HarmonicModel::HarmonicModel(int k, std::vector<double> c, std::vector<double> s, double mean)
    : order(k), cos_coef(std::move(c)), sin_coef(std::move(s)), mean_level(mean) {
    if (order < 1 || cos_coef.size() != static_cast<std::size_t>(order) ||
        sin_coef.size() != static_cast<std::size_t>(order)) {
        throw std::invalid_argument("HarmonicModel: need order >= 1 coefficient pairs");
    }
}

double HarmonicModel::value_at(int t) const {
    if (t < 1) throw std::out_of_range("HarmonicModel: t must be >= 1");
    double s = mean_level;
    for (int k = 1; k <= order; ++k) {
        const double ang = 2.0 * std::numbers::pi * k * t / kCadence;
        s += cos_coef[k - 1] * std::cos(ang) + sin_coef[k - 1] * std::sin(ang);
    }
    return s;
}

double HarmonicModel::amplitude(int k) const {
    return std::hypot(cos_coef.at(k - 1), sin_coef.at(k - 1));
}

double HarmonicModel::phase(int k) const {
    return std::atan2(sin_coef.at(k - 1), cos_coef.at(k - 1));
}

NoiseSpec::NoiseSpec(double s) : sigma(s) {
    if (!(s > 0.0)) throw std::invalid_argument("NoiseSpec: sigma must be > 0");
}

void DetectorConfig::validate(int n) const {
    if (!(bandwidth_h > 0.0 && bandwidth_h < 1.0)) {
        throw std::invalid_argument("DetectorConfig: bandwidth_h must lie in (0, 1)");
    }
    if (!(significance_alpha > 0.0 && significance_alpha < 1.0)) {
        throw std::invalid_argument("DetectorConfig: significance_alpha must lie in (0, 1)");
    }
    if (max_breaks < 1) throw std::invalid_argument("DetectorConfig: max_breaks must be >= 1");
    if (max_iterations < 1) throw std::invalid_argument("DetectorConfig: max_iterations must be >= 1");
    if (harmonic_order < 1 || harmonic_order > 4) {
        throw std::invalid_argument("DetectorConfig: harmonic_order must lie in 1..4");
    }
    // an intercept+slope segment plus one residual degree of freedom
    if (window_length(n, bandwidth_h) < 3) {
        throw std::invalid_argument("DetectorConfig: ceil(n*h) must be >= 3");
    }
}

int window_length(int n, double h) {
    const double nh = static_cast<double>(n) * h;
    int w = static_cast<int>(std::ceil(nh - 1e-9));
    if (w < 1) w = 1;
    if (w > n) w = n;
    return w;
}

}  // namespace burnscan
