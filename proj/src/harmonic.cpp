#include "burnscan/harmonic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace burnscan {

HarmonicModel fit_harmonic(const std::vector<double>& values, int order) {
    const int n = static_cast<int>(values.size());
    const int p = 2 * order + 1;
    if (order < 1) throw std::invalid_argument("fit_harmonic: order must be >= 1");
    if (n < p + 1) throw std::invalid_argument("fit_harmonic: need n >= 2*order + 2");

    Eigen::MatrixXd design(n, p);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        const int t = i + 1;
        design(i, 0) = 1.0;
        for (int k = 1; k <= order; ++k) {
            const double ang = 2.0 * std::numbers::pi * k * t / kCadence;
            design(i, 2 * k - 1) = std::cos(ang);
            design(i, 2 * k) = std::sin(ang);
        }
        y(i) = values[i];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < p) throw std::runtime_error("fit_harmonic: rank-deficient design");
    Eigen::VectorXd coef = qr.solve(y);

    std::vector<double> c(order), s(order);
    for (int k = 1; k <= order; ++k) {
        c[k - 1] = coef(2 * k - 1);
        s[k - 1] = coef(2 * k);
    }
    return HarmonicModel(order, std::move(c), std::move(s), coef(0));
}

HarmonicModel fit_harmonic(const SampledSeries& series, int order) {
    if (!series.fully_observed()) {
        throw std::invalid_argument("fit_harmonic: series must be fully observed (gap-fill first)");
    }
    return fit_harmonic(series.values, order);
}

}  // namespace burnscan
