#pragma once

#include "burnscan/types.hpp"

namespace burnscan {

struct FillResult {
    SampledSeries series;  // mask all-true
    // CubicSpline with fewer than 4 observed points falls back to Linear.
    bool spline_fallback = false;
};

/// Fill every masked position by temporal interpolation between observed
/// neighbors. Interior gaps: piecewise-linear (Linear) or natural cubic
/// spline through all observed points (CubicSpline). Leading/trailing gaps:
/// constant extension of the nearest observed value. Observed values pass
/// through bit-exact. Throws std::invalid_argument with < 2 observed values.
FillResult fill(const SampledSeries& series, FillMethod method);

/// count(mask == false) / n.
double missing_fraction(const SampledSeries& series);

}  // namespace burnscan
