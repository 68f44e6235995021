#pragma once

#include "burnscan/types.hpp"

namespace burnscan {

/// Ordinary least squares fit of mean + `order` harmonic pairs on the
/// 23-step annual cycle. The series must be fully observed with
/// n >= 2*order + 2. Throws std::invalid_argument on precondition failure
/// and std::runtime_error if the design is numerically rank deficient.
HarmonicModel fit_harmonic(const SampledSeries& series, int order);

/// Same fit on a raw value vector (1-based time starts at t = 1).
HarmonicModel fit_harmonic(const std::vector<double>& values, int order);

}  // namespace burnscan
