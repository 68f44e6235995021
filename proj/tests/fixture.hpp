#pragma once

// Synthetic scene builder shared by the command tests and the acceptance
// suite: per-pixel NDVI/NBR series are inverted into red/nir/swir2 band
// planes so the fixtures exercise the real ingestion path.

#include "burnscan/raster.hpp"
#include "burnscan/rng.hpp"
#include "burnscan/types.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace burnscan::fixture {

struct SceneSpec {
    int width = 4;
    int height = 4;
    int years = 14;           // full grid 2003..2016
    int break_tau = 150;      // NDVI/NBR drop position for burn pixels
    double sigma = 0.0;
    double missing_prob = 0.0;
    std::uint64_t seed = 1234;
    double pixel_area_ha = 0.09;
};

inline bool default_burn_region(const SceneSpec& spec, int row, int col) {
    return row < spec.height / 2 && col < spec.width / 2;
}

/// NDVI target: seasonal greening plus a one-break trend for burn pixels.
inline double ndvi_value(const SceneSpec& spec, bool burn, int t) {
    const double season = 0.1 * std::cos(2.0 * std::numbers::pi * t / kCadence);
    double trend = 0.7;
    if (burn && t > spec.break_tau) {
        trend = 0.3 + 0.2 * (t - spec.break_tau) / 161.0;
    }
    return trend + season;
}

/// NBR target: flat, with a persistent post-fire drop for burn pixels.
inline double nbr_value(const SceneSpec& spec, bool burn, int t) {
    if (burn && t > spec.break_tau) return 0.1;
    return 0.5;
}

/// Writes band planes plus manifest.json under dir; returns the manifest path.
/// Every (pixel, date) drawn missing gets NaN in all three bands.
template <typename BurnRegion>
std::string write_scene(const std::string& dir, const SceneSpec& spec, BurnRegion&& is_burn) {
    const int n = spec.years * kCadence;
    StackManifest manifest;
    manifest.width = spec.width;
    manifest.height = spec.height;
    manifest.pixel_area_ha = spec.pixel_area_ha;

    for (int t = 1; t <= n; ++t) {
        const int year = 2003 + (t - 1) / kCadence;
        const int step = (t - 1) % kCadence + 1;
        PlaneF32 red(spec.width, spec.height);
        PlaneF32 nir(spec.width, spec.height);
        PlaneF32 swir2(spec.width, spec.height);
        for (int row = 0; row < spec.height; ++row) {
            for (int col = 0; col < spec.width; ++col) {
                const bool burn = is_burn(row, col);
                Rng rng(derive_stream(spec.seed,
                                      (static_cast<std::uint64_t>(row) * spec.width + col) * 1000 +
                                          static_cast<std::uint64_t>(t),
                                      StreamTag::Noise));
                if (rng.uniform() < spec.missing_prob) {
                    red.at(row, col) = std::nanf("");
                    nir.at(row, col) = std::nanf("");
                    swir2.at(row, col) = std::nanf("");
                    continue;
                }
                double ndvi = ndvi_value(spec, burn, t) + spec.sigma * rng.normal();
                double nbr = nbr_value(spec, burn, t) + spec.sigma * rng.normal();
                if (ndvi > 0.95) ndvi = 0.95;
                if (ndvi < -0.95) ndvi = -0.95;
                if (nbr > 0.95) nbr = 0.95;
                if (nbr < -0.95) nbr = -0.95;
                // invert the two normalized differences around a fixed NIR
                const double nir_val = 0.4;
                red.at(row, col) = static_cast<float>(nir_val * (1.0 - ndvi) / (1.0 + ndvi));
                nir.at(row, col) = static_cast<float>(nir_val);
                swir2.at(row, col) = static_cast<float>(nir_val * (1.0 - nbr) / (1.0 + nbr));
            }
        }
        const std::string stem = std::to_string(year) + "_" + std::to_string(step);
        write_plane(dir + "/red_" + stem + ".f32", red, "fixture red band");
        write_plane(dir + "/nir_" + stem + ".f32", nir, "fixture nir band");
        write_plane(dir + "/swir2_" + stem + ".f32", swir2, "fixture swir2 band");
        manifest.dates.push_back({year, step, "red_" + stem + ".f32", "nir_" + stem + ".f32",
                                  "swir2_" + stem + ".f32"});
    }
    const std::string path = dir + "/manifest.json";
    manifest.save(path);
    return path;
}

}  // namespace burnscan::fixture
