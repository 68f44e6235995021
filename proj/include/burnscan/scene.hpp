#pragma once

#include "burnscan/detect.hpp"
#include "burnscan/raster.hpp"
#include "burnscan/severity.hpp"

#include <vector>

namespace burnscan {

struct SceneDetectOptions {
    double h = 0.15;
    double alpha = 0.05;
    FillMethod fill = FillMethod::Linear;
    int harmonic_order = 2;
    int max_breaks = 8;
    int max_iterations = 10;
};

struct PixelDetection {
    bool ok = false;           // detector ran without a numeric failure
    bool significant = false;
    float missing_frac = 1.0f;
    std::vector<int> breaks;
    std::vector<int> years;
};

struct SceneDetection {
    int width = 0;
    int height = 0;
    int start_year = 0;
    std::vector<PixelDetection> pixels;  // row-major
    int n_failed = 0;

    const PixelDetection& at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

/// Per-pixel break detection over an index stack. The OpenMP version
/// distributes rows over threads; results are identical to the serial
/// reference for any thread count. Pixels whose series cannot be processed
/// (all missing, degenerate) are marked not-ok and do not abort the scene.
SceneDetection detect_scene(const IndexStack& ndvi, const SceneDetectOptions& opts);
SceneDetection detect_scene_serial(const IndexStack& ndvi, const SceneDetectOptions& opts);

/// Missing-data fraction per pixel (NaN slots and absent dates).
PlaneF32 missing_fraction_plane(const IndexStack& stack);

/// Break year of each pixel's first detected break as f32 (NaN = none).
PlaneF32 break_year_plane(const SceneDetection& det);

struct YearMaps {
    int year = 0;
    PlaneU8 severity;  // codes 0 (no data / no break) .. 6 (SeverityClass)
    PlaneU8 burned;    // 0 / 1
};

struct SceneMaps {
    std::vector<YearMaps> years;            // one entry per calendar year of the stack
    std::vector<SeverityRecord> records;    // one per (pixel, break)
    std::vector<AreaSummary> summaries;     // per year, Table-style
};

/// Converts detected breaks plus the NBR stack into per-year severity and
/// burned planes and area summaries. When several breaks of a pixel fall in
/// the same year, the record with the larger |dNBR| wins.
SceneMaps map_scene(const SceneDetection& det, const IndexStack& nbr, FillMethod fill,
                    double pixel_area_ha);

}  // namespace burnscan
