#include "burnscan/scene.hpp"

#include "burnscan/gapfill.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace burnscan {

namespace {

PixelDetection detect_pixel(const IndexStack& ndvi, int row, int col,
                            const SceneDetectOptions& opts, const CriticalValueTable& table) {
    PixelDetection px;
    const SampledSeries series = extract_series(ndvi, row, col);
    px.missing_frac = static_cast<float>(missing_fraction(series));
    try {
        DetectorConfig cfg;
        cfg.bandwidth_h = opts.h;
        cfg.significance_alpha = opts.alpha;
        cfg.max_breaks = opts.max_breaks;
        cfg.max_iterations = opts.max_iterations;
        cfg.harmonic_order = opts.harmonic_order;
        const DetectionResult det = detect(series, cfg, opts.fill, table);
        px.ok = true;
        px.significant = det.significant;
        px.breaks = det.breakpoints;
        px.years.reserve(px.breaks.size());
        for (int tau : px.breaks) px.years.push_back(series.year_of(tau));
    } catch (const std::exception&) {
        px.ok = false;  // soft failure: pixel becomes nodata
    }
    return px;
}

SceneDetection run_scene(const IndexStack& ndvi, const SceneDetectOptions& opts, bool parallel) {
    const CriticalValueTable& table = CriticalValueTable::builtin();
    // fail fast on an untabulated (h, alpha) before touching any pixel
    (void)table.critical_value(opts.h, opts.alpha);

    SceneDetection scene;
    scene.width = ndvi.width;
    scene.height = ndvi.height;
    scene.start_year = ndvi.start_year;
    scene.pixels.resize(static_cast<std::size_t>(ndvi.width) * ndvi.height);

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int row = 0; row < ndvi.height; ++row) {
            for (int col = 0; col < ndvi.width; ++col) {
                scene.pixels[static_cast<std::size_t>(row) * ndvi.width + col] =
                    detect_pixel(ndvi, row, col, opts, table);
            }
        }
    } else {
        for (int row = 0; row < ndvi.height; ++row) {
            for (int col = 0; col < ndvi.width; ++col) {
                scene.pixels[static_cast<std::size_t>(row) * ndvi.width + col] =
                    detect_pixel(ndvi, row, col, opts, table);
            }
        }
    }
    for (const PixelDetection& px : scene.pixels) scene.n_failed += px.ok ? 0 : 1;
    return scene;
}

}  // namespace

SceneDetection detect_scene(const IndexStack& ndvi, const SceneDetectOptions& opts) {
    return run_scene(ndvi, opts, true);
}

SceneDetection detect_scene_serial(const IndexStack& ndvi, const SceneDetectOptions& opts) {
    return run_scene(ndvi, opts, false);
}

PlaneF32 missing_fraction_plane(const IndexStack& stack) {
    PlaneF32 plane(stack.width, stack.height);
    for (int row = 0; row < stack.height; ++row) {
        for (int col = 0; col < stack.width; ++col) {
            int missing = 0;
            for (int d = 0; d < stack.n_dates; ++d) {
                if (std::isnan(stack.at(d, row, col))) ++missing;
            }
            plane.at(row, col) = static_cast<float>(missing) / static_cast<float>(stack.n_dates);
        }
    }
    return plane;
}

PlaneF32 break_year_plane(const SceneDetection& det) {
    PlaneF32 plane(det.width, det.height, std::nanf(""));
    for (int row = 0; row < det.height; ++row) {
        for (int col = 0; col < det.width; ++col) {
            const PixelDetection& px = det.at(row, col);
            if (px.ok && !px.years.empty()) {
                plane.at(row, col) = static_cast<float>(px.years.front());
            }
        }
    }
    return plane;
}

SceneMaps map_scene(const SceneDetection& det, const IndexStack& nbr, FillMethod fill_method,
                    double pixel_area_ha) {
    if (det.width != nbr.width || det.height != nbr.height) {
        throw std::invalid_argument("map_scene: detection and NBR stack shapes differ");
    }
    const int n_pixels = det.width * det.height;
    const int n_years = nbr.n_dates / kCadence;

    // per-pixel records, index-addressed so the loop parallelizes deterministically
    std::vector<std::vector<SeverityRecord>> per_pixel(n_pixels);
#pragma omp parallel for schedule(dynamic, 64)
    for (int p = 0; p < n_pixels; ++p) {
        const PixelDetection& px = det.pixels[p];
        if (!px.ok || px.breaks.empty()) continue;
        const int row = p / det.width;
        const int col = p % det.width;
        SampledSeries nbr_series = extract_series(nbr, row, col);
        if (nbr_series.observed_count() < 2) continue;
        const SampledSeries filled = fill(nbr_series, fill_method).series;

        // strongest |dNBR| wins when several breaks land in the same year
        std::vector<SeverityRecord> recs;
        for (int tau : px.breaks) {
            const SeverityRecord rec = make_severity_record(p, filled, tau);
            auto same_year = std::find_if(recs.begin(), recs.end(), [&](const SeverityRecord& r) {
                return r.year == rec.year;
            });
            if (same_year == recs.end()) {
                recs.push_back(rec);
            } else if (std::abs(rec.dnbr) > std::abs(same_year->dnbr)) {
                *same_year = rec;
            }
        }
        per_pixel[p] = std::move(recs);
    }

    SceneMaps maps;
    for (const auto& recs : per_pixel) {
        maps.records.insert(maps.records.end(), recs.begin(), recs.end());
    }

    maps.years.reserve(n_years);
    for (int yi = 0; yi < n_years; ++yi) {
        YearMaps ym;
        ym.year = nbr.start_year + yi;
        ym.severity = PlaneU8(det.width, det.height, 0);
        ym.burned = PlaneU8(det.width, det.height, 0);
        maps.years.push_back(std::move(ym));
    }
    for (const SeverityRecord& rec : maps.records) {
        const int yi = rec.year - nbr.start_year;
        if (yi < 0 || yi >= n_years) continue;
        maps.years[yi].severity.data[rec.pixel_id] = static_cast<std::uint8_t>(rec.cls);
        maps.years[yi].burned.data[rec.pixel_id] = rec.burned ? 1 : 0;
    }
    for (int yi = 0; yi < n_years; ++yi) {
        maps.summaries.push_back(
            summarize_year(maps.records, nbr.start_year + yi, pixel_area_ha));
    }
    return maps;
}

}  // namespace burnscan
