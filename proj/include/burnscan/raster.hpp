#pragma once

#include "burnscan/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace burnscan {

/// Row-major single-band raster.
template <typename T>
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Plane() = default;
    Plane(int w, int h, T init = T{}) : width(w), height(h), data(static_cast<std::size_t>(w) * h, init) {}

    T& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
    const T& at(int row, int col) const { return data[static_cast<std::size_t>(row) * width + col]; }
    std::size_t size() const { return data.size(); }
    bool same_shape(int w, int h) const { return width == w && height == h; }
};

using PlaneF32 = Plane<float>;
using PlaneU8 = Plane<std::uint8_t>;

/// Writes `<path>` (raw little-endian, row-major) plus a `<stem>.json`
/// sidecar carrying width/height/dtype/description/tool_version. `path` must
/// end in .f32 / .u8 respectively. Round-trips bit-exact.
void write_plane(const std::string& path, const PlaneF32& plane, const std::string& description);
void write_plane(const std::string& path, const PlaneU8& plane, const std::string& description);

PlaneF32 read_plane_f32(const std::string& path);
PlaneU8 read_plane_u8(const std::string& path);

/// One 16-day slot of a stack manifest.
struct ManifestDate {
    int year = 0;
    int step = 0;  // 1..23
    std::string red, nir, swir2;
};

/// JSON manifest listing the per-date band rasters of a scene. Missing
/// (year, step) slots become masked samples in every extracted series.
struct StackManifest {
    int width = 0;
    int height = 0;
    double pixel_area_ha = 0.09;
    std::vector<ManifestDate> dates;  // strictly increasing on (year, step)

    static StackManifest load(const std::string& path);
    void save(const std::string& path) const;

    int start_year() const;
    int year_count() const;
    /// Total slots on the 16-day grid: 23 * year_count().
    int slot_count() const;
    /// 0-based slot of a (year, step) date.
    int slot_of(int year, int step) const;
};

enum class IndexKind { Ndvi, Nbr };

/// Normalized difference (a - b) / (a + b); NaN when either input is NaN or
/// |a + b| < 1e-9. Shapes must match.
PlaneF32 normalized_difference(const PlaneF32& a, const PlaneF32& b);
/// NDVI = (nir - red) / (nir + red)
PlaneF32 compute_ndvi(const PlaneF32& red, const PlaneF32& nir);
/// NBR = (nir - swir2) / (nir + swir2)
PlaneF32 compute_nbr(const PlaneF32& nir, const PlaneF32& swir2);

/// Dense [slot][row][col] stack of one spectral index over the full 16-day
/// grid; slots without a manifest date hold NaN.
struct IndexStack {
    int width = 0;
    int height = 0;
    int n_dates = 0;  // 23 * years
    int start_year = 0;
    std::vector<float> values;

    float at(int date, int row, int col) const {
        return values[(static_cast<std::size_t>(date) * height + row) * width + col];
    }
    float& at(int date, int row, int col) {
        return values[(static_cast<std::size_t>(date) * height + row) * width + col];
    }
};

/// Reads every band file referenced by the manifest (paths resolved relative
/// to the manifest's directory) and assembles the index stack.
IndexStack build_index_stack(const StackManifest& manifest, const std::string& manifest_dir,
                             IndexKind kind);

/// Per-pixel series; NaN samples and absent slots are masked.
SampledSeries extract_series(const IndexStack& stack, int row, int col);

}  // namespace burnscan
