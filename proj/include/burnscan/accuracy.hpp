#pragma once

#include "burnscan/raster.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace burnscan {

struct ConfusionMatrix {
    std::uint64_t true_burned_pred_burned = 0;
    std::uint64_t true_burned_pred_unburned = 0;
    std::uint64_t true_unburned_pred_burned = 0;
    std::uint64_t true_unburned_pred_unburned = 0;

    std::uint64_t total() const {
        return true_burned_pred_burned + true_burned_pred_unburned +
               true_unburned_pred_burned + true_unburned_pred_unburned;
    }
    ConfusionMatrix& operator+=(const ConfusionMatrix& o);
};

/// Counts pred vs ref agreement over region == 1 pixels (planes of 0/1).
ConfusionMatrix confusion(const PlaneU8& pred, const PlaneU8& ref, const PlaneU8& region);

/// Diagonal sum over total; throws std::invalid_argument on an empty matrix.
double overall_accuracy(const ConfusionMatrix& m);

/// Data-quality strata as closed missing-percentage intervals, compared at
/// 2-decimal precision.
struct StrataBounds {
    double poor_lo = 0.50;
    double poor_hi = 0.53;
    double moderate_lo = 0.47;
    double moderate_hi = 0.49;

    static StrataBounds load(const std::string& path);  // JSON
};

struct QualityStrata {
    PlaneU8 poor;
    PlaneU8 moderate;
    PlaneU8 other;
};

/// Partitions the missing-fraction plane into poor / moderate / other masks.
QualityStrata stratify(const PlaneF32& missing_frac, const StrataBounds& bounds);

struct AccuracyRow {
    std::string stratum;
    std::uint64_t n_pixels = 0;
    bool has_accuracy = false;
    double accuracy = 0.0;
};

/// Rows for the whole region plus each stratum intersected with the region.
std::vector<AccuracyRow> accuracy_report(const PlaneU8& pred, const PlaneU8& ref,
                                         const PlaneU8& region, const QualityStrata& strata);

/// CSV: stratum,n_pixels,overall_accuracy (blank accuracy for empty strata).
void write_accuracy_csv(const std::string& path, const std::vector<AccuracyRow>& rows);

}  // namespace burnscan
