#pragma once

#include "burnscan/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace burnscan {

/// Vegetation change classes. Plane code 0 is reserved for "no data".
enum class SeverityClass : std::uint8_t {
    RegrowthHigh = 1,      // dnbr < -0.25
    RegrowthLow = 2,       // -0.25 <= dnbr < -0.1
    Unburned = 3,          // -0.1  <= dnbr <  0.1
    LowSeverity = 4,       //  0.1  <= dnbr <  0.27
    ModerateSeverity = 5,  //  0.27 <= dnbr <  0.66
    HighSeverity = 6,      //  dnbr >= 0.66
};

const char* severity_name(SeverityClass c);

/// All intervals are lower-closed/upper-open; throws std::invalid_argument
/// for non-finite input.
SeverityClass classify_dnbr(double dnbr);

/// Burned rule of the pre/post assessment: dnbr >= 0.1.
bool is_burned(double dnbr);

struct DnbrValue {
    double value = 0.0;
    bool clamped = false;  // an index fell outside [1, n] and was clamped
};

/// dNBR anchored at a breakpoint: nbr[tau - 23] - nbr[tau + 1] (pre-fire
/// value almost a year earlier minus the value right after the change).
/// Indices outside [1, n] clamp to the series ends and set the flag.
DnbrValue dnbr_at_break(const SampledSeries& nbr, int tau);

/// start_year + floor((tau - 1) / 23); throws std::out_of_range outside [1, n].
int break_to_year(int tau, int start_year, int n);

struct SeverityRecord {
    int pixel_id = 0;
    int break_index = 0;
    int year = 0;
    double dnbr = 0.0;
    SeverityClass cls = SeverityClass::Unburned;
    bool burned = false;
    bool clamped = false;
};

SeverityRecord make_severity_record(int pixel_id, const SampledSeries& nbr, int tau);

struct AreaSummary {
    int year = 0;
    double total_burned_ha = 0.0;
    double frac_low = 0.0;
    double frac_moderate = 0.0;
    double frac_high = 0.0;
    bool detected = false;  // any record in this year (Table-style NA rows carry false)
};

/// Burned area and severity fractions for one calendar year. Fractions are
/// over burned pixels only; zero burned pixels give a zero row.
AreaSummary summarize_year(const std::vector<SeverityRecord>& records, int year,
                           double pixel_area_ha);

/// CSV with columns year,total_burned_ha,frac_low,frac_moderate,frac_high,detected
/// (6-decimal fixed format, one row per summary).
void write_area_summary_csv(const std::string& path, const std::vector<AreaSummary>& rows);

}  // namespace burnscan
