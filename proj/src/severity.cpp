#include "burnscan/severity.hpp"

#include "burnscan/version.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace burnscan {

const char* severity_name(SeverityClass c) {
    switch (c) {
        case SeverityClass::RegrowthHigh: return "regrowth_high";
        case SeverityClass::RegrowthLow: return "regrowth_low";
        case SeverityClass::Unburned: return "unburned";
        case SeverityClass::LowSeverity: return "low";
        case SeverityClass::ModerateSeverity: return "moderate";
        case SeverityClass::HighSeverity: return "high";
    }
    return "unknown";
}

SeverityClass classify_dnbr(double dnbr) {
    if (!std::isfinite(dnbr)) throw std::invalid_argument("classify_dnbr: non-finite dNBR");
    if (dnbr < -0.25) return SeverityClass::RegrowthHigh;
    if (dnbr < -0.1) return SeverityClass::RegrowthLow;
    if (dnbr < 0.1) return SeverityClass::Unburned;
    if (dnbr < 0.27) return SeverityClass::LowSeverity;
    if (dnbr < 0.66) return SeverityClass::ModerateSeverity;
    return SeverityClass::HighSeverity;
}

bool is_burned(double dnbr) { return dnbr >= 0.1; }

DnbrValue dnbr_at_break(const SampledSeries& nbr, int tau) {
    if (!nbr.fully_observed()) {
        throw std::invalid_argument("dnbr_at_break: NBR series must be fully observed");
    }
    const int n = nbr.size();
    DnbrValue out;
    int pre = tau - kCadence;
    int post = tau + 1;
    if (pre < 1) {
        pre = 1;
        out.clamped = true;
    }
    if (post > n) {
        post = n;
        out.clamped = true;
    }
    out.value = nbr.values[pre - 1] - nbr.values[post - 1];
    return out;
}

int break_to_year(int tau, int start_year, int n) {
    if (tau < 1 || tau > n) throw std::out_of_range("break_to_year: tau outside [1, n]");
    return start_year + (tau - 1) / kCadence;
}

SeverityRecord make_severity_record(int pixel_id, const SampledSeries& nbr, int tau) {
    const DnbrValue d = dnbr_at_break(nbr, tau);
    SeverityRecord rec;
    rec.pixel_id = pixel_id;
    rec.break_index = tau;
    rec.year = break_to_year(tau, nbr.start_year, nbr.size());
    rec.dnbr = d.value;
    rec.cls = classify_dnbr(d.value);
    rec.burned = is_burned(d.value);
    rec.clamped = d.clamped;
    return rec;
}

AreaSummary summarize_year(const std::vector<SeverityRecord>& records, int year,
                           double pixel_area_ha) {
    if (!(pixel_area_ha > 0.0)) {
        throw std::invalid_argument("summarize_year: pixel_area_ha must be > 0");
    }
    AreaSummary s;
    s.year = year;
    long burned = 0, low = 0, moderate = 0, high = 0;
    for (const SeverityRecord& r : records) {
        if (r.year != year) continue;
        s.detected = true;
        if (!r.burned) continue;
        ++burned;
        if (r.cls == SeverityClass::LowSeverity) ++low;
        else if (r.cls == SeverityClass::ModerateSeverity) ++moderate;
        else if (r.cls == SeverityClass::HighSeverity) ++high;
    }
    s.total_burned_ha = pixel_area_ha * static_cast<double>(burned);
    if (burned > 0) {
        s.frac_low = static_cast<double>(low) / burned;
        s.frac_moderate = static_cast<double>(moderate) / burned;
        s.frac_high = static_cast<double>(high) / burned;
    }
    return s;
}

void write_area_summary_csv(const std::string& path, const std::vector<AreaSummary>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write area summary: " + path);
    out << "# tool_version=" << kVersion << "\n";
    out << "year,total_burned_ha,frac_low,frac_moderate,frac_high,detected\n";
    char line[160];
    for (const AreaSummary& r : rows) {
        std::snprintf(line, sizeof(line), "%d,%.6f,%.6f,%.6f,%.6f,%d\n", r.year,
                      r.total_burned_ha, r.frac_low, r.frac_moderate, r.frac_high,
                      r.detected ? 1 : 0);
        out << line;
    }
}

}  // namespace burnscan
