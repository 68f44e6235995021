#include "burnscan/accuracy.hpp"

#include "burnscan/version.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace burnscan {

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& o) {
    true_burned_pred_burned += o.true_burned_pred_burned;
    true_burned_pred_unburned += o.true_burned_pred_unburned;
    true_unburned_pred_burned += o.true_unburned_pred_burned;
    true_unburned_pred_unburned += o.true_unburned_pred_unburned;
    return *this;
}

ConfusionMatrix confusion(const PlaneU8& pred, const PlaneU8& ref, const PlaneU8& region) {
    if (!pred.same_shape(ref.width, ref.height) || !pred.same_shape(region.width, region.height)) {
        throw std::invalid_argument("confusion: plane shapes differ");
    }
    ConfusionMatrix m;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (!region.data[i]) continue;
        const bool p = pred.data[i] != 0;
        const bool r = ref.data[i] != 0;
        if (r && p) ++m.true_burned_pred_burned;
        else if (r && !p) ++m.true_burned_pred_unburned;
        else if (!r && p) ++m.true_unburned_pred_burned;
        else ++m.true_unburned_pred_unburned;
    }
    return m;
}

double overall_accuracy(const ConfusionMatrix& m) {
    const std::uint64_t total = m.total();
    if (total == 0) throw std::invalid_argument("overall_accuracy: empty confusion matrix");
    return static_cast<double>(m.true_burned_pred_burned + m.true_unburned_pred_unburned) /
           static_cast<double>(total);
}

StrataBounds StrataBounds::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read strata bounds: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    StrataBounds b;
    if (j.contains("poor")) {
        b.poor_lo = j["poor"].at(0).get<double>();
        b.poor_hi = j["poor"].at(1).get<double>();
    }
    if (j.contains("moderate")) {
        b.moderate_lo = j["moderate"].at(0).get<double>();
        b.moderate_hi = j["moderate"].at(1).get<double>();
    }
    return b;
}

QualityStrata stratify(const PlaneF32& missing_frac, const StrataBounds& bounds) {
    QualityStrata s;
    s.poor = PlaneU8(missing_frac.width, missing_frac.height, 0);
    s.moderate = PlaneU8(missing_frac.width, missing_frac.height, 0);
    s.other = PlaneU8(missing_frac.width, missing_frac.height, 0);
    for (std::size_t i = 0; i < missing_frac.size(); ++i) {
        // closed interval membership on the percentage rounded to 2 decimals
        const double pct = std::round(static_cast<double>(missing_frac.data[i]) * 10000.0) / 100.0;
        const double eps = 1e-9;
        if (pct >= bounds.poor_lo * 100.0 - eps && pct <= bounds.poor_hi * 100.0 + eps) {
            s.poor.data[i] = 1;
        } else if (pct >= bounds.moderate_lo * 100.0 - eps &&
                   pct <= bounds.moderate_hi * 100.0 + eps) {
            s.moderate.data[i] = 1;
        } else {
            s.other.data[i] = 1;
        }
    }
    return s;
}

namespace {

PlaneU8 intersect(const PlaneU8& a, const PlaneU8& b) {
    PlaneU8 out(a.width, a.height, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = (a.data[i] && b.data[i]) ? 1 : 0;
    return out;
}

AccuracyRow make_row(const std::string& name, const PlaneU8& pred, const PlaneU8& ref,
                     const PlaneU8& region) {
    const ConfusionMatrix m = confusion(pred, ref, region);
    AccuracyRow row;
    row.stratum = name;
    row.n_pixels = m.total();
    if (row.n_pixels > 0) {
        row.has_accuracy = true;
        row.accuracy = overall_accuracy(m);
    }
    return row;
}

}  // namespace

std::vector<AccuracyRow> accuracy_report(const PlaneU8& pred, const PlaneU8& ref,
                                         const PlaneU8& region, const QualityStrata& strata) {
    std::vector<AccuracyRow> rows;
    rows.push_back(make_row("whole", pred, ref, region));
    rows.push_back(make_row("poor", pred, ref, intersect(region, strata.poor)));
    rows.push_back(make_row("moderate", pred, ref, intersect(region, strata.moderate)));
    return rows;
}

void write_accuracy_csv(const std::string& path, const std::vector<AccuracyRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write accuracy report: " + path);
    out << "# tool_version=" << kVersion << "\n";
    out << "stratum,n_pixels,overall_accuracy\n";
    char line[160];
    for (const AccuracyRow& r : rows) {
        if (r.has_accuracy) {
            std::snprintf(line, sizeof(line), "%s,%llu,%.6f\n", r.stratum.c_str(),
                          static_cast<unsigned long long>(r.n_pixels), r.accuracy);
        } else {
            std::snprintf(line, sizeof(line), "%s,%llu,\n", r.stratum.c_str(),
                          static_cast<unsigned long long>(r.n_pixels));
        }
        out << line;
    }
}

}  // namespace burnscan
