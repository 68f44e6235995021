#include "burnscan/simkit.hpp"

#include "burnscan/detect.hpp"
#include "burnscan/rng.hpp"
#include "burnscan/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace burnscan {

namespace {

constexpr double kRecoverySlope = 0.2 / 161.0;

}  // namespace

const char* trend_spec_name(TrendSpecKind k) {
    switch (k) {
        case TrendSpecKind::OneBreak: return "one_break";
        case TrendSpecKind::NoChange: return "no_change";
        case TrendSpecKind::TwoBreak: return "two_break";
    }
    return "unknown";
}

PiecewiseTrend SimScenario::true_trend() const {
    switch (trend) {
        case TrendSpecKind::NoChange:
            return PiecewiseTrend({}, {0.0}, {0.0});
        case TrendSpecKind::OneBreak:
            // flat 0.7, then the recovery line 0.3 + 0.2*t/161
            return PiecewiseTrend({161}, {0.7, 0.3}, {0.0, kRecoverySlope});
        case TrendSpecKind::TwoBreak: {
            // two drops to the 0.3 floor with the recovery restarting at each
            // break: 0.3 + 0.2*(t - tau)/161 expressed in global time
            const int tau1 = 100;
            const int tau2 = 100 + two_break_gap;
            return PiecewiseTrend({tau1, tau2},
                                  {0.7, 0.3 - kRecoverySlope * tau1, 0.3 - kRecoverySlope * tau2},
                                  {0.0, kRecoverySlope, kRecoverySlope});
        }
    }
    throw std::logic_error("unreachable trend spec");
}

std::vector<int> SimScenario::true_breaks() const {
    switch (trend) {
        case TrendSpecKind::NoChange: return {};
        case TrendSpecKind::OneBreak: return {161};
        case TrendSpecKind::TwoBreak: return {100, 100 + two_break_gap};
    }
    return {};
}

void SimScenario::validate() const {
    if (!(amplitude >= 0.0)) throw std::invalid_argument("scenario: amplitude must be >= 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("scenario: sigma must be > 0");
    if (missing_count < 0 || missing_count >= kSimLength) {
        throw std::invalid_argument("scenario: missing_count must lie in [0, n)");
    }
    if (replicates < 1) throw std::invalid_argument("scenario: replicates must be >= 1");
    if (trend == TrendSpecKind::TwoBreak &&
        (two_break_gap < 1 || 100 + two_break_gap >= kSimLength)) {
        throw std::invalid_argument("scenario: two_break_gap must keep tau2 inside the series");
    }
    DetectorConfig cfg;
    cfg.bandwidth_h = h;
    cfg.significance_alpha = alpha;
    cfg.max_breaks = max_breaks;
    cfg.max_iterations = max_iterations;
    cfg.harmonic_order = harmonic_order;
    cfg.validate(kSimLength);
}

SampledSeries synth_series(const SimScenario& scenario, int replicate_index) {
    const PiecewiseTrend trend = scenario.true_trend();
    const double phase = scenario.phase_deg * std::numbers::pi / 180.0;
    Rng rng(derive_stream(scenario.seed, static_cast<std::uint64_t>(replicate_index),
                          StreamTag::Noise));
    std::vector<double> y(kSimLength);
    for (int t = 1; t <= kSimLength; ++t) {
        const double season =
            scenario.amplitude * std::cos(2.0 * std::numbers::pi * t / kCadence - phase);
        y[t - 1] = trend.value_at(t) + season + scenario.sigma * rng.normal();
    }
    return SampledSeries::complete(std::move(y), kSimStartYear);
}

SampledSeries apply_missing(const SampledSeries& series, int P, std::uint64_t seed,
                            int replicate_index) {
    const int n = series.size();
    if (P < 0 || P >= n) throw std::invalid_argument("apply_missing: P must lie in [0, n)");
    SampledSeries out = series;
    if (P == 0) return out;
    Rng rng(derive_stream(seed, static_cast<std::uint64_t>(replicate_index), StreamTag::Mask));
    // partial Fisher-Yates: the first P entries of the permutation
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < P; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
        out.mask[idx[i]] = 0;
    }
    return out;
}

ReplicateOutcome run_replicate(const SimScenario& scenario, int replicate_index) {
    ReplicateOutcome out;
    try {
        SampledSeries y = synth_series(scenario, replicate_index);
        y = apply_missing(y, scenario.missing_count, scenario.seed, replicate_index);
        DetectorConfig cfg;
        cfg.bandwidth_h = scenario.h;
        cfg.significance_alpha = scenario.alpha;
        cfg.max_breaks = scenario.max_breaks;
        cfg.max_iterations = scenario.max_iterations;
        cfg.harmonic_order = scenario.harmonic_order;
        const DetectionResult det = detect(y, cfg, scenario.fill);

        out.n_breaks = static_cast<std::int16_t>(det.breakpoints.size());
        const std::vector<int> truth = scenario.true_breaks();
        for (int tau : truth) {
            if (std::find(det.breakpoints.begin(), det.breakpoints.end(), tau) !=
                det.breakpoints.end()) {
                ++out.matched;
            }
        }
        if (det.breakpoints.size() == 1) out.sole_break = det.breakpoints.front();
    } catch (const std::exception&) {
        out.n_breaks = -1;  // counted as no detection
    }
    return out;
}

SimMetrics tally(const SimScenario& scenario, const std::vector<ReplicateOutcome>& outcomes) {
    SimMetrics m;
    m.replicates = static_cast<int>(outcomes.size());
    const std::vector<int> truth = scenario.true_breaks();
    const int target = static_cast<int>(truth.size());

    long n_exact_count = 0, n_correct = 0, n_any = 0, n_over = 0, n_fail = 0;
    long n_one = 0, n_two = 0, n_more = 0;
    long u_one = 0, u_two = 0, u_more = 0;
    double sq_err = 0.0;
    long n_sq = 0;

    for (const ReplicateOutcome& o : outcomes) {
        if (o.n_breaks < 0) {
            ++n_fail;
            continue;
        }
        if (o.n_breaks >= 1) ++n_any;
        if (o.n_breaks == target) {
            ++n_exact_count;
            if (o.matched == target) ++n_correct;
        }
        if (o.n_breaks > target) ++n_over;
        if (o.n_breaks == 1) {
            ++n_one;
            if (o.matched == 1) ++u_one;
            if (target == 1) {
                const double err = static_cast<double>(o.sole_break - truth.front());
                sq_err += err * err;
                ++n_sq;
            }
        } else if (o.n_breaks == 2) {
            ++n_two;
            if (o.matched == 1) ++u_two;
        } else if (o.n_breaks > 2) {
            ++n_more;
            if (o.matched == 1) ++u_more;
        }
    }

    const double n = static_cast<double>(m.replicates);
    m.n_target_count = static_cast<int>(n_exact_count);
    m.n_failures = static_cast<int>(n_fail);
    if (m.replicates > 0) {
        m.coverage = n_exact_count / n;
        m.false_negative_rate = n_any / n;
        m.overestimation = n_over / n;
    }
    if (target > 0 && n_exact_count > 0) {
        m.correct_estimation = static_cast<double>(n_correct) / static_cast<double>(n_exact_count);
    }
    if (n_sq > 0) m.mse = sq_err / static_cast<double>(n_sq);
    if (n_one > 0) m.under_one = static_cast<double>(u_one) / static_cast<double>(n_one);
    if (n_two > 0) m.under_two = static_cast<double>(u_two) / static_cast<double>(n_two);
    if (n_more > 0) m.under_more = static_cast<double>(u_more) / static_cast<double>(n_more);
    return m;
}

SimMetrics run_experiment_serial(const SimScenario& scenario) {
    scenario.validate();
    std::vector<ReplicateOutcome> outcomes(scenario.replicates);
    for (int r = 0; r < scenario.replicates; ++r) outcomes[r] = run_replicate(scenario, r);
    return tally(scenario, outcomes);
}

SimMetrics run_experiment(const SimScenario& scenario) {
    scenario.validate();
    std::vector<ReplicateOutcome> outcomes(scenario.replicates);
#pragma omp parallel for schedule(dynamic, 8)
    for (int r = 0; r < scenario.replicates; ++r) outcomes[r] = run_replicate(scenario, r);
    return tally(scenario, outcomes);
}

ExperimentGrid ExperimentGrid::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read grid config: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    ExperimentGrid g;

    const std::string trend = j.value("trend", "one_break");
    if (trend == "one_break") g.trend = TrendSpecKind::OneBreak;
    else if (trend == "no_change") g.trend = TrendSpecKind::NoChange;
    else if (trend == "two_break") g.trend = TrendSpecKind::TwoBreak;
    else throw std::runtime_error("grid config: unknown trend '" + trend + "'");

    if (j.contains("amplitudes")) g.amplitudes = j["amplitudes"].get<std::vector<double>>();
    if (j.contains("sigmas")) g.sigmas = j["sigmas"].get<std::vector<double>>();
    if (j.contains("h")) g.hs = j["h"].get<std::vector<double>>();
    if (j.contains("missing_counts")) g.missing_counts = j["missing_counts"].get<std::vector<int>>();
    if (j.contains("gaps")) g.gaps = j["gaps"].get<std::vector<int>>();
    if (j.contains("fills")) {
        g.fills.clear();
        for (const auto& f : j["fills"]) {
            const std::string name = f.get<std::string>();
            if (name == "linear") g.fills.push_back(FillMethod::Linear);
            else if (name == "spline") g.fills.push_back(FillMethod::CubicSpline);
            else throw std::runtime_error("grid config: unknown fill '" + name + "'");
        }
    }
    g.alpha = j.value("alpha", 0.05);
    g.harmonic_order = j.value("harmonic_order", 2);
    g.max_breaks = j.value("max_breaks", 8);
    g.max_iterations = j.value("max_iterations", 10);
    g.replicates = j.value("replicates", 1000);
    g.seed = j.value("seed", std::uint64_t{1});

    if (g.amplitudes.empty() || g.sigmas.empty() || g.hs.empty() || g.missing_counts.empty() ||
        g.fills.empty() || g.gaps.empty()) {
        throw std::runtime_error("grid config: empty axis");
    }
    return g;
}

std::vector<SimScenario> ExperimentGrid::expand() const {
    std::vector<SimScenario> cells;
    const std::vector<int> gap_axis = trend == TrendSpecKind::TwoBreak ? gaps : std::vector<int>{0};
    for (double amp : amplitudes)
        for (double sg : sigmas)
            for (double hv : hs)
                for (FillMethod fm : fills)
                    for (int p : missing_counts)
                        for (int gap : gap_axis) {
                            SimScenario s;
                            s.trend = trend;
                            s.amplitude = amp;
                            s.sigma = sg;
                            s.h = hv;
                            s.fill = fm;
                            s.missing_count = p;
                            s.two_break_gap = gap;
                            s.alpha = alpha;
                            s.harmonic_order = harmonic_order;
                            s.max_breaks = max_breaks;
                            s.max_iterations = max_iterations;
                            s.replicates = replicates;
                            s.seed = seed;
                            s.validate();
                            cells.push_back(s);
                        }
    return cells;
}

void write_metrics_csv(const std::string& path, const std::vector<SimScenario>& cells,
                       const std::vector<SimMetrics>& metrics) {
    if (cells.size() != metrics.size()) {
        throw std::invalid_argument("write_metrics_csv: cells/metrics size mismatch");
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write metrics CSV: " + path);
    out << "# tool_version=" << kVersion << "\n";
    out << "trend,amplitude,sigma,h,fill,missing_count,gap,replicates,seed,"
           "coverage,correct_estimation,false_negative_rate,mse,"
           "under_one,under_two,under_more,overestimation,n_target_count,n_failures\n";
    char line[512];
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const SimScenario& s = cells[i];
        const SimMetrics& m = metrics[i];
        std::snprintf(line, sizeof(line),
                      "%s,%.6f,%.6f,%.6f,%s,%d,%d,%d,%llu,"
                      "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%d,%d\n",
                      trend_spec_name(s.trend), s.amplitude, s.sigma, s.h,
                      s.fill == FillMethod::Linear ? "linear" : "spline", s.missing_count,
                      s.two_break_gap, s.replicates,
                      static_cast<unsigned long long>(s.seed), m.coverage, m.correct_estimation,
                      m.false_negative_rate, m.mse, m.under_one, m.under_two, m.under_more,
                      m.overestimation, m.n_target_count, m.n_failures);
        out << line;
    }
}

}  // namespace burnscan
