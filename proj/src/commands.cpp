#include "burnscan/commands.hpp"

#include "burnscan/accuracy.hpp"
#include "burnscan/scene.hpp"
#include "burnscan/simkit.hpp"
#include "burnscan/version.hpp"

#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace burnscan {

namespace fs = std::filesystem;

FillMethod parse_fill(const std::string& name) {
    if (name == "linear") return FillMethod::Linear;
    if (name == "spline") return FillMethod::CubicSpline;
    throw std::invalid_argument("unknown fill method '" + name + "' (expected linear|spline)");
}

void apply_thread_count(int threads) {
    if (threads > 0) omp_set_num_threads(threads);
}

namespace {

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void write_breaks_csv(const std::string& path, const SceneDetection& scene) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# tool_version=" << kVersion << "\n";
    out << "row,col,ok,significant,missing_frac,n_breaks,breaks,years\n";
    char buf[128];
    for (int row = 0; row < scene.height; ++row) {
        for (int col = 0; col < scene.width; ++col) {
            const PixelDetection& px = scene.at(row, col);
            std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%.6f,%d,", row, col, px.ok ? 1 : 0,
                          px.significant ? 1 : 0, static_cast<double>(px.missing_frac),
                          static_cast<int>(px.breaks.size()));
            out << buf;
            for (std::size_t k = 0; k < px.breaks.size(); ++k) {
                out << (k ? ";" : "") << px.breaks[k];
            }
            out << ',';
            for (std::size_t k = 0; k < px.years.size(); ++k) {
                out << (k ? ";" : "") << px.years[k];
            }
            out << '\n';
        }
    }
}

std::vector<int> parse_int_list(const std::string& field) {
    std::vector<int> out;
    std::stringstream ss(field);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

SceneDetection read_breaks_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path + " (run detect first)");
    std::string line;
    std::vector<std::pair<std::pair<int, int>, PixelDetection>> rows;
    int max_row = -1, max_col = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("row,", 0) == 0) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() < 6) throw std::runtime_error("malformed breaks row: " + line);
        PixelDetection px;
        const int row = std::stoi(fields[0]);
        const int col = std::stoi(fields[1]);
        if (row < 0 || col < 0) throw std::runtime_error("negative pixel index in " + path);
        px.ok = fields[2] == "1";
        px.significant = fields[3] == "1";
        px.missing_frac = std::stof(fields[4]);
        if (fields.size() > 6) px.breaks = parse_int_list(fields[6]);
        if (fields.size() > 7) px.years = parse_int_list(fields[7]);
        max_row = std::max(max_row, row);
        max_col = std::max(max_col, col);
        rows.emplace_back(std::make_pair(row, col), std::move(px));
    }
    SceneDetection scene;
    scene.width = max_col + 1;
    scene.height = max_row + 1;
    if (scene.width <= 0 || scene.height <= 0 ||
        rows.size() != static_cast<std::size_t>(scene.width) * scene.height) {
        throw std::runtime_error("breaks table does not cover a full raster: " + path);
    }
    scene.pixels.resize(rows.size());
    std::vector<bool> seen(rows.size(), false);
    for (auto& [pos, px] : rows) {
        const std::size_t at = static_cast<std::size_t>(pos.first) * scene.width + pos.second;
        if (seen[at]) throw std::runtime_error("duplicate pixel row in " + path);
        seen[at] = true;
        scene.pixels[at] = std::move(px);
    }
    for (const PixelDetection& px : scene.pixels) scene.n_failed += px.ok ? 0 : 1;
    return scene;
}

}  // namespace

void cmd_detect(const DetectCommand& cmd) {
    apply_thread_count(cmd.threads);
    ensure_dir(cmd.out_dir);

    const StackManifest manifest = StackManifest::load(cmd.manifest);
    const std::string manifest_dir = fs::path(cmd.manifest).parent_path().string();
    const IndexStack ndvi = build_index_stack(manifest, manifest_dir, IndexKind::Ndvi);

    SceneDetectOptions opts;
    opts.h = cmd.h;
    opts.alpha = cmd.alpha;
    opts.fill = parse_fill(cmd.fill);
    opts.harmonic_order = cmd.harmonics;
    opts.max_breaks = cmd.max_breaks;
    const SceneDetection scene = detect_scene(ndvi, opts);

    write_breaks_csv(join(cmd.out_dir, "breaks.csv"), scene);
    write_plane(join(cmd.out_dir, "break_year.f32"), break_year_plane(scene),
                "calendar year of the first detected break (NaN = none)");
    write_plane(join(cmd.out_dir, "missing_fraction.f32"), missing_fraction_plane(ndvi),
                "fraction of missing NDVI samples per pixel");
}

void cmd_map(const MapCommand& cmd) {
    apply_thread_count(cmd.threads);
    ensure_dir(cmd.out_dir);

    const StackManifest manifest = StackManifest::load(cmd.manifest);
    const std::string manifest_dir = fs::path(cmd.manifest).parent_path().string();
    const SceneDetection scene = read_breaks_csv(join(cmd.detect_dir, "breaks.csv"));
    if (scene.width != manifest.width || scene.height != manifest.height) {
        throw std::runtime_error("breaks table shape does not match the manifest");
    }
    const IndexStack nbr = build_index_stack(manifest, manifest_dir, IndexKind::Nbr);

    const SceneMaps maps = map_scene(scene, nbr, parse_fill(cmd.fill), manifest.pixel_area_ha);
    for (const YearMaps& ym : maps.years) {
        const std::string year = std::to_string(ym.year);
        write_plane(join(cmd.out_dir, "severity_" + year + ".u8"), ym.severity,
                    "severity class codes for " + year +
                        " (0 none, 1-2 regrowth high/low, 3 unburned, 4-6 severity low/moderate/high)");
        write_plane(join(cmd.out_dir, "burned_" + year + ".u8"), ym.burned,
                    "burned mask for " + year + " (dNBR >= 0.1)");
    }
    write_area_summary_csv(join(cmd.out_dir, "area_summary.csv"), maps.summaries);
}

void cmd_simulate(const SimulateCommand& cmd) {
    apply_thread_count(cmd.threads);
    ensure_dir(cmd.out_dir);

    ExperimentGrid grid = ExperimentGrid::load(cmd.grid);
    if (cmd.replicates > 0) grid.replicates = cmd.replicates;
    if (cmd.seed >= 0) grid.seed = static_cast<std::uint64_t>(cmd.seed);

    const std::vector<SimScenario> cells = grid.expand();
    std::vector<SimMetrics> metrics;
    metrics.reserve(cells.size());
    for (const SimScenario& cell : cells) metrics.push_back(run_experiment(cell));
    write_metrics_csv(join(cmd.out_dir, "metrics.csv"), cells, metrics);
}

void cmd_simulate_critvals(const CritvalsCommand& cmd) {
    apply_thread_count(cmd.threads);
    const CriticalValueTable table =
        generate_critical_values(cmd.hs, cmd.alphas, cmd.grid_n, cmd.replicates, cmd.seed);
    table.save(cmd.out);
}

void cmd_assess(const AssessCommand& cmd) {
    ensure_dir(cmd.out_dir);
    const PlaneU8 pred = read_plane_u8(cmd.pred);
    const PlaneU8 ref = read_plane_u8(cmd.ref);
    const PlaneF32 missing = read_plane_f32(cmd.missing);
    if (!pred.same_shape(ref.width, ref.height) ||
        !pred.same_shape(missing.width, missing.height)) {
        throw std::invalid_argument("assess: plane shapes differ");
    }
    StrataBounds bounds;
    if (!cmd.strata.empty()) bounds = StrataBounds::load(cmd.strata);
    PlaneU8 region(pred.width, pred.height, 1);
    if (!cmd.region.empty()) {
        region = read_plane_u8(cmd.region);
        if (!region.same_shape(pred.width, pred.height)) {
            throw std::invalid_argument("assess: region shape differs");
        }
    }
    const QualityStrata strata = stratify(missing, bounds);
    write_accuracy_csv(join(cmd.out_dir, "accuracy.csv"),
                       accuracy_report(pred, ref, region, strata));
}

}  // namespace burnscan
