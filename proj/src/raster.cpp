#include "burnscan/raster.hpp"

#include "burnscan/version.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "plane files are little-endian; big-endian hosts are unsupported");

namespace burnscan {

namespace {

using nlohmann::json;

std::string sidecar_path(const std::string& path) {
    std::filesystem::path p(path);
    p.replace_extension(".json");
    return p.string();
}

void write_sidecar(const std::string& path, int width, int height, const char* dtype,
                   const std::string& description) {
    json j;
    j["width"] = width;
    j["height"] = height;
    j["dtype"] = dtype;
    j["description"] = description;
    j["tool_version"] = kVersion;
    std::ofstream out(sidecar_path(path));
    if (!out) throw std::runtime_error("cannot write sidecar for " + path);
    out << j.dump(2) << "\n";
}

json read_sidecar(const std::string& path, const char* expect_dtype) {
    std::ifstream in(sidecar_path(path));
    if (!in) throw std::runtime_error("missing sidecar for " + path);
    json j = json::parse(in);
    if (j.at("dtype").get<std::string>() != expect_dtype) {
        throw std::runtime_error("dtype mismatch for " + path + ": expected " + expect_dtype +
                                 ", sidecar says " + j.at("dtype").get<std::string>());
    }
    return j;
}

template <typename T>
void write_raw(const std::string& path, const std::vector<T>& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write plane: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size() * sizeof(T)));
    if (!out) throw std::runtime_error("short write: " + path);
}

template <typename T>
std::vector<T> read_raw(const std::string& path, std::size_t count) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read plane: " + path);
    std::vector<T> data(count);
    in.read(reinterpret_cast<char*>(data.data()),
            static_cast<std::streamsize>(count * sizeof(T)));
    if (static_cast<std::size_t>(in.gcount()) != count * sizeof(T)) {
        throw std::runtime_error("plane shorter than its sidecar shape: " + path);
    }
    return data;
}

}  // namespace

void write_plane(const std::string& path, const PlaneF32& plane, const std::string& description) {
    write_raw(path, plane.data);
    write_sidecar(path, plane.width, plane.height, "f32", description);
}

void write_plane(const std::string& path, const PlaneU8& plane, const std::string& description) {
    write_raw(path, plane.data);
    write_sidecar(path, plane.width, plane.height, "u8", description);
}

PlaneF32 read_plane_f32(const std::string& path) {
    const json j = read_sidecar(path, "f32");
    PlaneF32 p(j.at("width").get<int>(), j.at("height").get<int>());
    p.data = read_raw<float>(path, p.size());
    return p;
}

PlaneU8 read_plane_u8(const std::string& path) {
    const json j = read_sidecar(path, "u8");
    PlaneU8 p(j.at("width").get<int>(), j.at("height").get<int>());
    p.data = read_raw<std::uint8_t>(path, p.size());
    return p;
}

StackManifest StackManifest::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read manifest: " + path);
    json j = json::parse(in);
    StackManifest m;
    m.width = j.at("width").get<int>();
    m.height = j.at("height").get<int>();
    m.pixel_area_ha = j.value("pixel_area_ha", 0.09);
    if (m.width <= 0 || m.height <= 0) throw std::runtime_error("manifest: bad raster shape");
    for (const auto& d : j.at("dates")) {
        ManifestDate md;
        md.year = d.at("year").get<int>();
        md.step = d.at("step").get<int>();
        md.red = d.at("red").get<std::string>();
        md.nir = d.at("nir").get<std::string>();
        md.swir2 = d.at("swir2").get<std::string>();
        if (md.step < 1 || md.step > kCadence) {
            throw std::runtime_error("manifest: step outside 1..23");
        }
        if (!m.dates.empty()) {
            const auto& prev = m.dates.back();
            if (md.year < prev.year || (md.year == prev.year && md.step <= prev.step)) {
                throw std::runtime_error("manifest: dates must be strictly increasing on (year, step)");
            }
        }
        m.dates.push_back(std::move(md));
    }
    if (m.dates.empty()) throw std::runtime_error("manifest: no dates");
    return m;
}

void StackManifest::save(const std::string& path) const {
    json j;
    j["width"] = width;
    j["height"] = height;
    j["pixel_area_ha"] = pixel_area_ha;
    j["tool_version"] = kVersion;
    j["dates"] = json::array();
    for (const auto& d : dates) {
        j["dates"].push_back({{"year", d.year},
                              {"step", d.step},
                              {"red", d.red},
                              {"nir", d.nir},
                              {"swir2", d.swir2}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write manifest: " + path);
    out << j.dump(2) << "\n";
}

int StackManifest::start_year() const { return dates.front().year; }

int StackManifest::year_count() const { return dates.back().year - dates.front().year + 1; }

int StackManifest::slot_count() const { return kCadence * year_count(); }

int StackManifest::slot_of(int year, int step) const {
    return (year - start_year()) * kCadence + (step - 1);
}

PlaneF32 normalized_difference(const PlaneF32& a, const PlaneF32& b) {
    if (!a.same_shape(b.width, b.height)) {
        throw std::invalid_argument("normalized_difference: shape mismatch");
    }
    PlaneF32 out(a.width, a.height);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const float x = a.data[i];
        const float y = b.data[i];
        const float den = x + y;
        if (std::isnan(x) || std::isnan(y) || std::abs(den) < 1e-9f) {
            out.data[i] = std::nanf("");
        } else {
            out.data[i] = (x - y) / den;
        }
    }
    return out;
}

PlaneF32 compute_ndvi(const PlaneF32& red, const PlaneF32& nir) {
    return normalized_difference(nir, red);
}

PlaneF32 compute_nbr(const PlaneF32& nir, const PlaneF32& swir2) {
    return normalized_difference(nir, swir2);
}

IndexStack build_index_stack(const StackManifest& manifest, const std::string& manifest_dir,
                             IndexKind kind) {
    IndexStack stack;
    stack.width = manifest.width;
    stack.height = manifest.height;
    stack.n_dates = manifest.slot_count();
    stack.start_year = manifest.start_year();
    stack.values.assign(static_cast<std::size_t>(stack.n_dates) * stack.width * stack.height,
                        std::nanf(""));

    const std::filesystem::path base(manifest_dir);
    auto resolve = [&](const std::string& rel) {
        std::filesystem::path p(rel);
        return p.is_absolute() ? p.string() : (base / p).string();
    };

    for (const auto& d : manifest.dates) {
        PlaneF32 index;
        if (kind == IndexKind::Ndvi) {
            const PlaneF32 red = read_plane_f32(resolve(d.red));
            const PlaneF32 nir = read_plane_f32(resolve(d.nir));
            if (!red.same_shape(manifest.width, manifest.height) ||
                !nir.same_shape(manifest.width, manifest.height)) {
                throw std::runtime_error("band shape mismatch at " + d.red);
            }
            index = compute_ndvi(red, nir);
        } else {
            const PlaneF32 nir = read_plane_f32(resolve(d.nir));
            const PlaneF32 swir2 = read_plane_f32(resolve(d.swir2));
            if (!nir.same_shape(manifest.width, manifest.height) ||
                !swir2.same_shape(manifest.width, manifest.height)) {
                throw std::runtime_error("band shape mismatch at " + d.nir);
            }
            index = compute_nbr(nir, swir2);
        }
        const int slot = manifest.slot_of(d.year, d.step);
        std::copy(index.data.begin(), index.data.end(),
                  stack.values.begin() + static_cast<std::size_t>(slot) * index.size());
    }
    return stack;
}

SampledSeries extract_series(const IndexStack& stack, int row, int col) {
    if (row < 0 || row >= stack.height || col < 0 || col >= stack.width) {
        throw std::out_of_range("extract_series: pixel outside the raster");
    }
    SampledSeries s;
    s.start_year = stack.start_year;
    s.values.resize(stack.n_dates);
    s.mask.resize(stack.n_dates);
    for (int d = 0; d < stack.n_dates; ++d) {
        const float v = stack.at(d, row, col);
        const bool ok = !std::isnan(v);
        s.values[d] = ok ? static_cast<double>(v) : 0.0;
        s.mask[d] = ok ? 1 : 0;
    }
    return s;
}

}  // namespace burnscan
