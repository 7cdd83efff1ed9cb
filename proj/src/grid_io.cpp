#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pbgreen/errors.hpp"
#include "pbgreen/grid.hpp"

namespace pbgreen {

namespace {

constexpr char kMagic[16] = {'P', 'B', 'G', 'F', '0', '0', '0', '1',
                             0, 0, 0, 0, 0, 0, 0, 0};

template <typename T>
void put(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("binary grid: truncated stream");
    return v;
}

FieldKind kind_from_string(const std::string& s) {
    if (s == "green") return FieldKind::green;
    if (s == "emitted") return FieldKind::emitted;
    if (s == "coupling") return FieldKind::coupling;
    if (s == "far_zone") return FieldKind::far_zone;
    throw domain_error("scenario: unknown field kind '" + s + "'");
}

SliceMode slice_from_string(const std::string& s) {
    if (s == "full4d") return SliceMode::full4d;
    if (s == "fixed_time_3d") return SliceMode::fixed_time_3d;
    if (s == "axis_profile_1d") return SliceMode::axis_profile_1d;
    throw domain_error("scenario: unknown slice mode '" + s + "'");
}

Vec3 vec3_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3)
        throw domain_error("scenario: expected a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

SpacetimeDirection direction_from_json(const nlohmann::json& j) {
    return {vec3_from_json(j.at("y")), j.at("s").get<double>()};
}

RealSpacetimePoint point_from_json(const nlohmann::json& j) {
    return {vec3_from_json(j.at("x")), j.at("t").get<double>()};
}

}  // namespace

void write_csv(const FieldGrid& grid, std::ostream& out) {
    out << "x,y,z,t,re,im,mask\n";
    out << std::setprecision(17);
    const std::uint64_t n = grid.spec.total_points();
    for (std::uint64_t i = 0; i < n; ++i) {
        const RealSpacetimePoint p = grid.spec.point(i);
        out << p.x.x << ',' << p.x.y << ',' << p.x.z << ',' << p.t << ','
            << grid.values[i].real() << ',' << grid.values[i].imag() << ','
            << int(grid.mask[i]) << '\n';
    }
}

FieldGrid read_csv(std::istream& in) {
    FieldGrid grid;
    std::string line;
    if (!std::getline(in, line) || line != "x,y,z,t,re,im,mask")
        throw std::runtime_error("csv grid: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double f[6];
        int m;
        char comma;
        row >> f[0] >> comma >> f[1] >> comma >> f[2] >> comma >> f[3] >> comma
            >> f[4] >> comma >> f[5] >> comma >> m;
        if (!row) throw std::runtime_error("csv grid: malformed row");
        grid.values.emplace_back(f[4], f[5]);
        grid.mask.push_back(static_cast<std::uint8_t>(m));
    }
    // CSV carries no grid spec; represent as a flat t-profile
    grid.spec.counts = {1, 1, 1, grid.values.size()};
    return grid;
}

void write_binary(const FieldGrid& grid, std::ostream& out) {
    out.write(kMagic, sizeof(kMagic));
    for (double v : grid.spec.origin) put(out, v);
    for (double v : grid.spec.spacing) put(out, v);
    for (std::uint64_t v : grid.spec.counts) put(out, v);
    put(out, static_cast<std::uint8_t>(grid.spec.slice));
    for (const Complex& v : grid.values) {
        put(out, v.real());
        put(out, v.imag());
    }
    // mask as packed bits, padded to a byte boundary
    const std::uint64_t n = grid.mask.size();
    for (std::uint64_t i = 0; i < n; i += 8) {
        std::uint8_t byte = 0;
        for (int b = 0; b < 8 && i + b < n; ++b)
            if (grid.mask[i + b]) byte |= std::uint8_t(1u << b);
        put(out, byte);
    }
}

FieldGrid read_binary(std::istream& in) {
    char magic[16];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("binary grid: bad magic");
    FieldGrid grid;
    for (double& v : grid.spec.origin) v = get<double>(in);
    for (double& v : grid.spec.spacing) v = get<double>(in);
    for (std::uint64_t& v : grid.spec.counts) v = get<std::uint64_t>(in);
    grid.spec.slice = static_cast<SliceMode>(get<std::uint8_t>(in));
    const std::uint64_t n = grid.spec.total_points();
    grid.values.resize(n);
    for (Complex& v : grid.values) {
        const double re = get<double>(in);
        const double im = get<double>(in);
        v = Complex(re, im);
    }
    grid.mask.assign(n, 0);
    for (std::uint64_t i = 0; i < n; i += 8) {
        const std::uint8_t byte = get<std::uint8_t>(in);
        for (int b = 0; b < 8 && i + b < n; ++b)
            grid.mask[i + b] = (byte >> b) & 1u;
    }
    return grid;
}

void write_output(const FieldGrid& grid, OutputFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (format == OutputFormat::csv)
        write_csv(grid, out);
    else
        write_binary(grid, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

ScenarioConfig parse_scenario(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw domain_error(std::string("scenario: JSON parse error: ") + e.what());
    }
    ScenarioConfig cfg;
    try {
        cfg.kind = kind_from_string(j.at("kind").get<std::string>());
        const auto& je = j.at("emitter");
        cfg.emitter = EmitterDish(point_from_json(je.at("center")),
                                  direction_from_json(je.at("extension")));
        if (j.contains("receiver")) {
            const auto& jr = j.at("receiver");
            cfg.receiver = ReceiverDish(point_from_json(jr.at("center")),
                                        direction_from_json(jr.at("extension")));
        }
        const auto& jg = j.at("grid");
        for (int i = 0; i < 4; ++i) {
            cfg.grid.origin[i] = jg.at("origin")[i].get<double>();
            cfg.grid.spacing[i] = jg.at("spacing")[i].get<double>();
            cfg.grid.counts[i] = jg.at("counts")[i].get<std::uint64_t>();
        }
        cfg.grid.slice = slice_from_string(jg.value("slice", "full4d"));
        if (j.contains("output")) {
            cfg.output_path = j["output"].value("path", "");
            cfg.format = j["output"].value("format", "csv") == "bin"
                             ? OutputFormat::raw_binary
                             : OutputFormat::csv;
        }
        if (j.contains("budget")) cfg.budget = j["budget"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("scenario: bad config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace pbgreen
