#ifndef PBGREEN_GRID_HPP
#define PBGREEN_GRID_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbgreen/pulsed_beam.hpp"

namespace pbgreen {

enum class SliceMode : std::uint8_t { full4d = 0, fixed_time_3d = 1, axis_profile_1d = 2 };

// Rectilinear (x, y, z, t) sampling lattice.
struct GridSpec {
    std::array<double, 4> origin{};
    std::array<double, 4> spacing{1.0, 1.0, 1.0, 1.0};
    std::array<std::uint64_t, 4> counts{1, 1, 1, 1};
    SliceMode slice = SliceMode::full4d;

    std::uint64_t total_points() const {
        return counts[0] * counts[1] * counts[2] * counts[3];
    }
    // Coordinates of the flat index i (row-major x, y, z, t; t fastest).
    RealSpacetimePoint point(std::uint64_t i) const;
};

// Sampled complex field values in row-major (x, y, z, t) order with a
// per-point singularity mask.
struct FieldGrid {
    GridSpec spec;
    std::vector<Complex> values;
    std::vector<std::uint8_t> mask;  // 1 = point hit a singularity, value zeroed
    std::string metadata;

    bool operator==(const FieldGrid& o) const;
};

enum class FieldKind { green, emitted, coupling, far_zone };

enum class OutputFormat { csv, raw_binary };

struct ScenarioConfig {
    FieldKind kind = FieldKind::green;
    EmitterDish emitter;
    std::optional<ReceiverDish> receiver;  // present iff kind == coupling
    GridSpec grid;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t budget = 100'000'000;

    void validate() const;  // throws domain_error on inconsistency
};

// Deterministic pointwise evaluation; singular points are masked, not
// errored.  Throws when the grid exceeds the sample budget.
FieldGrid sample_grid(const ScenarioConfig& cfg);

// CSV: header x,y,z,t,re,im,mask; 17 significant digits; storage order.
void write_csv(const FieldGrid& grid, std::ostream& out);
// PBGF0001 binary, little-endian, bit-exact round trip.
void write_binary(const FieldGrid& grid, std::ostream& out);
FieldGrid read_binary(std::istream& in);
FieldGrid read_csv(std::istream& in);

void write_output(const FieldGrid& grid, OutputFormat format, const std::string& path);

// JSON scenario file mirroring ScenarioConfig field-for-field.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

std::string to_string(FieldKind k);
std::string to_string(SliceMode m);

}  // namespace pbgreen

#endif
