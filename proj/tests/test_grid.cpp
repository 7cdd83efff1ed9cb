#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <sstream>

#include "pbgreen/errors.hpp"
#include "pbgreen/grid.hpp"

using namespace pbgreen;

namespace {

constexpr double kPi = std::numbers::pi;

ScenarioConfig basic_config() {
    ScenarioConfig cfg;
    cfg.kind = FieldKind::green;
    cfg.emitter = EmitterDish({{0, 0, 0}, 0.0}, {{0, 0, 0.5}, 1.0});
    cfg.grid.origin = {0.0, 0.0, 2.0, 2.0};
    cfg.grid.counts = {1, 1, 1, 1};
    return cfg;
}

}  // namespace

TEST_CASE("single-point grid reproduces the kernel worked value") {
    const FieldGrid g = sample_grid(basic_config());
    REQUIRE(g.values.size() == 1);
    CHECK(g.mask[0] == 0);
    const Complex expected = Complex(4.0, 1.0) / (34.0 * kPi * kPi);
    CHECK(std::abs(g.values[0] - expected) < 1e-15);
}

TEST_CASE("axis time profile peaks at t = r") {
    ScenarioConfig cfg;
    cfg.kind = FieldKind::emitted;
    cfg.emitter = EmitterDish({{0, 0, 0}, 0.0}, {{0, 0, 0.5}, 1.0});
    cfg.grid.origin = {0.0, 0.0, 8.0, 5.0};
    cfg.grid.spacing = {1.0, 1.0, 1.0, 0.05};
    cfg.grid.counts = {1, 1, 1, 121};
    cfg.grid.slice = SliceMode::axis_profile_1d;
    const FieldGrid g = sample_grid(cfg);
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.values.size(); ++i)
        if (std::abs(g.values[i]) > std::abs(g.values[best])) best = i;
    const double t_peak = 5.0 + 0.05 * double(best);
    CHECK(std::abs(t_peak - 8.0) <= 0.05 + 1e-12);
}

TEST_CASE("grids away from singular sets have an empty mask") {
    ScenarioConfig cfg = basic_config();
    cfg.kind = FieldKind::emitted;
    cfg.grid.origin = {1.0, 1.0, 3.0, 2.0};
    cfg.grid.spacing = {0.3, 0.3, 0.3, 0.2};
    cfg.grid.counts = {4, 4, 4, 4};
    const FieldGrid g = sample_grid(cfg);
    for (auto m : g.mask) CHECK(m == 0);
}

TEST_CASE("binary round trip is bit-exact") {
    ScenarioConfig cfg = basic_config();
    cfg.kind = FieldKind::emitted;
    cfg.grid.origin = {-0.7, 0.3, 2.0, 1.0};
    cfg.grid.spacing = {0.21, 0.43, 0.37, 0.11};
    cfg.grid.counts = {3, 2, 4, 5};
    const FieldGrid g = sample_grid(cfg);
    std::ostringstream out;
    write_binary(g, out);
    std::istringstream in(out.str());
    const FieldGrid back = read_binary(in);
    CHECK(back == g);
}

TEST_CASE("csv round trip preserves values to full precision") {
    ScenarioConfig cfg = basic_config();
    cfg.kind = FieldKind::emitted;
    cfg.grid.counts = {2, 2, 2, 3};
    cfg.grid.origin = {0.5, 0.5, 2.5, 1.3};
    cfg.grid.spacing = {0.4, 0.4, 0.4, 0.7};
    const FieldGrid g = sample_grid(cfg);
    std::ostringstream out;
    write_csv(g, out);
    std::istringstream in(out.str());
    const FieldGrid back = read_csv(in);
    REQUIRE(back.values.size() == g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        CHECK(back.values[i] == g.values[i]);  // 17 digits round-trips f64
        CHECK(back.mask[i] == g.mask[i]);
    }
}

TEST_CASE("one-point grid emits exactly one csv data row") {
    const FieldGrid g = sample_grid(basic_config());
    std::ostringstream out;
    write_csv(g, out);
    int rows = 0;
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);  // header + one data row
}

TEST_CASE("scenario validation") {
    ScenarioConfig cfg = basic_config();
    cfg.kind = FieldKind::coupling;  // receiver missing
    CHECK_THROWS_AS(cfg.validate(), domain_error);

    ScenarioConfig big = basic_config();
    big.grid.counts = {1000, 1000, 1000, 1000};
    CHECK_THROWS_AS(big.validate(), domain_error);  // budget exceeded
}

TEST_CASE("json scenario parsing") {
    const std::string text = R"({
      "kind": "coupling",
      "emitter": {"center": {"x": [0,0,0], "t": 0.0},
                   "extension": {"y": [0,0,0.5], "s": 1.0}},
      "receiver": {"center": {"x": [0,0,10], "t": 10.0},
                    "extension": {"y": [0,0,0.5], "s": 1.0}},
      "grid": {"origin": [0,0,10,10], "spacing": [1,1,1,0.1],
               "counts": [1,1,1,5], "slice": "axis_profile_1d"},
      "output": {"path": "", "format": "bin"}
    })";
    const ScenarioConfig cfg = parse_scenario(text);
    CHECK(cfg.kind == FieldKind::coupling);
    CHECK(cfg.receiver.has_value());
    CHECK(cfg.format == OutputFormat::raw_binary);
    CHECK(cfg.grid.counts[3] == 5);
    const FieldGrid g = sample_grid(cfg);
    CHECK(g.values.size() == 5);

    CHECK_THROWS_AS(parse_scenario("{not json"), domain_error);
    CHECK_THROWS_AS(parse_scenario(R"({"kind": "green"})"), domain_error);
    // cone-violating dish rejected at parse time
    CHECK_THROWS_AS(parse_scenario(R"({
      "kind": "green",
      "emitter": {"center": {"x": [0,0,0], "t": 0},
                   "extension": {"y": [0,0,2], "s": 1.0}},
      "grid": {"origin": [0,0,0,0], "spacing": [1,1,1,1], "counts": [1,1,1,1]}
    })"),
                    domain_error);
}

TEST_CASE("repeated sampling is deterministic") {
    ScenarioConfig cfg = basic_config();
    cfg.kind = FieldKind::far_zone;
    cfg.grid.origin = {0.0, 0.0, 50.0, 49.0};
    cfg.grid.spacing = {1.0, 1.0, 1.0, 0.1};
    cfg.grid.counts = {1, 1, 1, 21};
    const FieldGrid g1 = sample_grid(cfg);
    const FieldGrid g2 = sample_grid(cfg);
    CHECK(g1 == g2);
}
