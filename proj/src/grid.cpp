#include "pbgreen/grid.hpp"

#include <cmath>

#include "pbgreen/errors.hpp"
#include "pbgreen/kernels.hpp"

namespace pbgreen {

RealSpacetimePoint GridSpec::point(std::uint64_t i) const {
    const std::uint64_t it = i % counts[3];
    const std::uint64_t iz = (i / counts[3]) % counts[2];
    const std::uint64_t iy = (i / (counts[3] * counts[2])) % counts[1];
    const std::uint64_t ix = i / (counts[3] * counts[2] * counts[1]);
    return {{origin[0] + ix * spacing[0], origin[1] + iy * spacing[1],
             origin[2] + iz * spacing[2]},
            origin[3] + it * spacing[3]};
}

bool FieldGrid::operator==(const FieldGrid& o) const {
    return spec.origin == o.spec.origin && spec.spacing == o.spec.spacing &&
           spec.counts == o.spec.counts && spec.slice == o.spec.slice &&
           values == o.values && mask == o.mask;
}

void ScenarioConfig::validate() const {
    if ((kind == FieldKind::coupling) != receiver.has_value())
        throw domain_error("scenario: receiver must be present iff kind = coupling");
    for (int i = 0; i < 4; ++i) {
        if (!(grid.spacing[i] > 0.0))
            throw domain_error("scenario: grid spacing must be positive");
        if (grid.counts[i] < 1)
            throw domain_error("scenario: grid counts must be >= 1");
    }
    if (grid.total_points() > budget)
        throw domain_error("scenario: grid exceeds the sample budget");
    // dish invariants were enforced at construction
}

namespace {

Complex evaluate(const ScenarioConfig& cfg, const RealSpacetimePoint& p) {
    switch (cfg.kind) {
        case FieldKind::green:
            // untranslated kernel: the grid point taken relative to the origin
            return holomorphic_green({p, cfg.emitter.extension, TubeSign::minus});
        case FieldKind::emitted:
            return emitted_field(cfg.emitter, p);
        case FieldKind::coupling: {
            ReceiverDish r(p, cfg.receiver->extension);
            return coupling(cfg.emitter, r);
        }
        case FieldKind::far_zone: {
            const Vec3 dx = p.x - cfg.emitter.center.x;
            BeamGeometry g;
            g.r = dx.norm();
            g.t = p.t - cfg.emitter.center.t;
            g.a = cfg.emitter.extension.radius();
            g.s = cfg.emitter.extension.s;
            if (g.r > 0.0 && g.a > 0.0) {
                double c = dot(dx, cfg.emitter.extension.y) / (g.r * g.a);
                g.theta = std::acos(std::min(1.0, std::max(-1.0, c)));
            }
            if (g.r <= 0.0) throw singularity_error("far_zone: r = 0");
            return far_zone_field(g);
        }
    }
    throw domain_error("scenario: unknown field kind");
}

}  // namespace

FieldGrid sample_grid(const ScenarioConfig& cfg) {
    cfg.validate();
    const std::uint64_t n = cfg.grid.total_points();
    FieldGrid grid;
    grid.spec = cfg.grid;
    grid.values.assign(n, Complex{});
    grid.mask.assign(n, 0);
    grid.metadata = "kind=" + to_string(cfg.kind);
    for (std::uint64_t i = 0; i < n; ++i) {
        const RealSpacetimePoint p = cfg.grid.point(i);
        try {
            grid.values[i] = evaluate(cfg, p);
        } catch (const singularity_error&) {
            grid.mask[i] = 1;
        } catch (const domain_error&) {
            grid.mask[i] = 1;
        }
    }
    return grid;
}

std::string to_string(FieldKind k) {
    switch (k) {
        case FieldKind::green: return "green";
        case FieldKind::emitted: return "emitted";
        case FieldKind::coupling: return "coupling";
        case FieldKind::far_zone: return "far_zone";
    }
    return "?";
}

std::string to_string(SliceMode m) {
    switch (m) {
        case SliceMode::full4d: return "full4d";
        case SliceMode::fixed_time_3d: return "fixed_time_3d";
        case SliceMode::axis_profile_1d: return "axis_profile_1d";
    }
    return "?";
}

}  // namespace pbgreen
