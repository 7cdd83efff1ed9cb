// pbgreen: pulsed-beam holomorphic Green function toolkit, command line front end.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbgreen/directivity.hpp"
#include "pbgreen/errors.hpp"
#include "pbgreen/grid.hpp"
#include "pbgreen/kernels.hpp"
#include "pbgreen/pulsed_beam.hpp"
#include "pbgreen/verify.hpp"

namespace {

using namespace pbgreen;

Vec3 parse_vec3(const std::string& s) {
    Vec3 v;
    char c1, c2;
    std::istringstream in(s);
    in >> v.x >> c1 >> v.y >> c2 >> v.z;
    if (!in || c1 != ',' || c2 != ',')
        throw domain_error("expected a comma-separated 3-vector, got '" + s + "'");
    return v;
}

// "yx,yy,yz,s" -> SpacetimeDirection
SpacetimeDirection parse_direction(const std::string& s) {
    double v[4];
    char c[3];
    std::istringstream in(s);
    in >> v[0] >> c[0] >> v[1] >> c[1] >> v[2] >> c[2] >> v[3];
    if (!in || c[0] != ',' || c[1] != ',' || c[2] != ',')
        throw domain_error("expected 'yx,yy,yz,s', got '" + s + "'");
    return {{v[0], v[1], v[2]}, v[3]};
}

void print_complex(const Complex& v) {
    std::printf("%.17g %+.17gi\n", v.real(), v.imag());
}

struct GlobalOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 42;
    std::uint64_t budget = 100'000'000;
};

ScenarioConfig scenario_from(const GlobalOpts& g) {
    if (g.config_path.empty())
        throw domain_error("this subcommand requires --config <scenario.json>");
    ScenarioConfig cfg = load_scenario(g.config_path);
    cfg.budget = std::min(cfg.budget, g.budget);
    if (!g.out_path.empty()) cfg.output_path = g.out_path;
    cfg.format = (g.format == "bin") ? OutputFormat::raw_binary : OutputFormat::csv;
    return cfg;
}

void emit_grid(const ScenarioConfig& cfg) {
    const FieldGrid grid = sample_grid(cfg);
    if (cfg.output_path.empty()) {
        write_csv(grid, std::cout);
    } else {
        write_output(grid, cfg.format, cfg.output_path);
        std::cout << grid.spec.total_points() << " points -> " << cfg.output_path
                  << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pulsed-beam holomorphic Green function toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON scenario file");
    app.add_option("--out", g.out_path, "output path");
    app.add_option("--format", g.format, "output format: csv|bin")
        ->check(CLI::IsMember({"csv", "bin"}));
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--budget", g.budget, "grid sample budget");

    // distance
    auto* cmd_dist = app.add_subcommand("distance", "complex distance rtilde(x - iy)");
    std::string dist_x = "0,0,0", dist_y = "0,0,0";
    cmd_dist->add_option("--x", dist_x, "spatial point 'x,y,z'")->required();
    cmd_dist->add_option("--y", dist_y, "imaginary part 'x,y,z'");

    // green
    auto* cmd_green = app.add_subcommand("green", "single-point holomorphic Green function");
    std::string gr_x = "0,0,0", gr_y = "0,0,0";
    double gr_t = 0.0, gr_s = 0.0;
    cmd_green->add_option("--x", gr_x)->required();
    cmd_green->add_option("--t", gr_t)->required();
    cmd_green->add_option("--y", gr_y)->required();
    cmd_green->add_option("--s", gr_s)->required();

    // beam
    auto* cmd_beam = app.add_subcommand("beam", "sample the emitted field per --config");

    // coupling
    auto* cmd_cpl = app.add_subcommand("coupling", "dish-to-dish coupling");
    bool cpl_peak = false, cpl_align = false;
    double cpl_r = 0.0, cpl_a = 0.0, cpl_s = 0.0;
    std::string cpl_xe = "0,0,0", cpl_xr = "0,0,0";
    double cpl_ae = 0.0, cpl_ar = 0.0, cpl_se = 0.0, cpl_sr = 0.0;
    cmd_cpl->add_flag("--peak", cpl_peak, "print the peak far-zone coupling");
    cmd_cpl->add_flag("--align", cpl_align, "print the optimal alignment");
    cmd_cpl->add_option("--r", cpl_r, "center distance");
    cmd_cpl->add_option("--a", cpl_a, "combined radius a = a_e + a_r");
    cmd_cpl->add_option("--s", cpl_s, "combined duration s = s_e + s_r");
    cmd_cpl->add_option("--xe", cpl_xe, "emitter center 'x,y,z'");
    cmd_cpl->add_option("--xr", cpl_xr, "receiver center 'x,y,z'");
    cmd_cpl->add_option("--ae", cpl_ae, "emitter radius");
    cmd_cpl->add_option("--ar", cpl_ar, "receiver radius");
    cmd_cpl->add_option("--se", cpl_se, "emitter duration");
    cmd_cpl->add_option("--sr", cpl_sr, "receiver duration");

    // directivity
    auto* cmd_dir = app.add_subcommand("directivity", "directivity D(y) = a/(s-a)");
    double dir_a = -1.0, dir_s = 0.0;
    std::vector<std::string> dir_gap;
    cmd_dir->add_option("--a", dir_a, "dish radius");
    cmd_dir->add_option("--s", dir_s, "duration parameter");
    cmd_dir->add_option("--gap", dir_gap, "two directions 'yx,yy,yz,s' for the convexity gap")
        ->expected(2);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites");
    std::string verify_suite;
    cmd_verify->add_option("--suite", verify_suite, "run only the named suite");

    // profile
    auto* cmd_prof = app.add_subcommand("profile", "1-D time profile at fixed x (CSV to stdout)");
    std::string prof_x = "0,0,10", prof_y = "0,0,0.5";
    double prof_s = 1.0, prof_t0 = 0.0, prof_t1 = 20.0;
    std::uint64_t prof_nt = 201;
    cmd_prof->add_option("--x", prof_x, "observer position 'x,y,z'");
    cmd_prof->add_option("--y", prof_y, "emitter extension 'x,y,z'");
    cmd_prof->add_option("--s", prof_s, "emitter duration");
    cmd_prof->add_option("--t0", prof_t0, "start time");
    cmd_prof->add_option("--t1", prof_t1, "end time");
    cmd_prof->add_option("--nt", prof_nt, "number of samples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_dist->parsed()) {
            print_complex(complex_distance(parse_vec3(dist_x), parse_vec3(dist_y)));
        } else if (cmd_green->parsed()) {
            const ComplexSpacetimePoint z({parse_vec3(gr_x), gr_t},
                                          {parse_vec3(gr_y), gr_s}, TubeSign::minus);
            print_complex(holomorphic_green(z));
        } else if (cmd_beam->parsed()) {
            emit_grid(scenario_from(g));
        } else if (cmd_cpl->parsed()) {
            if (cpl_peak) {
                std::printf("%.5e\n", peak_coupling(cpl_r, cpl_a, cpl_s));
            } else if (cpl_align) {
                const Alignment al = optimal_alignment(parse_vec3(cpl_xe),
                                                       parse_vec3(cpl_xr), cpl_ae,
                                                       cpl_ar, cpl_se, cpl_sr);
                std::printf("y_e %.17g,%.17g,%.17g,%.17g\n", al.emitter.y.x,
                            al.emitter.y.y, al.emitter.y.z, al.emitter.s);
                std::printf("y_r %.17g,%.17g,%.17g,%.17g\n", al.receiver.y.x,
                            al.receiver.y.y, al.receiver.y.z, al.receiver.s);
                std::printf("t %.17g\n", al.t);
            } else if (!g.config_path.empty()) {
                emit_grid(scenario_from(g));
            } else {
                const EmitterDish e({parse_vec3(cpl_xe), 0.0},
                                    optimal_alignment(parse_vec3(cpl_xe),
                                                      parse_vec3(cpl_xr), cpl_ae,
                                                      cpl_ar, cpl_se, cpl_sr)
                                        .emitter);
                // single-point coupling of the aligned, synchronized pair
                const Alignment al = optimal_alignment(parse_vec3(cpl_xe),
                                                       parse_vec3(cpl_xr), cpl_ae,
                                                       cpl_ar, cpl_se, cpl_sr);
                const ReceiverDish rd({parse_vec3(cpl_xr), al.t}, al.receiver);
                print_complex(coupling(e, rd));
            }
        } else if (cmd_dir->parsed()) {
            if (dir_gap.size() == 2) {
                std::printf("%.17g\n", convexity_gap(parse_direction(dir_gap[0]),
                                                     parse_direction(dir_gap[1])));
            } else {
                if (dir_a < 0.0) throw domain_error("directivity: --a and --s required");
                std::printf("%.17g\n", directivity({{dir_a, 0.0, 0.0}, dir_s}));
            }
        } else if (cmd_verify->parsed()) {
            const auto results = verify::run_suites(g.seed, verify_suite);
            if (results.empty()) {
                std::cerr << "no suite matches '" << verify_suite << "'\n";
                return 1;
            }
            bool all_ok = true;
            for (const auto& r : results) {
                std::printf("%-24s %s  %s\n", r.name.c_str(),
                            r.passed ? "PASS" : "FAIL", r.detail.c_str());
                all_ok = all_ok && r.passed;
            }
            return all_ok ? 0 : 2;
        } else if (cmd_prof->parsed()) {
            const EmitterDish e({{0, 0, 0}, 0.0}, {parse_vec3(prof_y), prof_s});
            const Vec3 x = parse_vec3(prof_x);
            const double dt = prof_nt > 1 ? (prof_t1 - prof_t0) / double(prof_nt - 1) : 0.0;
            std::printf("t,re,im,abs\n");
            for (std::uint64_t i = 0; i < prof_nt; ++i) {
                const double t = prof_t0 + double(i) * dt;
                try {
                    const Complex v = emitted_field(e, {x, t});
                    std::printf("%.17g,%.17g,%.17g,%.17g\n", t, v.real(), v.imag(),
                                std::abs(v));
                } catch (const singularity_error&) {
                    std::printf("%.17g,nan,nan,nan\n", t);
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
