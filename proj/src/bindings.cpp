#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbgreen/directivity.hpp"
#include "pbgreen/errors.hpp"
#include "pbgreen/grid.hpp"
#include "pbgreen/kernels.hpp"
#include "pbgreen/pulsed_beam.hpp"
#include "pbgreen/verify.hpp"

namespace py = pybind11;
using namespace pbgreen;

namespace {

Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
std::array<double, 3> from_vec3(const Vec3& v) { return {v.x, v.y, v.z}; }

}  // namespace

PYBIND11_MODULE(_pbgreen, m) {
    m.doc() = "pulsed-beam holomorphic Green function toolkit";

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<singularity_error>(m, "SingularityError");

    py::class_<SpacetimeDirection>(m, "SpacetimeDirection")
        .def(py::init([](std::array<double, 3> y, double s) {
                 return SpacetimeDirection{to_vec3(y), s};
             }),
             py::arg("y"), py::arg("s"))
        .def_property_readonly("y", [](const SpacetimeDirection& d) { return from_vec3(d.y); })
        .def_readonly("s", &SpacetimeDirection::s)
        .def_property_readonly("radius", &SpacetimeDirection::radius);

    py::class_<RealSpacetimePoint>(m, "RealSpacetimePoint")
        .def(py::init([](std::array<double, 3> x, double t) {
                 return RealSpacetimePoint{to_vec3(x), t};
             }),
             py::arg("x"), py::arg("t"))
        .def_property_readonly("x", [](const RealSpacetimePoint& p) { return from_vec3(p.x); })
        .def_readonly("t", &RealSpacetimePoint::t);

    py::class_<EmitterDish>(m, "EmitterDish")
        .def(py::init<const RealSpacetimePoint&, const SpacetimeDirection&>(),
             py::arg("center"), py::arg("extension"))
        .def_readonly("center", &EmitterDish::center)
        .def_readonly("extension", &EmitterDish::extension);

    py::class_<ReceiverDish>(m, "ReceiverDish")
        .def(py::init<const RealSpacetimePoint&, const SpacetimeDirection&>(),
             py::arg("center"), py::arg("extension"))
        .def_readonly("center", &ReceiverDish::center)
        .def_readonly("extension", &ReceiverDish::extension);

    py::class_<BeamGeometry>(m, "BeamGeometry")
        .def(py::init([](double r, double t, double a, double s, double theta) {
                 return BeamGeometry{r, t, a, s, theta};
             }),
             py::arg("r"), py::arg("t"), py::arg("a"), py::arg("s"),
             py::arg("theta") = 0.0)
        .def_readonly("r", &BeamGeometry::r)
        .def_readonly("t", &BeamGeometry::t)
        .def_readonly("a", &BeamGeometry::a)
        .def_readonly("s", &BeamGeometry::s)
        .def_readonly("theta", &BeamGeometry::theta);

    m.def("in_future_cone", &in_future_cone, py::arg("y"));
    m.def(
        "complex_distance",
        [](std::array<double, 3> x, std::array<double, 3> y) {
            return complex_distance(to_vec3(x), to_vec3(y));
        },
        py::arg("x"), py::arg("y"));
    m.def("cauchy_kernel", &cauchy_kernel, py::arg("tau"));
    m.def(
        "extended_coulomb",
        [](std::array<double, 3> x, std::array<double, 3> y) {
            return extended_coulomb(CVec3(to_vec3(x), -to_vec3(y)));
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "holomorphic_green",
        [](std::array<double, 3> x, double t, std::array<double, 3> y, double s) {
            return holomorphic_green(ComplexSpacetimePoint(
                {to_vec3(x), t}, {to_vec3(y), s}, TubeSign::minus));
        },
        py::arg("x"), py::arg("t"), py::arg("y"), py::arg("s"));
    m.def(
        "source_flux",
        [](const SpacetimeDirection& y, double R, int n) {
            const FluxResult f = source_flux(y, R, n);
            return py::make_tuple(f.value, f.refinement_disagreement, f.converged);
        },
        py::arg("y"), py::arg("R"), py::arg("n_quadrature") = 24);

    m.def("emitted_field", &emitted_field, py::arg("emitter"), py::arg("x"));
    m.def("duration", &duration, py::arg("theta"), py::arg("a"), py::arg("s"));
    m.def("far_zone_field", &far_zone_field, py::arg("geometry"));
    m.def("coupling", &coupling, py::arg("emitter"), py::arg("receiver"));
    m.def("combined_geometry", &combined_geometry, py::arg("emitter"), py::arg("receiver"));
    m.def("peak_coupling", &peak_coupling, py::arg("r"), py::arg("a"), py::arg("s"));
    m.def(
        "optimal_alignment",
        [](std::array<double, 3> xe, std::array<double, 3> xr, double ae, double ar,
           double se, double sr) {
            const Alignment al = optimal_alignment(to_vec3(xe), to_vec3(xr), ae, ar, se, sr);
            return py::make_tuple(al.emitter, al.receiver, al.t);
        },
        py::arg("x_e"), py::arg("x_r"), py::arg("a_e"), py::arg("a_r"),
        py::arg("s_e"), py::arg("s_r"));

    m.def("directivity", &directivity, py::arg("y"));
    m.def("convexity_gap", &convexity_gap, py::arg("y1"), py::arg("y2"));

    m.def(
        "sample_scenario",
        [](const std::string& json_text) {
            const ScenarioConfig cfg = parse_scenario(json_text);
            const FieldGrid grid = sample_grid(cfg);
            return py::make_tuple(grid.values, grid.mask);
        },
        py::arg("json_text"),
        "Evaluate a JSON scenario; returns (values, mask) in storage order.");

    m.def(
        "run_verify",
        [](std::uint64_t seed, const std::string& suite) {
            py::list out;
            for (const auto& r : verify::run_suites(seed, suite))
                out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("seed") = 42, py::arg("suite") = "");
}
