#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tridom/generators.hpp"
#include "tridom/io.hpp"
#include "tridom/oracle.hpp"
#include "tridom/pipeline.hpp"

namespace py = pybind11;
using namespace tridom;

PYBIND11_MODULE(tridom, m) {
    m.doc() = "independent dominating sets of size <= n/3 in planar triangulations";

    py::register_exception<Error>(m, "TridomError");

    py::class_<Triangulation>(m, "Triangulation")
        .def_static("from_rotations", &Triangulation::from_rotations, py::arg("rotations"),
                    py::arg("simple") = true)
        .def_property_readonly("n", &Triangulation::vertex_count)
        .def_property_readonly("m", &Triangulation::edge_count)
        .def_property_readonly("f", &Triangulation::face_count)
        .def_property_readonly("simple", &Triangulation::simple)
        .def("degree", &Triangulation::degree)
        .def("rotation", &Triangulation::rotation)
        .def("neighbors", &Triangulation::neighbors)
        .def("adjacent", &Triangulation::adjacent)
        .def("vertices", &Triangulation::active_vertices)
        .def("faces", &Triangulation::faces)
        .def("validate", &Triangulation::validate, py::arg("require_triangles") = true)
        .def("__repr__", [](const Triangulation& g) {
            return "<Triangulation n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<IdomCertificate>(m, "Certificate")
        .def_readonly("D", &IdomCertificate::D)
        .def_readonly("bound", &IdomCertificate::bound)
        .def_readonly("trace", &IdomCertificate::trace)
        .def_readonly("path", &IdomCertificate::path);

    m.def("named", &named, py::arg("name"));
    m.def("stacked", &stacked, py::arg("n"), py::arg("seed") = 0);
    m.def("flipmix", &flipmix, py::arg("n"), py::arg("seed") = 0, py::arg("flips") = 0);
    m.def("gadget_family", [](const Triangulation& g) { return gadget_family(g); });

    m.def(
        "solve",
        [](const Triangulation& g, uint64_t seed) {
            SolveOptions opts;
            opts.coloring.seed = seed;
            return solve(g, opts);
        },
        py::arg("graph"), py::arg("seed") = 0);
    m.def(
        "verify",
        [](const Triangulation& g, const std::vector<int>& D) {
            VerifyResult r = verify(g, D);
            return py::make_tuple(r.ok(), r.independent, r.dominating, r.within_bound);
        },
        py::arg("graph"), py::arg("D"));

    m.def("iota", [](const Triangulation& g) { return iota_exact(g).value; });
    m.def("gamma", [](const Triangulation& g) { return gamma_exact(g).value; });
    m.def("alpha", [](const Triangulation& g) { return alpha_exact(g).value; });

    m.def("to_rotation_text", &write_rotation_text);
    m.def("from_rotation_text", &read_rotation_text);
    m.def("digest", &graph_digest);
}
