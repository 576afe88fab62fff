#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "s3modes/bases.hpp"
#include "s3modes/error.hpp"
#include "s3modes/jacobi.hpp"
#include "s3modes/quotients.hpp"
#include "s3modes/rotation.hpp"
#include "s3modes/rotations.hpp"
#include "s3modes/serialize.hpp"
#include "s3modes/verify.hpp"

namespace py = pybind11;
using namespace s3modes;

namespace {

Quaternion quaternion_from(const std::array<double, 4>& c) { return {c[0], c[1], c[2], c[3]}; }
std::array<double, 4> quaternion_to(const Quaternion& q) { return {q[0], q[1], q[2], q[3]}; }
ToroidalPoint point(double chi, double theta, double phi) { return {chi, theta, phi}; }

}  // namespace

PYBIND11_MODULE(_s3modes, m) {
    m.doc() = "Laplacian eigenmodes on S^3";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<Rotation>(m, "Rotation")
        .def(py::init([](const std::array<double, 4>& l, const std::array<double, 4>& r) {
                 return Rotation::normalized(quaternion_from(l), quaternion_from(r));
             }),
             py::arg("q_left"), py::arg("q_right"))
        .def_static("identity", &Rotation::identity)
        .def_property_readonly("q_left", [](const Rotation& g) { return quaternion_to(g.left()); })
        .def_property_readonly("q_right", [](const Rotation& g) { return quaternion_to(g.right()); })
        .def("apply", [](const Rotation& g, const std::array<double, 4>& x) {
            return quaternion_to(g.apply(quaternion_from(x)));
        })
        .def("inverse", &Rotation::inverse)
        .def("matrix", &rotation_to_matrix)
        .def("same_element", &Rotation::same_element, py::arg("other"), py::arg("tol") = 1e-9);
    m.def("compose", &rotation_compose, "The rotation x -> g(h(x))", py::arg("g"), py::arg("h"));
    m.def("rotation_from_matrix", &rotation_from_matrix);

    m.def("jacobi_poly", &jacobi_poly, py::arg("d"), py::arg("a"), py::arg("b"), py::arg("x"));

    m.def(
        "eval_T",
        [](int k, double m1, double m2, double chi, double theta, double phi) {
            return eval_T(ModeB2::from_m(k, m1, m2), point(chi, theta, phi));
        },
        py::arg("k"), py::arg("m1"), py::arg("m2"), py::arg("chi"), py::arg("theta"), py::arg("phi"));
    m.def(
        "eval_Phi",
        [](int k, int I, int J, double chi, double theta, double phi) {
            return eval_Phi(ModeB3{k, I, J}, point(chi, theta, phi));
        },
        py::arg("k"), py::arg("I"), py::arg("J"), py::arg("chi"), py::arg("theta"), py::arg("phi"));
    m.def(
        "coeff_P", [](int k, double m1, double m2) { return coeff_P(ModeB2::from_m(k, m1, m2)); }, py::arg("k"),
        py::arg("m1"), py::arg("m2"));
    m.def(
        "normalization_constant",
        [](int k, double m1, double m2) { return normalization_constant(ModeB2::from_m(k, m1, m2)); },
        py::arg("k"), py::arg("m1"), py::arg("m2"));
    m.def(
        "b2_modes",
        [](int k) {
            std::vector<std::pair<double, double>> out;
            for (const auto& mode : b2_modes(k)) out.emplace_back(mode.m1(), mode.m2());
            return out;
        },
        "(m1, m2) pairs in flat-index order");

    m.def("t_from_phi_matrix", [](int k) { return t_from_phi_matrix(k).entries; });
    m.def("phi_from_t_matrix", [](int k) { return phi_from_t_matrix(k).entries; });

    m.def(
        "g_coeffs", [](const Rotation& g, int k) { return g_coeffs(g, k).matrix; },
        "Row-convention matrix: R_g Phi_IJ = sum_ij G[IJ, ij] Phi_ij");
    m.def("g_coeffs_oracle", [](const Rotation& g, int k) { return g_coeffs_oracle(g, k).matrix; });
    m.def(
        "rotation_b2",
        [](const Rotation& g, int k, bool plain) {
            if (k % 2 != 0) return b2_rotation_matrix(g, k);
            return to_B2_frame(g_coeffs(g, k), plain ? B2Scaling::Plain : B2Scaling::Scaled);
        },
        py::arg("g"), py::arg("k"), py::arg("plain") = true);

    m.def("lens_rotation", &lens_rotation);
    m.def("prism_generators", &prism_generators);
    m.def(
        "lens_modes",
        [](int p, int q, int k) {
            std::vector<std::pair<double, double>> out;
            for (const auto& mode : lens_modes(p, q, k)) out.emplace_back(mode.m1(), mode.m2());
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("k"));
    m.def("prism_modes", &prism_modes, py::arg("P"), py::arg("k"));
    m.def(
        "multiplicity",
        [](const std::string& space, int k) { return to_json(multiplicity(parse_group_spec(space), k)).dump(); },
        "JSON report for one level", py::arg("space"), py::arg("k"));
    m.def(
        "invariant_subspace",
        [](const std::string& space, int k) { return invariant_subspace(parse_group_spec(space), k).basis_t; },
        "Orthonormal invariant vectors in plain-T coordinates", py::arg("space"), py::arg("k"));
    m.def(
        "verify",
        [](int k, const std::string& suite) {
            const Tolerances tol;
            if (suite == "bases") return verify_bases(k, tol).to_json().dump();
            if (suite == "quad") return verify_quad(k, tol).to_json().dump();
            if (suite == "rotations") return verify_rotations(k, tol).to_json().dump();
            if (suite == "quotients") return verify_quotients(k, tol).to_json().dump();
            throw DomainError("unknown suite " + suite);
        },
        py::arg("k"), py::arg("suite"));
}
