#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "contactlab/cli.hpp"
#include "contactlab/contactcurve.hpp"
#include "contactlab/contactlines.hpp"
#include "contactlab/errors.hpp"
#include "contactlab/invariants.hpp"
#include "contactlab/poly_io.hpp"

namespace py = pybind11;
using namespace contactlab;

namespace {

HomogPoly curve_from(const std::string& text) { return make_homog(parse_poly(text)); }

AntisymMatrix4 matrix_from(const std::string& text) {
    std::istringstream in(text);
    std::array<Rat, 6> u;
    std::string tok;
    for (int i = 0; i < 6; ++i) {
        if (!(in >> tok)) throw InputError("matrix needs 6 rationals");
        u[static_cast<std::size_t>(i)] = Rat::from_string(tok);
    }
    return AntisymMatrix4::from_upper(u);
}

ProjPoint point_from(const std::vector<std::string>& coords) {
    std::vector<Rat> c;
    c.reserve(coords.size());
    for (const std::string& s : coords) c.push_back(Rat::from_string(s));
    return ProjPoint(std::move(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact contact-curve toolkit core";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_RuntimeError);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli_main(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation in-process; returns (code, stdout, stderr).");

    m.def(
        "canonical_poly",
        [](const std::string& text) { return parse_poly(text).str(); }, py::arg("text"),
        "Parse a polynomial and return its canonical graded-lex form.");

    m.def(
        "dual_poly",
        [](const std::string& curve) {
            DualCurve d = dual_curve(curve_from(curve));
            return d.curve ? d.curve->str() : d.dual_point->str();
        },
        py::arg("curve"), "Dual curve polynomial, or the dual point for a line.");

    m.def(
        "contact_residual_zero",
        [](const std::string& curve) {
            return verify_contact_symbolic(curve_from(curve)).residual_zero();
        },
        py::arg("curve"), "Whether the Bryant-form pullback residual vanishes exactly.");

    m.def(
        "image_degree",
        [](const std::string& curve, std::uint64_t seed) {
            return image_degree(curve_from(curve), seed).d;
        },
        py::arg("curve"), py::arg("seed") = 0,
        "Independent Bezout-minus-multiplicities degree of the contact image.");

    m.def(
        "pfaffian",
        [](const std::string& matrix) { return pfaffian(matrix_from(matrix)).str(); },
        py::arg("matrix"), "Pfaffian of an antisymmetric matrix given as 6 upper entries.");

    m.def(
        "plucker",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
            PluckerPoint p = plucker_coords(make_line(point_from(a), point_from(b)));
            std::vector<std::string> out;
            for (const Rat& r : p.p) out.push_back(r.str());
            return out;
        },
        py::arg("a"), py::arg("b"),
        "Plucker coordinates (p01,p02,p03,p12,p13,p23) of the line through a and b.");

    m.def(
        "is_contact_line",
        [](const std::string& matrix, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
            ContactStructure phi = make_contact_structure(matrix_from(matrix));
            return is_contact_line(phi, make_line(point_from(a), point_from(b)));
        },
        py::arg("matrix"), py::arg("a"), py::arg("b"));

    m.def(
        "euler_identity",
        [](long chi_top, long chi_o, long c1_cubed) {
            return euler_identity_check({"", chi_top, chi_o, c1_cubed});
        },
        py::arg("chi_top"), py::arg("chi_o"), py::arg("c1_cubed"),
        "chi_top == 12 chi(O) - c1^3/8, exact.");
}
