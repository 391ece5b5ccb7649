// pybind11 bindings for the main operations. Rationals cross the boundary as
// eulerbt.Rat objects (exact); polynomials and series keep their canonical
// text forms for printing.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "eulerbt/accel.hpp"
#include "eulerbt/identities.hpp"
#include "eulerbt/legendre.hpp"
#include "eulerbt/mpoly.hpp"
#include "eulerbt/rat.hpp"
#include "eulerbt/series.hpp"
#include "eulerbt/transforms.hpp"

namespace py = pybind11;
using namespace eulerbt;

namespace {

Rat rat_from_object(const py::object& o) {
    if (py::isinstance<Rat>(o)) return o.cast<Rat>();
    if (py::isinstance<py::int_>(o)) return Rat::parse(py::str(o).cast<std::string>());
    if (py::isinstance<py::str>(o)) return Rat::parse(o.cast<std::string>());
    throw py::type_error("expected Rat, int, or a rational string");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact binomial transforms, series transformations and identity checks";

    py::class_<Rat>(m, "Rat")
        .def(py::init([](const py::object& o) { return rat_from_object(o); }), py::arg("value"))
        .def(py::init([](long long num, long long den) { return Rat(BigInt(num), BigInt(den)); }),
             py::arg("num"), py::arg("den"))
        .def_static("parse", [](const std::string& s) { return Rat::parse(s); }, py::arg("text"))
        .def_property_readonly("num", [](const Rat& r) { return r.num().str(); })
        .def_property_readonly("den", [](const Rat& r) { return r.den().str(); })
        .def("is_zero", &Rat::is_zero)
        .def("is_integer", &Rat::is_integer)
        .def("decimal", &Rat::decimal, py::arg("digits"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__abs__", [](const Rat& r) { return abs(r); })
        .def("__pow__", [](const Rat& r, int e) { return pow(r, e); })
        .def("__str__", &Rat::str)
        .def("__repr__", [](const Rat& r) { return "Rat('" + r.str() + "')"; })
        .def("__hash__", [](const Rat& r) { return py::hash(py::str(r.str())); });

    py::enum_<VarId>(m, "VarId")
        .value("ALPHA", VarId::Alpha)
        .value("BETA", VarId::Beta)
        .value("Q", VarId::Q)
        .value("X", VarId::X)
        .value("Y", VarId::Y)
        .value("Z", VarId::Z);

    py::class_<MPoly>(m, "MPoly")
        .def(py::init<>())
        .def(py::init([](const py::object& o) { return MPoly(rat_from_object(o)); }),
             py::arg("constant"))
        .def_static("var", &MPoly::var, py::arg("v"))
        .def("is_zero", &MPoly::is_zero)
        .def("is_constant", &MPoly::is_constant)
        .def("total_degree", &MPoly::total_degree)
        .def("term_count", &MPoly::term_count)
        .def("uses", &MPoly::uses, py::arg("v"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("pow", &MPoly::pow, py::arg("exponent"))
        .def("__pow__", &MPoly::pow)
        .def("eval", &MPoly::eval, py::arg("assignment"))
        .def("substitute", &MPoly::substitute, py::arg("v"), py::arg("value"))
        .def("derivative", &MPoly::derivative, py::arg("v"))
        .def("__str__", &MPoly::str)
        .def("__repr__", [](const MPoly& p) { return "MPoly('" + p.str() + "')"; });

    py::implicitly_convertible<py::int_, Rat>();
    py::implicitly_convertible<py::str, Rat>();
    py::implicitly_convertible<py::int_, MPoly>();
    py::implicitly_convertible<Rat, MPoly>();

    m.def("gen_binomial", &gen_binomial, py::arg("p"), py::arg("k"));
    m.def(
        "rat_binomial",
        [](long long upper, int k) { return rat_binomial(BigInt(upper), k); },
        py::arg("upper"), py::arg("k"));

    py::class_<Series>(m, "Series")
        .def(py::init<std::vector<MPoly>>(), py::arg("coeffs"))
        .def_static("constant", &Series::constant, py::arg("c"), py::arg("order"))
        .def_property_readonly("order", &Series::order)
        .def("__len__", [](const Series& s) { return s.coeffs().size(); })
        .def("__getitem__",
             [](const Series& s, int m) {
                 if (m < 0 || m > s.order()) throw py::index_error();
                 return s[m];
             })
        .def("coeffs", &Series::coeffs)
        .def("__str__", &series_text)
        .def("__repr__", [](const Series& s) {
            return "Series(order=" + std::to_string(s.order()) + ")";
        });

    py::class_<SeriesAgreement>(m, "SeriesAgreement")
        .def_readonly("equal", &SeriesAgreement::equal)
        .def_readonly("order_compared", &SeriesAgreement::order_compared)
        .def_readonly("first_mismatch", &SeriesAgreement::first_mismatch);

    m.def("agree", &agree, py::arg("a"), py::arg("b"));
    m.def("negbinom_series", &negbinom_series, py::arg("base"), py::arg("alpha"),
          py::arg("order"));
    m.def("binom_power_series", &binom_power_series, py::arg("z"), py::arg("exponent"),
          py::arg("order"));
    m.def("series_mul", &series_mul, py::arg("f"), py::arg("g"));
    m.def("substitute_mobius", &substitute_mobius, py::arg("f"), py::arg("x"), py::arg("order"));
    m.def("series_text", &series_text, py::arg("f"));

    m.def("binomial_transform", &binomial_transform, py::arg("a"));
    m.def("inverse_binomial_transform", &inverse_binomial_transform, py::arg("b"));
    m.def("euler_transform", &euler_transform, py::arg("f"));
    m.def("mul_binomial_power", &mul_binomial_power, py::arg("f"), py::arg("z"),
          py::arg("exponent"));
    m.def("generalized_euler_transform", &generalized_euler_transform, py::arg("f"), py::arg("x"),
          py::arg("exponent"));

    py::enum_<IdentityId>(m, "IdentityId")
        .value("SIMONS1", IdentityId::Simons1)
        .value("MUNARINI7", IdentityId::Munarini7)
        .value("MUNARINI10", IdentityId::Munarini10)
        .value("LJUNGGREN11", IdentityId::Ljunggren11)
        .value("COROLLARY13", IdentityId::Corollary13)
        .value("COROLLARY14", IdentityId::Corollary14)
        .value("LJUNGGREN15", IdentityId::Ljunggren15)
        .value("LJUNGGREN16", IdentityId::Ljunggren16)
        .value("CROSS17", IdentityId::Cross17)
        .value("MUNARINI30", IdentityId::Munarini30);

    m.def("all_identities",
          []() { return std::vector<IdentityId>(all_identities().begin(), all_identities().end()); });
    m.def("identity_name", [](IdentityId id) { return std::string(identity_name(id)); },
          py::arg("id"));
    m.def("identity_alias", [](IdentityId id) { return std::string(identity_alias(id)); },
          py::arg("id"));
    m.def("identity_from_string",
          [](const std::string& s) { return identity_from_string(s); }, py::arg("name"));
    m.def("identity_uses_q", &identity_uses_q, py::arg("id"));
    m.def("identity_sides", &identity_sides, py::arg("id"), py::arg("n"),
          py::arg("q") = py::none());

    py::class_<IdentityResult>(m, "IdentityResult")
        .def_readonly("n", &IdentityResult::n)
        .def_readonly("passed", &IdentityResult::pass)
        .def_readonly("q_warning", &IdentityResult::q_warning)
        .def_readonly("lhs", &IdentityResult::lhs)
        .def_readonly("rhs", &IdentityResult::rhs)
        .def_readonly("diff", &IdentityResult::diff);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("identity", &IdentityReport::identity)
        .def_readonly("n_min", &IdentityReport::n_min)
        .def_readonly("n_max", &IdentityReport::n_max)
        .def_readonly("results", &IdentityReport::results)
        .def_readonly("all_pass", &IdentityReport::all_pass);

    m.def("verify_identity", &verify_identity, py::arg("id"), py::arg("n_max"),
          py::arg("q") = py::none());
    m.def("ljunggren_oracle", &ljunggren_oracle, py::arg("n"), py::arg("q"));
    m.def("derive_simons_from_ljunggren", &derive_simons_from_ljunggren, py::arg("n"));
    m.def("verify_munarini10_chain", &verify_munarini10_chain, py::arg("order"));
    m.def("verify_munarini30_chain", &verify_munarini30_chain, py::arg("order"));

    m.def("legendre_rodrigues", &legendre_rodrigues, py::arg("n"));
    m.def("legendre_rep20", &legendre_rep20, py::arg("n"));
    m.def("legendre_rep21", &legendre_rep21, py::arg("n"));
    m.def("legendre_rep22", &legendre_rep22, py::arg("n"));
    m.def("legendre_reps_agree", &legendre_reps_agree, py::arg("n"));

    py::class_<AccelTable>(m, "AccelTable")
        .def_readonly("c", &AccelTable::c)
        .def_readonly("diffs", &AccelTable::diffs)
        .def_readonly("plain_partials", &AccelTable::plain_partials)
        .def_readonly("accel_partials", &AccelTable::accel_partials)
        .def_readonly("reference", &AccelTable::reference);

    m.def("forward_differences", &forward_differences, py::arg("c"), py::arg("m"));
    m.def("euler_accelerate", &euler_accelerate, py::arg("c"), py::arg("m"));
}
