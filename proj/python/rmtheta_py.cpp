#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <tuple>

#include "rmtheta/json_io.hpp"
#include "rmtheta/local_zeta.hpp"
#include "rmtheta/version.hpp"

namespace py = pybind11;
using namespace rmtheta;

namespace {

ExtensionKind kind_from_name(const std::string& name) {
    if (name == "base") return ExtensionKind::base;
    if (name == "unram2") return ExtensionKind::unram2;
    if (name == "ram2") return ExtensionKind::ram2;
    throw SchemaError("kind must be base, unram2 or ram2");
}

}  // namespace

PYBIND11_MODULE(_rmtheta, m) {
    m.doc() = "local factors, adapted lattices and theta coefficients";

    py::register_exception<SchemaError>(m, "SchemaError");
    py::register_exception<Error>(m, "MathError");

    py::class_<LocalFieldDesc>(m, "LocalField")
        .def(py::init([](i64 p, const std::string& kind, int precision, i64 d) {
                 return make_field(p, kind_from_name(kind), precision, d);
             }),
             py::arg("p"), py::arg("kind") = "base", py::arg("precision") = 16,
             py::arg("d") = 0)
        .def_readonly("p", &LocalFieldDesc::p)
        .def_readonly("precision", &LocalFieldDesc::precision)
        .def("ramification_index", &LocalFieldDesc::ramification_index)
        .def("residue_degree", &LocalFieldDesc::residue_degree)
        .def("residue_cardinality", &LocalFieldDesc::residue_cardinality);

    py::class_<LocalFieldElement>(m, "Element")
        .def_static("make", &LocalFieldElement::make, py::arg("field"), py::arg("val"),
                    py::arg("a"), py::arg("b") = 0)
        .def_static("from_integer", &LocalFieldElement::from_integer)
        .def_static("from_rational", &LocalFieldElement::from_rational)
        .def_static("zero", &LocalFieldElement::zero)
        .def_static("one", &LocalFieldElement::one)
        .def_static("uniformizer", &LocalFieldElement::uniformizer)
        .def("valuation", &LocalFieldElement::valuation)
        .def("is_zero", &LocalFieldElement::is_zero)
        .def("inverse", &LocalFieldElement::inverse)
        .def("equals", &LocalFieldElement::equals)
        .def("__add__", [](const LocalFieldElement& a, const LocalFieldElement& b) { return a + b; })
        .def("__sub__", [](const LocalFieldElement& a, const LocalFieldElement& b) { return a - b; })
        .def("__mul__", [](const LocalFieldElement& a, const LocalFieldElement& b) { return a * b; })
        .def("__neg__", [](const LocalFieldElement& a) { return -a; });

    py::class_<UnitComplex>(m, "UnitComplex")
        .def_static("one", &UnitComplex::one)
        .def_static("root_of_unity", &UnitComplex::root_of_unity)
        .def("to_complex", &UnitComplex::to_complex)
        .def("is_one", &UnitComplex::is_one)
        .def("__mul__", [](const UnitComplex& a, const UnitComplex& b) { return a * b; })
        .def("__eq__", [](const UnitComplex& a, const UnitComplex& b) { return a == b; });

    py::class_<MultiplicativeCharacter>(m, "Character")
        .def_static("unramified", &MultiplicativeCharacter::unramified, py::arg("field"),
                    py::arg("pi_value") = UnitComplex::one())
        .def_static("from_unit_exponents", &MultiplicativeCharacter::from_unit_exponents,
                    py::arg("field"), py::arg("level"), py::arg("exponents"),
                    py::arg("pi_value") = UnitComplex::one())
        .def_static("quadratic_residue", &MultiplicativeCharacter::quadratic_residue,
                    py::arg("field"), py::arg("pi_value") = UnitComplex::one())
        .def("conductor", &MultiplicativeCharacter::conductor)
        .def("eval", &MultiplicativeCharacter::eval)
        .def("eval_integer", &MultiplicativeCharacter::eval_integer)
        .def("value_at_minus_one", &MultiplicativeCharacter::value_at_minus_one)
        .def("conjugate", &MultiplicativeCharacter::conjugate);

    py::class_<AdditiveCharacter>(m, "AdditiveCharacter")
        .def_static("standard", &AdditiveCharacter::standard, py::arg("field"),
                    py::arg("level") = 0)
        .def("eval", &AdditiveCharacter::eval)
        .def("eval_fraction", &AdditiveCharacter::eval_fraction);

    m.def("gauss_sum", &gauss_sum);

    py::class_<AdaptedLattice>(m, "AdaptedLattice")
        .def(py::init<const LocalFieldDesc&, std::vector<i64>>())
        .def("char_fn", &AdaptedLattice::char_fn)
        .def("contains", &AdaptedLattice::contains)
        .def_property_readonly("shape", &AdaptedLattice::shape);

    m.def("invariance_subgroup_check",
          [](const AdaptedLattice& L, const std::vector<std::vector<LocalFieldElement>>& g) {
              if (g.size() != 2 || g[0].size() != 2 || g[1].size() != 2)
                  throw SchemaError("matrix must be 2x2");
              return invariance_subgroup_check(L, make_mat2(g[0][0], g[0][1], g[1][0], g[1][1]));
          });

    py::class_<GlobalLattice>(m, "GlobalLattice")
        .def(py::init<std::vector<std::vector<i64>>>())
        .def_static("standard", &GlobalLattice::standard)
        .def_static("congruence", &GlobalLattice::congruence)
        .def_property_readonly("rank", &GlobalLattice::rank)
        .def_property_readonly("gram", &GlobalLattice::gram);

    py::enum_<ZetaNormalization>(m, "ZetaNormalization")
        .value("shifted", ZetaNormalization::shifted)
        .value("unshifted", ZetaNormalization::unshifted);

    py::class_<ZetaSeriesResult>(m, "ZetaSeriesResult")
        .def_readonly("partial_sum", &ZetaSeriesResult::partial_sum)
        .def_readonly("tail_bound", &ZetaSeriesResult::tail_bound)
        .def_readonly("closed_form", &ZetaSeriesResult::closed_form);

    m.def("ramified_zeta_series", &ramified_zeta_series, py::arg("chi"), py::arg("s"),
          py::arg("terms"), py::arg("normalization") = ZetaNormalization::shifted);

    py::class_<LocalLFactor>(m, "LocalLFactor")
        .def_readonly("q", &LocalLFactor::q)
        .def_readonly("inverse_roots", &LocalLFactor::inverse_roots)
        .def("eval", &LocalLFactor::eval);

    m.def("ramified_lfactor", &ramified_lfactor);
    m.def("ramified_epsilon", &ramified_epsilon);

    py::class_<SatakeParams>(m, "SatakeParams")
        .def_static("make", &SatakeParams::make, py::arg("q"), py::arg("alpha"),
                    py::arg("beta"), py::arg("unitary") = false)
        .def_static("from_eigenvalue", &SatakeParams::from_eigenvalue)
        .def_readonly("alpha", &SatakeParams::alpha)
        .def_readonly("beta", &SatakeParams::beta);

    m.def("spherical_rs_lfactor", &spherical_rs_lfactor);

    py::enum_<HarmonicWeight>(m, "HarmonicWeight")
        .value("constant_one", HarmonicWeight::constant_one)
        .value("det_symmetric_square", HarmonicWeight::det_symmetric_square);

    m.def("eval_harmonic", &eval_harmonic);
    m.def("short_vectors", &short_vectors, py::arg("lattice"), py::arg("norm_bound"),
          py::arg("node_budget") = i64{20'000'000});
    m.def(
        "theta_coefficients",
        [](const GlobalLattice& L, HarmonicWeight P, i64 trace_bound, i64 node_budget) {
            ThetaCoefficientTable t = theta_coefficients(L, P, trace_bound, node_budget);
            std::map<std::tuple<i64, i64, i64>, i64> out;
            for (const auto& [T, v] : t.entries) out[{T.a, T.b, T.c}] = v;
            return out;
        },
        py::arg("lattice"), py::arg("weight"), py::arg("trace_bound"),
        py::arg("node_budget") = i64{20'000'000});

    py::class_<HyperellipticCurve>(m, "Curve")
        .def_static("make", &HyperellipticCurve::make, py::arg("f_coeffs"),
                    py::arg("rm_disc") = std::nullopt, py::arg("label") = std::string{})
        .def_readonly("f_coeffs", &HyperellipticCurve::f_coeffs)
        .def_readonly("label", &HyperellipticCurve::label)
        .def("good_reduction", &HyperellipticCurve::good_reduction);

    m.def("count_points", &count_points);

    py::class_<EulerFactor>(m, "EulerFactor")
        .def_readonly("p", &EulerFactor::p)
        .def("coeffs", &EulerFactor::coeffs)
        .def("__eq__", [](const EulerFactor& a, const EulerFactor& b) { return a == b; });

    m.def("euler_factor", &euler_factor);
    m.def("weil_root_defect", &weil_root_defect);

    m.def("match_curve_to_hecke_json",
          [](const HyperellipticCurve& C, const std::string& hecke_json, i64 lo, i64 hi) {
              HeckeDataset data = hecke_from_json(json::parse(hecke_json));
              return match_report_to_json(match(C, data, lo, hi)).dump();
          });
    m.def("dataset_from_curve_json",
          [](const HyperellipticCurve& C, i64 disc, i64 lo, i64 hi) {
              return hecke_to_json(dataset_from_curve(C, disc, lo, hi)).dump();
          });

    m.attr("__version__") = kVersion;
}
