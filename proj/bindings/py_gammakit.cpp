#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <variant>

#include "gammakit/analysis.hpp"
#include "gammakit/bernoulli.hpp"
#include "gammakit/coeff_io.hpp"

namespace py = pybind11;
using namespace gammakit;

namespace {

SchemeSpec make_scheme(const std::string& method, const std::optional<std::vector<double>>& nodes,
                       int range_end, PrecisionContext ctx) {
    SchemeSpec scheme;
    scheme.method = method_from_name(method);
    scheme.svd_range_end = range_end;
    if (nodes) {
        std::vector<BigReal> pts;
        pts.reserve(nodes->size());
        for (double v : *nodes) pts.push_back(BigReal::from_double(v, ctx));
        scheme.custom_nodes = NodeSet(std::move(pts), NodeSet::Generator::custom);
    }
    return scheme;
}

PoleExpansion py_make_expansion(const std::string& method, int n, std::optional<double> r,
                                const std::optional<std::string>& r_str,
                                std::optional<double> zbar, bool inf,
                                const std::optional<std::vector<double>>& nodes, int range_end,
                                int digits) {
    PrecisionContext ctx{digits};
    ReferenceOracle oracle(30, 30, ctx);
    SchemeSpec scheme = make_scheme(method, nodes, range_end, ctx);
    if (scheme.method == Method::stirling) return stirling_pole_expansion(ctx);

    int given = static_cast<int>(r.has_value()) + static_cast<int>(r_str.has_value()) +
                static_cast<int>(zbar.has_value()) + static_cast<int>(inf);
    if (given != 1)
        throw argument_error("give exactly one of r, r_str, zbar, inf=True");
    if (r) return build_expansion(scheme, n, BigReal::from_double(*r, ctx), oracle, ctx);
    if (r_str) return build_expansion(scheme, n, BigReal::from_string(*r_str, ctx), oracle, ctx);
    RTarget target = inf ? RTarget::infinity() : RTarget::finite(BigReal::from_double(*zbar, ctx));
    return build_expansion_for_target(scheme, n, target, oracle, ctx);
}

py::object outcome_to_py(EvalOutcome out) {
    if (auto* v = std::get_if<std::complex<double>>(&out)) return py::cast(*v);
    py::dict d;
    if (auto* p = std::get_if<PoleHit>(&out)) {
        d["kind"] = "pole";
        d["index"] = p->index;
        d["residue"] = p->residue;
    } else {
        auto& o = std::get<Overflow>(out);
        d["kind"] = "out_of_range";
        d["log_gamma"] = o.log_gamma;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_gammakit, m) {
    m.doc() = "Pole-expansion approximations of the gamma function";

    // translators run newest-first: register bases before derived types so a
    // pole_error surfaces as PoleError, not as its DomainError base
    py::register_exception<argument_error>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<pole_error>(m, "PoleError");
    py::register_exception<no_root_error>(m, "NoRootError");
    py::register_exception<conditioning_error>(m, "ConditioningError");

    py::class_<PoleExpansion>(m, "PoleExpansion")
        .def_property_readonly("n", [](const PoleExpansion& e) { return e.n_poles; })
        .def_property_readonly("r", [](const PoleExpansion& e) { return e.r.to_double(); })
        .def_property_readonly("r_str", [](const PoleExpansion& e) { return e.r.str(36); })
        .def_property_readonly("c_inf", [](const PoleExpansion& e) { return e.c_inf.to_double(); })
        .def_property_readonly("c",
                               [](const PoleExpansion& e) {
                                   std::vector<double> out;
                                   out.reserve(e.c.size());
                                   for (const auto& cn : e.c) out.push_back(cn.to_double());
                                   return out;
                               })
        .def_property_readonly("method",
                               [](const PoleExpansion& e) { return method_name(e.method); })
        .def_property_readonly("r_target",
                               [](const PoleExpansion& e) -> std::string {
                                   if (!e.r_target) return "explicit";
                                   if (e.r_target->is_infinity()) return "inf";
                                   return "zbar " + e.r_target->zbar().str(17);
                               })
        .def("record", [](const PoleExpansion& e) { return coefficients_record(e); })
        .def_static("from_record",
                    [](const std::string& text) { return parse_coefficients_string(text); })
        .def("__repr__", [](const PoleExpansion& e) {
            return "<PoleExpansion " + method_name(e.method) + " N=" + std::to_string(e.n_poles) +
                   " r=" + e.r.str(10) + ">";
        });

    m.def("make_expansion", &py_make_expansion, py::arg("method"), py::arg("n") = 8,
          py::arg("r") = py::none(), py::arg("r_str") = py::none(), py::arg("zbar") = py::none(),
          py::arg("inf") = false, py::arg("nodes") = py::none(), py::arg("range_end") = 170,
          py::arg("digits") = 50,
          "Build a pole expansion: explicit r, a finite calibration point zbar, or inf=True");

    m.def(
        "solve_r",
        [](const std::string& method, int n, std::optional<double> zbar, bool inf, int digits) {
            PrecisionContext ctx{digits};
            ReferenceOracle oracle(30, 30, ctx);
            SchemeSpec scheme = make_scheme(method, std::nullopt, 170, ctx);
            if (inf == zbar.has_value())
                throw argument_error("give exactly one of zbar, inf=True");
            BigReal r = inf ? solve_r_infinity(scheme, n, oracle, ctx)
                            : solve_r_finite(scheme, n, BigReal::from_double(*zbar, ctx), oracle, ctx);
            return r.to_double();
        },
        py::arg("method"), py::arg("n"), py::arg("zbar") = py::none(), py::arg("inf") = false,
        py::arg("digits") = 50);

    py::class_<GammaApproximation>(m, "GammaApproximation")
        .def_static("from_expansion", &GammaApproximation::from_expansion)
        .def_property_readonly("r", [](const GammaApproximation& g) { return g.r; })
        .def_property_readonly("c_inf", [](const GammaApproximation& g) { return g.c_inf; })
        .def_property_readonly("c", [](const GammaApproximation& g) { return g.c; })
        .def("eval",
             [](const GammaApproximation& g, std::complex<double> z) {
                 return outcome_to_py(evaluate(g, z));
             },
             py::arg("z"),
             "Returns the complex value, or a dict describing a pole / out-of-range outcome")
        .def("eval_log",
             [](const GammaApproximation& g, std::complex<double> z) { return evaluate_log(g, z); },
             py::arg("z"));

    m.def(
        "eval_extended",
        [](const PoleExpansion& e, std::complex<double> z, int digits) {
            PrecisionContext ctx{digits};
            return evaluate_extended(e, BigComplex::from_doubles(z, ctx), ctx).to_std();
        },
        py::arg("expansion"), py::arg("z"), py::arg("digits") = 50);

    m.def(
        "reference_log_gamma",
        [](std::complex<double> z, int digits, int shift, int terms) {
            PrecisionContext ctx{digits};
            ReferenceOracle oracle(shift, terms, ctx);
            return oracle.log_gamma(BigComplex::from_doubles(z, ctx)).to_std();
        },
        py::arg("z"), py::arg("digits") = 50, py::arg("shift") = 30, py::arg("terms") = 30);

    m.def(
        "reference_gamma",
        [](std::complex<double> z, int digits, int shift, int terms) {
            PrecisionContext ctx{digits};
            ReferenceOracle oracle(shift, terms, ctx);
            return oracle.gamma(BigComplex::from_doubles(z, ctx)).to_std();
        },
        py::arg("z"), py::arg("digits") = 50, py::arg("shift") = 30, py::arg("terms") = 30);

    m.def(
        "relative_error",
        [](const PoleExpansion& e, std::complex<double> z, int digits) {
            PrecisionContext ctx{digits};
            ReferenceOracle oracle(30, 30, ctx);
            return relative_error(e, BigComplex::from_doubles(z, ctx), oracle, ctx).to_double();
        },
        py::arg("expansion"), py::arg("z"), py::arg("digits") = 40);

    m.def(
        "sweep",
        [](const PoleExpansion& e, const std::string& axis, double lo, double hi, int count,
           bool log_spacing, int digits) {
            PrecisionContext actx{digits};
            ReferenceOracle oracle(30, 30, PrecisionContext{std::max(digits, 30)});
            SweepAxis ax;
            if (axis == "real")
                ax = SweepAxis::real_line;
            else if (axis == "critical")
                ax = SweepAxis::critical_line;
            else
                throw argument_error("axis must be 'real' or 'critical'");
            SweepResult res = sweep(e, ax, lo, hi, count, log_spacing, oracle, actx);
            std::vector<std::pair<double, double>> out;
            out.reserve(res.samples.size());
            for (const auto& s : res.samples) out.emplace_back(s.coord, s.rel_err);
            return out;
        },
        py::arg("expansion"), py::arg("axis"), py::arg("lo"), py::arg("hi"), py::arg("count"),
        py::arg("log_spacing") = true, py::arg("digits") = 40);

    m.def("asymptotic_params",
          [](const PoleExpansion& e) {
              AsymptoticParams ap = asymptotic_params(e);
              py::dict d;
              d["plateau"] = ap.plateau.to_double();
              d["alpha"] = ap.alpha.to_double();
              d["decay"] = ap.decay.to_double();
              return d;
          },
          py::arg("expansion"),
          "plateau = 1 - c_inf/sqrt(2 pi); decay is the 1/z error coefficient");

    m.def(
        "bernoulli",
        [](int two_k, int digits) { return bernoulli(two_k, PrecisionContext{digits}).to_double(); },
        py::arg("two_k"), py::arg("digits") = 50);

    m.def(
        "stirling_series_coeffs",
        [](int count, int digits) {
            std::vector<double> out;
            for (const auto& a : stirling_series_coeffs(count, PrecisionContext{digits}))
                out.push_back(a.to_double());
            return out;
        },
        py::arg("count"), py::arg("digits") = 50);
}
