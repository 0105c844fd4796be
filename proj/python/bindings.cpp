#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "landenkit/cli.hpp"
#include "landenkit/errors.hpp"
#include "landenkit/landen.hpp"
#include "landenkit/regions.hpp"
#include "landenkit/report.hpp"
#include "landenkit/specialfn.hpp"
#include "landenkit/verify.hpp"

namespace py = pybind11;
using namespace landenkit;

namespace {

specialfn::EvalConfig make_cfg(double tail_tol, std::size_t max_terms) {
    specialfn::EvalConfig cfg;
    cfg.tail_tol = tail_tol;
    cfg.max_terms = max_terms;
    cfg.validate();
    return cfg;
}

verify::SweepOptions make_opts(double margin_tol, bool override_region) {
    verify::SweepOptions opts;
    opts.margin_tol = margin_tol;
    opts.override_region = override_region;
    return opts;
}

verify::Grid make_grid(double start, double end, double step) {
    verify::Grid g{start, end, step};
    g.validate();
    return g;
}

specialfn::EllipticMethod method_of(const std::string& name) {
    if (name == "agm") return specialfn::EllipticMethod::Agm;
    if (name == "series") return specialfn::EllipticMethod::Series;
    throw ParamError("method must be 'agm' or 'series'");
}

template <typename Dir>
Dir direction_of(const std::string& name, std::initializer_list<Dir> all) {
    for (Dir d : all) {
        if (verify::to_string(d) == name) return d;
    }
    throw ParamError("unsupported direction '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Landen identities and Landen-type inequalities for hypergeometric series";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParamError>(m, "ParamError", base.ptr());
    py::register_exception<SlowConvergence>(m, "SlowConvergence", base.ptr());
    py::register_exception<RegionMismatch>(m, "RegionMismatch", base.ptr());
    py::register_exception<CoefficientMismatch>(m, "CoefficientMismatch", base.ptr());

    py::class_<specialfn::Evaluation>(m, "Evaluation")
        .def_readonly("value", &specialfn::Evaluation::value)
        .def_readonly("terms_used", &specialfn::Evaluation::terms_used)
        .def_readonly("tail_bound", &specialfn::Evaluation::tail_bound)
        .def_readonly("converged", &specialfn::Evaluation::converged)
        .def("__repr__", [](const specialfn::Evaluation& e) {
            return "Evaluation(value=" + report::number(e.value) +
                   ", terms_used=" + std::to_string(e.terms_used) +
                   ", converged=" + (e.converged ? "True" : "False") + ")";
        });

    m.def("pochhammer", &specialfn::pochhammer, py::arg("a"), py::arg("n"));
    m.def(
        "gauss_2f1",
        [](double a, double b, double c, double x, double tail_tol, std::size_t max_terms) {
            return specialfn::gauss_2f1({a, b, c}, x, make_cfg(tail_tol, max_terms));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"), py::arg("tail_tol") = 1e-12,
        py::arg("max_terms") = 1'000'000);
    m.def(
        "elliptic_k",
        [](double r, const std::string& method) { return specialfn::elliptic_k(r, method_of(method)); },
        py::arg("r"), py::arg("method") = "agm");
    m.def(
        "kummer_phi", [](double p, double q, double x) { return specialfn::kummer_phi({p, q}, x); },
        py::arg("p"), py::arg("q"), py::arg("x"));
    m.def(
        "bessel_u",
        [](double kappa, double c_sign, double x) {
            return specialfn::bessel_u(specialfn::BesselParams::from_kappa(kappa, c_sign), x);
        },
        py::arg("kappa"), py::arg("c_sign"), py::arg("x"));
    m.def(
        "closed_form",
        [](const std::string& form, double x) {
            return specialfn::closed_form(specialfn::closed_form_from_string(form), x);
        },
        py::arg("form"), py::arg("x"));

    py::class_<landen::IdentityResidual>(m, "IdentityResidual")
        .def_readonly("r", &landen::IdentityResidual::r)
        .def_readonly("lhs", &landen::IdentityResidual::lhs)
        .def_readonly("rhs", &landen::IdentityResidual::rhs)
        .def_readonly("rel_residual", &landen::IdentityResidual::rel_residual);

    m.def("phi_ascend", &landen::phi_ascend, py::arg("r"));
    m.def("psi_descend", &landen::psi_descend, py::arg("r"));
    m.def(
        "check_identity_first",
        [](double r, const std::string& method) { return landen::check_identity_first(r, {}, method_of(method)); },
        py::arg("r"), py::arg("method") = "agm");
    m.def(
        "check_identity_second",
        [](double r, const std::string& method) { return landen::check_identity_second(r, {}, method_of(method)); },
        py::arg("r"), py::arg("method") = "agm");
    m.def(
        "check_transf", [](double a, double b, double r) { return landen::check_transf(a, b, r); },
        py::arg("a"), py::arg("b"), py::arg("r"));
    m.def(
        "check_transf_complement",
        [](double a, double b, double r) { return landen::check_transf_complement(a, b, r); }, py::arg("a"),
        py::arg("b"), py::arg("r"));

    auto to_dict = [](const regions::RegionVerdict& v) {
        py::dict d;
        d["branch"] = std::string(regions::to_string(v.branch));
        d["fired_condition"] = v.fired_condition;
        d["boundary"] = v.boundary;
        d["note"] = v.note;
        return d;
    };
    m.def(
        "classify_thm21",
        [to_dict](double a, double b, double c) { return to_dict(regions::classify_thm21({a, b, c})); },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "classify_thm24",
        [to_dict](double a, double b, double c) { return to_dict(regions::classify_thm24({a, b, c})); },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "classify_kummer", [to_dict](double p, double q) { return to_dict(regions::classify_kummer({p, q})); },
        py::arg("p"), py::arg("q"));
    m.def(
        "classify_bessel",
        [to_dict](double kappa, double c_sign) {
            return to_dict(regions::classify_bessel(specialfn::BesselParams::from_kappa(kappa, c_sign)));
        },
        py::arg("kappa"), py::arg("c_sign"));

    m.def("delta_n", [](double a, double b, double c, std::size_t n) { return regions::delta_n({a, b, c}, n); },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"));
    m.def("omega_seq", &regions::omega_seq, py::arg("n"));
    m.def(
        "seq_probe",
        [](const std::string& which, double a, double b, double c, std::size_t n_max) {
            const auto p = regions::seq_probe(regions::seq_id_from_string(which), {a, b, c}, n_max);
            py::dict d;
            d["classification"] = std::string(regions::to_string(p.classification));
            d["first_violation"] = p.first_violation ? py::cast(*p.first_violation) : py::none();
            return d;
        },
        py::arg("which"), py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("c") = 1.0, py::arg("n_max") = 200);

    py::class_<verify::InequalityRecord>(m, "InequalityRecord")
        .def_readonly("r", &verify::InequalityRecord::r)
        .def_readonly("lhs", &verify::InequalityRecord::lhs)
        .def_readonly("rhs", &verify::InequalityRecord::rhs)
        .def_readonly("margin", &verify::InequalityRecord::margin)
        .def_property_readonly("verdict",
                               [](const verify::InequalityRecord& r) { return std::string(verify::to_string(r.verdict)); });

    py::class_<verify::SweepReport>(m, "SweepReport")
        .def_readonly("theorem_id", &verify::SweepReport::theorem_id)
        .def_readonly("records", &verify::SweepReport::records)
        .def_readonly("min_margin", &verify::SweepReport::min_margin)
        .def_readonly("n_violations", &verify::SweepReport::n_violations)
        .def_property_readonly("params",
                               [](const verify::SweepReport& r) {
                                   py::dict d;
                                   for (const auto& p : r.params) d[py::str(p.name)] = p.value;
                                   return d;
                               })
        .def("to_csv", &report::to_csv)
        .def("to_json", &report::to_json);

    m.def(
        "sweep_thm21",
        [](double a, double b, double c, const std::string& direction, double start, double end, double step,
           double margin_tol, bool override_region) {
            using D = verify::Thm21Direction;
            const auto dir = direction_of(direction, {D::Ineq1, D::Ineq2, D::Ineq3, D::Ineq4});
            return verify::sweep_thm21({a, b, c}, dir, make_grid(start, end, step),
                                       make_opts(margin_tol, override_region));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("direction"), py::arg("start") = 0.01,
        py::arg("end") = 0.97, py::arg("step") = 0.01, py::arg("margin_tol") = 1e-10,
        py::arg("override_region") = false);
    m.def(
        "sweep_thm24",
        [](double a, double b, double c, const std::string& direction, double start, double end, double step,
           double margin_tol, bool override_region) {
            using D = verify::Thm24Direction;
            const auto dir = direction_of(direction, {D::Ineq6, D::Ineq7});
            return verify::sweep_thm24({a, b, c}, dir, make_grid(start, end, step),
                                       make_opts(margin_tol, override_region));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("direction"), py::arg("start") = 0.01,
        py::arg("end") = 0.97, py::arg("step") = 0.01, py::arg("margin_tol") = 1e-10,
        py::arg("override_region") = false);
    m.def(
        "sweep_kummer",
        [](double p, double q, bool override_region) {
            return verify::sweep_thm23(specialfn::KummerParams{p, q}, {}, make_opts(1e-10, override_region));
        },
        py::arg("p"), py::arg("q"), py::arg("override_region") = false);
    m.def(
        "sweep_bessel",
        [](double kappa, double c_sign, bool override_region) {
            return verify::sweep_thm23(specialfn::BesselParams::from_kappa(kappa, c_sign), {},
                                       make_opts(1e-10, override_region));
        },
        py::arg("kappa"), py::arg("c_sign"), py::arg("override_region") = false);
    m.def(
        "sweep_ineq9", [](double a, double b) { return verify::sweep_ineq9(a, b); }, py::arg("a"), py::arg("b"));
    m.def("elementary_checks", []() {
        const auto reps = verify::elementary_checks();
        return std::vector<verify::SweepReport>(reps.begin(), reps.end());
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
