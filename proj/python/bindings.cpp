#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <sstream>
#include <variant>

#include "quintsect/catalog.hpp"
#include "quintsect/errors.hpp"
#include "quintsect/gamma.hpp"
#include "quintsect/hypergeom.hpp"
#include "quintsect/identities.hpp"
#include "quintsect/pochhammer.hpp"
#include "quintsect/roots.hpp"
#include "quintsect/series.hpp"

namespace py = pybind11;
using namespace quintsect;

namespace {

TheoremInstance make_instance(const std::string& theorem_id,
                              const std::variant<PFQSpec, FoxWrightSpec>& spec,
                              const Cplx& c, const Cplx& x) {
    TheoremInstance inst;
    inst.id = theorem_id_from_string(theorem_id);
    inst.spec = spec;
    inst.c = c;
    inst.x = x;
    return inst;
}

py::dict report_row_to_dict(const CaseReport& row) {
    py::dict d;
    d["case_id"] = row.case_id;
    d["printed_label"] = row.printed_label;
    d["param"] = row.parameterized ? py::object(py::float_(row.param)) : py::object(py::none());
    d["domain_radius"] = row.domain_radius;
    py::list points;
    for (const auto& p : row.points) {
        py::dict pd;
        pd["x"] = p.x;
        pd["lhs"] = p.lhs;
        pd["rhs"] = p.rhs;
        pd["residual"] = p.residual;
        pd["verdict"] = to_string(p.verdict);
        points.append(pd);
    }
    d["points"] = points;
    d["max_residual"] = row.max_residual;
    d["ratio"] = row.worst_ratio;
    d["status"] = to_string(row.status);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "pFq / Fox-Wright evaluation and fifth-root multisection identity checks";

    py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<UndefinedQuotientError>(m, "UndefinedQuotientError",
                                                   PyExc_ArithmeticError);
    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<ToleranceConfig>(m, "ToleranceConfig")
        .def(py::init([](double rel_tol, int consecutive_small, std::int64_t max_terms) {
                 ToleranceConfig t{rel_tol, consecutive_small, max_terms};
                 t.validate();
                 return t;
             }),
             py::arg("rel_tol") = 1e-14, py::arg("consecutive_small") = 3,
             py::arg("max_terms") = 10000)
        .def_readwrite("rel_tol", &ToleranceConfig::rel_tol)
        .def_readwrite("consecutive_small", &ToleranceConfig::consecutive_small)
        .def_readwrite("max_terms", &ToleranceConfig::max_terms);

    py::class_<SeriesEvaluation>(m, "SeriesEvaluation")
        .def_readonly("value", &SeriesEvaluation::value)
        .def_readonly("terms_used", &SeriesEvaluation::terms_used)
        .def_readonly("tail_estimate", &SeriesEvaluation::tail_estimate)
        .def_readonly("low_confidence", &SeriesEvaluation::low_confidence)
        .def_property_readonly("status",
                               [](const SeriesEvaluation& e) { return to_string(e.status); })
        .def("__repr__", [](const SeriesEvaluation& e) {
            std::ostringstream os;
            os << "SeriesEvaluation(value=(" << e.value.real() << "+" << e.value.imag()
               << "j), terms_used=" << e.terms_used << ", status=" << to_string(e.status)
               << ")";
            return os.str();
        });

    py::class_<ConvergenceDiagnostics>(m, "ConvergenceDiagnostics")
        .def_readonly("omega", &ConvergenceDiagnostics::omega)
        .def_readonly("delta_star", &ConvergenceDiagnostics::delta_star)
        .def_readonly("small_delta_star", &ConvergenceDiagnostics::small_delta_star)
        .def_readonly("mu_star", &ConvergenceDiagnostics::mu_star)
        .def_readonly("sigma_star", &ConvergenceDiagnostics::sigma_star)
        .def_property_readonly("classification", [](const ConvergenceDiagnostics& d) {
            return to_string(d.classification);
        });

    py::class_<PFQSpec>(m, "PFQSpec")
        .def(py::init<std::vector<Cplx>, std::vector<Cplx>>(), py::arg("numerator"),
             py::arg("denominator"))
        .def_readonly("numerator", &PFQSpec::numerator)
        .def_readonly("denominator", &PFQSpec::denominator);

    py::class_<FoxWrightSpec>(m, "FoxWrightSpec")
        .def(py::init([](const std::vector<std::pair<Cplx, double>>& num,
                         const std::vector<std::pair<Cplx, double>>& den) {
                 std::vector<FoxWrightParam> n;
                 std::vector<FoxWrightParam> d;
                 for (const auto& [a, w] : num) n.push_back({a, w});
                 for (const auto& [b, w] : den) d.push_back({b, w});
                 return FoxWrightSpec(n, d);
             }),
             py::arg("numerator"), py::arg("denominator"));

    py::class_<IdentityResidual>(m, "IdentityResidual")
        .def_readonly("lhs", &IdentityResidual::lhs)
        .def_readonly("rhs", &IdentityResidual::rhs)
        .def_readonly("residual", &IdentityResidual::residual)
        .def_property_readonly("lhs_status",
                               [](const IdentityResidual& r) { return to_string(r.lhs_status); })
        .def_property_readonly("rhs_status",
                               [](const IdentityResidual& r) { return to_string(r.rhs_status); })
        .def_property_readonly("verdict",
                               [](const IdentityResidual& r) { return to_string(r.verdict); })
        .def("__repr__", [](const IdentityResidual& r) {
            std::ostringstream os;
            os << "IdentityResidual(residual=" << r.residual
               << ", verdict=" << to_string(r.verdict) << ")";
            return os.str();
        });

    // numerics core
    m.def("log_gamma", &quintsect::log_gamma, py::arg("z"));
    m.def("gamma", &quintsect::gamma, py::arg("z"));
    m.def(
        "pochhammer",
        [](const Cplx& lam, const Cplx& nu) { return pochhammer(lam, nu); },
        py::arg("lam"), py::arg("nu"));
    m.def("fifth_root", &fifth_root, py::arg("power"));
    m.def("identity_one_sum", &identity_one_sum, py::arg("r"));
    m.def("identity_two_sum", &identity_two_sum, py::arg("r"));
    m.def(
        "gauss_multiplication_residual",
        [](const Cplx& b, int mm, int n) {
            return gauss_multiplication_residual({b, mm, n});
        },
        py::arg("b"), py::arg("m"), py::arg("n"));

    // series engine
    auto to_sequence = [](const std::function<Cplx(std::int64_t)>& phi, double bound) {
        return BoundedSequence{phi, bound};
    };
    m.def(
        "sum_power_series",
        [to_sequence](const std::function<Cplx(std::int64_t)>& phi, double bound, const Cplx& c,
                      const Cplx& x, const ToleranceConfig& tol) {
            return sum_power_series(to_sequence(phi, bound), {c, x}, tol);
        },
        py::arg("phi"), py::arg("bound"), py::arg("c"), py::arg("x"),
        py::arg("tol") = ToleranceConfig{});
    m.def(
        "theorem21_lhs",
        [to_sequence](const std::function<Cplx(std::int64_t)>& phi, double bound, const Cplx& c,
                      const Cplx& x, const ToleranceConfig& tol) {
            return theorem21_lhs(to_sequence(phi, bound), {c, x}, tol);
        },
        py::arg("phi"), py::arg("bound"), py::arg("c"), py::arg("x"),
        py::arg("tol") = ToleranceConfig{});
    m.def(
        "theorem21_rhs",
        [to_sequence](const std::function<Cplx(std::int64_t)>& phi, double bound, const Cplx& c,
                      const Cplx& x, const ToleranceConfig& tol) {
            return theorem21_rhs(to_sequence(phi, bound), {c, x}, tol);
        },
        py::arg("phi"), py::arg("bound"), py::arg("c"), py::arg("x"),
        py::arg("tol") = ToleranceConfig{});
    m.def(
        "theorem22_lhs",
        [to_sequence](const std::function<Cplx(std::int64_t)>& phi, double bound, const Cplx& c,
                      const Cplx& x, const ToleranceConfig& tol) {
            return theorem22_lhs(to_sequence(phi, bound), {c, x}, tol);
        },
        py::arg("phi"), py::arg("bound"), py::arg("c"), py::arg("x"),
        py::arg("tol") = ToleranceConfig{});
    m.def(
        "theorem22_rhs",
        [to_sequence](const std::function<Cplx(std::int64_t)>& phi, double bound, const Cplx& c,
                      const Cplx& x, const ToleranceConfig& tol) {
            return theorem22_rhs(to_sequence(phi, bound), {c, x}, tol);
        },
        py::arg("phi"), py::arg("bound"), py::arg("c"), py::arg("x"),
        py::arg("tol") = ToleranceConfig{});

    // hypergeom
    m.def("classify_pfq", &classify_pfq, py::arg("spec"), py::arg("z"));
    m.def("eval_pfq", &eval_pfq, py::arg("spec"), py::arg("z"),
          py::arg("tol") = ToleranceConfig{});
    m.def("classify_fox_wright", &classify_fox_wright, py::arg("spec"), py::arg("z"));
    m.def("eval_fox_wright", &eval_fox_wright, py::arg("spec"), py::arg("z"),
          py::arg("tol") = ToleranceConfig{});
    m.def("eval_fox_wright_normalized", &eval_fox_wright_normalized, py::arg("spec"),
          py::arg("z"), py::arg("tol") = ToleranceConfig{});

    // identity lab
    m.def(
        "theorem_lhs",
        [](const std::string& id, const std::variant<PFQSpec, FoxWrightSpec>& spec,
           const Cplx& c, const Cplx& x, const ToleranceConfig& tol) {
            return theorem_lhs(make_instance(id, spec, c, x), tol);
        },
        py::arg("theorem_id"), py::arg("spec"), py::arg("c"), py::arg("x"),
        py::arg("tol") = ToleranceConfig{});
    m.def(
        "theorem_rhs",
        [](const std::string& id, const std::variant<PFQSpec, FoxWrightSpec>& spec,
           const Cplx& c, const Cplx& x, const ToleranceConfig& tol) {
            return theorem_rhs(make_instance(id, spec, c, x), tol);
        },
        py::arg("theorem_id"), py::arg("spec"), py::arg("c"), py::arg("x"),
        py::arg("tol") = ToleranceConfig{});
    m.def(
        "check_identity",
        [](const std::string& id, const std::variant<PFQSpec, FoxWrightSpec>& spec,
           const Cplx& c, const Cplx& x, double identity_tol, const ToleranceConfig& tol) {
            return check_identity(make_instance(id, spec, c, x), tol, identity_tol);
        },
        py::arg("theorem_id"), py::arg("spec"), py::arg("c"), py::arg("x"),
        py::arg("identity_tol") = 1e-9, py::arg("tol") = ToleranceConfig{});

    // catalog
    m.def(
        "eval_oracle",
        [](const std::string& fn, const Cplx& x, double param) {
            return eval_oracle(special_function_from_string(fn), x, param);
        },
        py::arg("fn"), py::arg("x"), py::arg("param") = 1.0);
    m.def(
        "eval_by_representation",
        [](const std::string& fn, const Cplx& x, double param, const ToleranceConfig& tol) {
            return eval_by_representation(special_function_from_string(fn), x, tol, param);
        },
        py::arg("fn"), py::arg("x"), py::arg("param") = 1.0,
        py::arg("tol") = ToleranceConfig{});
    m.def("special_functions", [] {
        std::vector<std::string> out;
        for (SpecialFunctionId f : all_special_functions()) out.emplace_back(to_string(f));
        return out;
    });
    m.def("catalog_case_ids", [] {
        std::vector<std::string> out;
        for (const auto& c : builtin_catalog()) out.push_back(c.case_id);
        return out;
    });
    m.def(
        "verify_case",
        [](const std::string& case_id, const Cplx& x, std::optional<double> param,
           double identity_tol, const ToleranceConfig& tol) {
            return verify_case(make_application_case(case_id, param), x, tol, identity_tol);
        },
        py::arg("case_id"), py::arg("x"), py::arg("param") = py::none(),
        py::arg("identity_tol") = 1e-9, py::arg("tol") = ToleranceConfig{});
    m.def(
        "verify_all",
        [](double identity_tol, const ToleranceConfig& tol) {
            auto catalog = builtin_catalog();
            const CatalogReport report = verify_all(catalog, identity_tol, tol);
            py::list rows;
            for (const auto& row : report.rows) rows.append(report_row_to_dict(row));
            return rows;
        },
        py::arg("identity_tol") = 1e-9, py::arg("tol") = ToleranceConfig{});
    m.def("dump_catalog", [] {
        auto catalog = builtin_catalog();
        std::ostringstream os;
        dump_catalog(catalog, os);
        return os.str();
    });
}
