#ifndef QUINTSECT_CATALOG_HPP
#define QUINTSECT_CATALOG_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quintsect/hypergeom.hpp"
#include "quintsect/identities.hpp"

namespace quintsect {

// The eleven table functions, each available both as a hypergeometric
// representation and as an independent oracle. conformal-power carries the
// gamma parameter, lower-incomplete-gamma the a parameter.
enum class SpecialFunctionId {
    arcsin_fn,
    arctan_fn,
    sin_fn,
    cos_fn,
    arcsin_squared_fn,
    conformal_power_fn,
    elliptic_k_fn,
    elliptic_e_fn,
    erf_fn,
    lower_incomplete_gamma_fn,
    dilog_fn,
};

const char* to_string(SpecialFunctionId f);
SpecialFunctionId special_function_from_string(const std::string& tag);
std::vector<SpecialFunctionId> all_special_functions();

// The pieces of one table row at a point: prefactor * pFq(spec, argument).
struct RepresentationParts {
    Cplx prefactor{1.0, 0.0};
    PFQSpec spec;
    Cplx argument{0.0, 0.0};
};

// Row decomposition for f at x; throws DomainError outside the row's
// convergence domain (|x| < 1 for the 2F1-based rows).
RepresentationParts representation_parts(SpecialFunctionId f, const Cplx& x,
                                         double param = 1.0);

// prefactor * pFq(row spec, row argument map of x). Throws DomainError
// outside the row's convergence domain (|x| < 1 for the 2F1-based rows).
// param is the a (incomplete gamma) or gamma (conformal power) value.
Cplx eval_by_representation(SpecialFunctionId f, const Cplx& x,
                            const ToleranceConfig& tol = {}, double param = 1.0);

// Independent reference value of the same function of x (the incomplete
// gamma and dilogarithm rows are functions of x through x^2, matching their
// table rows).
Cplx eval_oracle(SpecialFunctionId f, const Cplx& x, double param = 1.0);

enum class CaseStatus { unverified, verified, discrepant };

const char* to_string(CaseStatus s);
CaseStatus case_status_from_string(const std::string& name);

// One printed application equation: a weighted sum of oracle values at the
// rotated points x alpha^k on the left, a prefactor times one pFq series on
// the right, both encoded exactly as printed.
struct ApplicationCase {
    std::string case_id;
    std::string printed_label;
    SpecialFunctionId fn = SpecialFunctionId::sin_fn;
    bool parameterized = false;
    double param = 1.0;
    std::array<Cplx, 5> lhs_weights{};
    std::function<Cplx(const Cplx&)> rhs_prefactor;
    PFQSpec rhs_spec;
    std::function<Cplx(const Cplx&)> rhs_argument;
    double domain_radius = 1.0; // sampling radius
    double hard_limit = 1.0;    // evaluation requires |x| < hard_limit
    std::vector<double> sample_points;
    CaseStatus status = CaseStatus::unverified;
};

// All printed application equations, default parameters, sample points at
// 0.2 / 0.45 / 0.7 of each domain radius. Ordered by case_id.
std::vector<ApplicationCase> builtin_catalog();

// One case by id, optionally with a different a/gamma parameter.
ApplicationCase make_application_case(const std::string& case_id,
                                      std::optional<double> param = std::nullopt);

const ApplicationCase* find_case(const std::vector<ApplicationCase>& catalog,
                                 const std::string& case_id);

// LHS from the oracle at the five rotated arguments, RHS from the printed
// series; not-evaluable outside the case domain.
IdentityResidual verify_case(const ApplicationCase& app, const Cplx& x,
                             const ToleranceConfig& tol = {},
                             double identity_tol = 1e-9);

struct CasePointResult {
    double x = 0.0;
    Cplx lhs{0.0, 0.0};
    Cplx rhs{0.0, 0.0};
    double residual = 0.0;
    Verdict verdict = Verdict::not_evaluable;
};

struct CaseReport {
    std::string case_id;
    std::string printed_label;
    bool parameterized = false;
    double param = 1.0;
    double domain_radius = 1.0;
    std::vector<CasePointResult> points;
    CaseStatus status = CaseStatus::unverified;
    double max_residual = 0.0;
    Cplx worst_ratio{0.0, 0.0}; // measured lhs/rhs at the worst point
};

struct CatalogReport {
    std::vector<CaseReport> rows; // ordered by case_id
    double identity_tol = 1e-9;
};

// Runs verify_case over every case at its sample points, updates each case's
// status in place (verified / discrepant / unverified) and returns the
// report. Measured LHS/RHS ratios are recorded for every discrepant case.
CatalogReport verify_all(std::vector<ApplicationCase>& catalog,
                         double identity_tol = 1e-9,
                         const ToleranceConfig& tol = {});

// Structured text round trip; one record per case with the stable field
// order case_id, printed_label, function, param, domain_radius,
// sample_points, status. Blank line between records.
void dump_catalog(const std::vector<ApplicationCase>& catalog, std::ostream& os);
std::vector<ApplicationCase> load_catalog(std::istream& is);

} // namespace quintsect

#endif
