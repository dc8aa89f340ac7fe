#include "quintsect/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "quintsect/errors.hpp"
#include "quintsect/oracles.hpp"
#include "quintsect/roots.hpp"

namespace quintsect {
namespace {

constexpr double kEdgeTol = 1e-12;
const double kSqrtPi = std::sqrt(std::numbers::pi);

using Weights = std::array<Cplx, 5>;

Weights unit_weights() {
    return {Cplx{1.0, 0.0}, Cplx{1.0, 0.0}, Cplx{1.0, 0.0}, Cplx{1.0, 0.0},
            Cplx{1.0, 0.0}};
}

// w_k = alpha^k
Weights ascending_weights() {
    Weights w;
    for (int k = 0; k < 5; ++k) w[static_cast<std::size_t>(k)] = fifth_root(k);
    return w;
}

// w_k = alpha^{4-k}: alpha^4, alpha^3, ..., 1
Weights descending_weights() {
    Weights w;
    for (int k = 0; k < 5; ++k) w[static_cast<std::size_t>(k)] = fifth_root(4 - k);
    return w;
}

// w_k = alpha^{8-2k}: alpha^8, alpha^6, alpha^4, alpha^2, 1
Weights even_descending_weights() {
    Weights w;
    for (int k = 0; k < 5; ++k) w[static_cast<std::size_t>(k)] = fifth_root(8 - 2 * k);
    return w;
}

std::vector<Cplx> reals(std::initializer_list<double> xs) {
    std::vector<Cplx> out;
    out.reserve(xs.size());
    for (double v : xs) out.emplace_back(v, 0.0);
    return out;
}

Cplx arg_tenth_pow10_neg(const Cplx& x) { return -int_pow(x / 10.0, 10); }
Cplx arg_x10_neg(const Cplx& x) { return -int_pow(x, 10); }
Cplx arg_x10(const Cplx& x) { return int_pow(x, 10); }
Cplx arg_fifth_sq_pow5_neg(const Cplx& x) { return -int_pow(x * x / 5.0, 5); }

std::vector<double> default_samples(double radius) {
    return {0.2 * radius, 0.45 * radius, 0.7 * radius};
}

void require_positive_param(const std::string& case_id, double param) {
    if (!(param > 0.0)) {
        throw SpecError("catalog case " + case_id + ": parameter must be positive");
    }
}

ApplicationCase build_case(const std::string& case_id, double param) {
    ApplicationCase app;
    app.case_id = case_id;
    const double pi = std::numbers::pi;

    if (case_id == "eq4.1a-sin") {
        app.printed_label = "(4.1)";
        app.fn = SpecialFunctionId::sin_fn;
        app.lhs_weights = descending_weights();
        app.rhs_prefactor = [](const Cplx& x) { return 5.0 * x * fifth_root(4); };
        app.rhs_spec = PFQSpec({}, reals({0.2, 0.4, 0.6, 0.8, 0.3, 0.5, 0.7, 0.9, 1.1}));
        app.rhs_argument = arg_tenth_pow10_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.1b-cos") {
        app.printed_label = "(4.1)";
        app.fn = SpecialFunctionId::cos_fn;
        app.lhs_weights = unit_weights();
        app.rhs_prefactor = [](const Cplx&) { return Cplx{5.0, 0.0}; };
        app.rhs_spec = PFQSpec({}, reals({0.2, 0.4, 0.6, 0.8, 0.1, 0.3, 0.5, 0.7, 0.9}));
        app.rhs_argument = arg_tenth_pow10_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.2-sin") {
        app.printed_label = "(4.2)";
        app.fn = SpecialFunctionId::sin_fn;
        app.lhs_weights = unit_weights();
        app.rhs_prefactor = [](const Cplx& x) { return int_pow(x, 5) / 24.0; };
        app.rhs_spec = PFQSpec({}, reals({0.6, 0.8, 1.2, 1.4, 0.7, 0.9, 1.1, 1.3, 1.5}));
        app.rhs_argument = arg_tenth_pow10_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.2-cos") {
        app.printed_label = "(4.2)";
        app.fn = SpecialFunctionId::cos_fn;
        app.lhs_weights = ascending_weights();
        app.rhs_prefactor = [](const Cplx& x) { return 5.0 * int_pow(x, 4) / 24.0; };
        app.rhs_spec = PFQSpec({}, reals({0.6, 0.8, 1.2, 1.4, 0.5, 0.7, 0.9, 1.1, 1.3}));
        app.rhs_argument = arg_tenth_pow10_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.5-arctan") {
        app.printed_label = "(4.5)";
        app.fn = SpecialFunctionId::arctan_fn;
        app.lhs_weights = descending_weights();
        app.rhs_prefactor = [](const Cplx& x) { return 5.0 * x * fifth_root(4); };
        app.rhs_spec = PFQSpec(reals({1.0, 0.1}), reals({1.1}));
        app.rhs_argument = arg_x10_neg;
    } else if (case_id == "eq4.6-arctan") {
        app.printed_label = "(4.6)";
        app.fn = SpecialFunctionId::arctan_fn;
        app.lhs_weights = unit_weights();
        app.rhs_prefactor = [](const Cplx& x) { return int_pow(x, 5); };
        app.rhs_spec = PFQSpec(reals({1.0, 0.5}), reals({1.5}));
        app.rhs_argument = arg_x10_neg;
    } else if (case_id == "eq4.7-E") {
        app.printed_label = "(4.7)";
        app.fn = SpecialFunctionId::elliptic_e_fn;
        app.lhs_weights = unit_weights();
        app.rhs_prefactor = [pi](const Cplx&) { return Cplx{2.5 * pi, 0.0}; };
        app.rhs_spec =
            PFQSpec(reals({-0.1, 0.1, 0.1, 0.3, 0.3, 0.5, 0.5, 0.7, 0.7, 0.9}),
                    reals({0.2, 0.2, 0.4, 0.4, 0.6, 0.6, 0.8, 0.8, 1.0}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.8-E") {
        // Numerator carries the printed 15/10 entry; the derivation from the
        // weighted theorem would give 5/10. Encoded verbatim and adjudicated
        // by measurement.
        app.printed_label = "(4.8)";
        app.fn = SpecialFunctionId::elliptic_e_fn;
        app.lhs_weights = ascending_weights();
        app.rhs_prefactor = [pi](const Cplx& x) {
            return -15.0 * pi / 128.0 * int_pow(x, 4);
        };
        app.rhs_spec =
            PFQSpec(reals({0.3, 0.5, 1.5, 0.7, 0.7, 0.9, 0.9, 1.1, 1.1, 1.3}),
                    reals({0.6, 0.6, 0.8, 0.8, 1.2, 1.2, 1.4, 1.4, 1.0}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.9-erf") {
        app.printed_label = "(4.9)";
        app.fn = SpecialFunctionId::erf_fn;
        app.lhs_weights = descending_weights();
        app.rhs_prefactor = [](const Cplx& x) {
            return 10.0 * x * fifth_root(4) / kSqrtPi;
        };
        app.rhs_spec = PFQSpec(reals({0.1}), reals({1.1, 0.2, 0.4, 0.6, 0.8}));
        app.rhs_argument = arg_fifth_sq_pow5_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.10-erf") {
        app.printed_label = "(4.10)";
        app.fn = SpecialFunctionId::erf_fn;
        app.lhs_weights = unit_weights();
        app.rhs_prefactor = [](const Cplx& x) { return int_pow(x, 5) / kSqrtPi; };
        app.rhs_spec = PFQSpec(reals({0.5}), reals({1.5, 0.6, 0.8, 1.2, 1.4}));
        app.rhs_argument = arg_fifth_sq_pow5_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.11-arcsinsq") {
        app.printed_label = "(4.11)";
        app.fn = SpecialFunctionId::arcsin_squared_fn;
        app.lhs_weights = even_descending_weights();
        app.rhs_prefactor = [](const Cplx& x) {
            return 5.0 * x * x * fifth_root(8);
        };
        app.rhs_spec = PFQSpec(reals({0.2, 0.2, 0.4, 0.6, 0.8, 1.0, 1.0}),
                               reals({1.2, 0.3, 0.5, 0.7, 0.9, 1.1}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.12-arcsinsq") {
        app.printed_label = "(4.12)";
        app.fn = SpecialFunctionId::arcsin_squared_fn;
        app.lhs_weights = descending_weights();
        app.rhs_prefactor = [](const Cplx& x) {
            return 8.0 / 9.0 * int_pow(x, 6) * fifth_root(4);
        };
        app.rhs_spec = PFQSpec(reals({0.6, 0.6, 0.8, 1.2, 1.4, 1.0, 1.0}),
                               reals({1.6, 0.7, 0.9, 1.1, 1.3, 1.5}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.13-K") {
        app.printed_label = "(4.13)";
        app.fn = SpecialFunctionId::elliptic_k_fn;
        app.lhs_weights = unit_weights();
        app.rhs_prefactor = [pi](const Cplx&) { return Cplx{2.5 * pi, 0.0}; };
        app.rhs_spec =
            PFQSpec(reals({0.1, 0.1, 0.3, 0.3, 0.5, 0.5, 0.7, 0.7, 0.9, 0.9}),
                    reals({0.2, 0.2, 0.4, 0.4, 0.6, 0.6, 0.8, 0.8, 1.0}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.14-K") {
        app.printed_label = "(4.14)";
        app.fn = SpecialFunctionId::elliptic_k_fn;
        app.lhs_weights = ascending_weights();
        app.rhs_prefactor = [pi](const Cplx& x) {
            return 45.0 * pi / 128.0 * int_pow(x, 4);
        };
        app.rhs_spec =
            PFQSpec(reals({0.5, 0.5, 0.7, 0.7, 0.9, 0.9, 1.1, 1.1, 1.3, 1.3}),
                    reals({0.6, 0.6, 0.8, 0.8, 1.2, 1.2, 1.4, 1.4, 1.0}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.15-dilog") {
        app.printed_label = "(4.15)";
        app.fn = SpecialFunctionId::dilog_fn;
        app.lhs_weights = even_descending_weights();
        app.rhs_prefactor = [](const Cplx& x) {
            return 5.0 * x * x * fifth_root(8);
        };
        app.rhs_spec = PFQSpec(reals({0.2, 0.2, 1.0}), reals({1.2, 1.2}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.16-dilog") {
        app.printed_label = "(4.16)";
        app.fn = SpecialFunctionId::dilog_fn;
        app.lhs_weights = descending_weights();
        app.rhs_prefactor = [](const Cplx& x) {
            return 5.0 / 9.0 * int_pow(x, 6) * fifth_root(4);
        };
        app.rhs_spec = PFQSpec(reals({0.6, 0.6, 1.0}), reals({1.6, 1.6}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.17-incgamma") {
        require_positive_param(case_id, param);
        app.printed_label = "(4.17)";
        app.fn = SpecialFunctionId::lower_incomplete_gamma_fn;
        app.parameterized = true;
        app.param = param;
        for (int k = 0; k < 5; ++k) {
            app.lhs_weights[static_cast<std::size_t>(k)] =
                principal_pow(fifth_root(8 - 2 * k), Cplx{param, 0.0});
        }
        app.rhs_prefactor = [param](const Cplx& x) {
            return 5.0 * principal_pow(x, Cplx{2.0 * param, 0.0}) *
                   principal_pow(fifth_root(8), Cplx{param, 0.0}) / param;
        };
        app.rhs_spec = PFQSpec(reals({param / 5.0}),
                               reals({(param + 5.0) / 5.0, 0.2, 0.4, 0.6, 0.8}));
        app.rhs_argument = arg_fifth_sq_pow5_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.18-incgamma") {
        require_positive_param(case_id, param);
        app.printed_label = "(4.18)";
        app.fn = SpecialFunctionId::lower_incomplete_gamma_fn;
        app.parameterized = true;
        app.param = param;
        for (int k = 0; k < 5; ++k) {
            app.lhs_weights[static_cast<std::size_t>(k)] =
                principal_pow(fifth_root(8 - 2 * k), Cplx{param, 0.0}) *
                fifth_root(k);
        }
        app.rhs_prefactor = [param](const Cplx& x) {
            return 5.0 * principal_pow(x, Cplx{2.0 * param + 4.0, 0.0}) *
                   principal_pow(fifth_root(8), Cplx{param, 0.0}) /
                   (2.0 * (param + 2.0));
        };
        app.rhs_spec = PFQSpec(reals({(param + 2.0) / 5.0}),
                               reals({(param + 7.0) / 5.0, 0.6, 0.8, 1.2, 1.4}));
        app.rhs_argument = arg_fifth_sq_pow5_neg;
        app.domain_radius = 2.0;
        app.hard_limit = std::numeric_limits<double>::infinity();
    } else if (case_id == "eq4.19-conformal") {
        require_positive_param(case_id, param);
        app.printed_label = "(4.17)";
        app.fn = SpecialFunctionId::conformal_power_fn;
        app.parameterized = true;
        app.param = param;
        app.lhs_weights = unit_weights();
        app.rhs_prefactor = [](const Cplx&) { return Cplx{5.0, 0.0}; };
        const double g = param;
        app.rhs_spec = PFQSpec(
            reals({g / 5.0, (g + 1.0) / 5.0, (g + 2.0) / 5.0, (g + 3.0) / 5.0,
                   (g + 4.0) / 5.0, (2.0 * g - 1.0) / 10.0, (2.0 * g + 1.0) / 10.0,
                   (2.0 * g + 3.0) / 10.0, (2.0 * g + 5.0) / 10.0,
                   (2.0 * g + 7.0) / 10.0}),
            reals({0.2, 0.4, 0.6, 0.8, 2.0 * g / 5.0, (2.0 * g + 1.0) / 5.0,
                   (2.0 * g + 2.0) / 5.0, (2.0 * g + 3.0) / 5.0,
                   (2.0 * g + 4.0) / 5.0}));
        app.rhs_argument = arg_x10;
    } else if (case_id == "eq4.20-conformal") {
        require_positive_param(case_id, param);
        app.printed_label = "(4.17)";
        app.fn = SpecialFunctionId::conformal_power_fn;
        app.parameterized = true;
        app.param = param;
        app.lhs_weights = ascending_weights();
        const double g = param;
        // 5 (g)_2 (g - 1/2)_2 / (2 (2g)_2) * x^4
        const double coeff = 5.0 * (g * (g + 1.0)) * ((g - 0.5) * (g + 0.5)) /
                             (2.0 * (2.0 * g) * (2.0 * g + 1.0));
        app.rhs_prefactor = [coeff](const Cplx& x) { return coeff * int_pow(x, 4); };
        app.rhs_spec = PFQSpec(
            reals({(g + 2.0) / 5.0, (g + 3.0) / 5.0, (g + 4.0) / 5.0,
                   (g + 5.0) / 5.0, (g + 6.0) / 5.0, (2.0 * g + 3.0) / 10.0,
                   (2.0 * g + 5.0) / 10.0, (2.0 * g + 7.0) / 10.0,
                   (2.0 * g + 9.0) / 10.0, (2.0 * g + 11.0) / 10.0}),
            reals({0.6, 0.8, 1.2, 1.4, (2.0 * g + 2.0) / 5.0,
                   (2.0 * g + 3.0) / 5.0, (2.0 * g + 4.0) / 5.0,
                   (2.0 * g + 5.0) / 5.0, (2.0 * g + 6.0) / 5.0}));
        app.rhs_argument = arg_x10;
    } else {
        throw SpecError("unknown catalog case: " + case_id);
    }

    app.sample_points = default_samples(app.domain_radius);
    return app;
}

const std::vector<std::string>& case_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v = {
            "eq4.1a-sin",     "eq4.1b-cos",     "eq4.2-sin",      "eq4.2-cos",
            "eq4.5-arctan",   "eq4.6-arctan",   "eq4.7-E",        "eq4.8-E",
            "eq4.9-erf",      "eq4.10-erf",     "eq4.11-arcsinsq","eq4.12-arcsinsq",
            "eq4.13-K",       "eq4.14-K",       "eq4.15-dilog",   "eq4.16-dilog",
            "eq4.17-incgamma","eq4.18-incgamma","eq4.19-conformal","eq4.20-conformal",
        };
        std::sort(v.begin(), v.end());
        return v;
    }();
    return ids;
}

} // namespace

const char* to_string(SpecialFunctionId f) {
    switch (f) {
        case SpecialFunctionId::arcsin_fn: return "arcsin";
        case SpecialFunctionId::arctan_fn: return "arctan";
        case SpecialFunctionId::sin_fn: return "sin";
        case SpecialFunctionId::cos_fn: return "cos";
        case SpecialFunctionId::arcsin_squared_fn: return "arcsin-squared";
        case SpecialFunctionId::conformal_power_fn: return "conformal-power";
        case SpecialFunctionId::elliptic_k_fn: return "K";
        case SpecialFunctionId::elliptic_e_fn: return "E";
        case SpecialFunctionId::erf_fn: return "erf";
        case SpecialFunctionId::lower_incomplete_gamma_fn: return "lower-incomplete-gamma";
        case SpecialFunctionId::dilog_fn: return "dilog";
    }
    return "unknown";
}

SpecialFunctionId special_function_from_string(const std::string& tag) {
    for (SpecialFunctionId f : all_special_functions()) {
        if (tag == to_string(f)) return f;
    }
    throw SpecError("unknown special function tag: " + tag);
}

std::vector<SpecialFunctionId> all_special_functions() {
    return {SpecialFunctionId::arcsin_fn,
            SpecialFunctionId::arctan_fn,
            SpecialFunctionId::sin_fn,
            SpecialFunctionId::cos_fn,
            SpecialFunctionId::arcsin_squared_fn,
            SpecialFunctionId::conformal_power_fn,
            SpecialFunctionId::elliptic_k_fn,
            SpecialFunctionId::elliptic_e_fn,
            SpecialFunctionId::erf_fn,
            SpecialFunctionId::lower_incomplete_gamma_fn,
            SpecialFunctionId::dilog_fn};
}

const char* to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::unverified: return "unverified";
        case CaseStatus::verified: return "verified";
        case CaseStatus::discrepant: return "discrepant";
    }
    return "unknown";
}

CaseStatus case_status_from_string(const std::string& name) {
    if (name == "unverified") return CaseStatus::unverified;
    if (name == "verified") return CaseStatus::verified;
    if (name == "discrepant") return CaseStatus::discrepant;
    throw SpecError("unknown case status: " + name);
}

RepresentationParts representation_parts(SpecialFunctionId f, const Cplx& x,
                                         double param) {
    const bool disk_limited =
        f == SpecialFunctionId::arcsin_fn || f == SpecialFunctionId::arctan_fn ||
        f == SpecialFunctionId::arcsin_squared_fn ||
        f == SpecialFunctionId::conformal_power_fn ||
        f == SpecialFunctionId::elliptic_k_fn ||
        f == SpecialFunctionId::elliptic_e_fn || f == SpecialFunctionId::dilog_fn;
    if (disk_limited && std::abs(x) >= 1.0 - kEdgeTol) {
        throw DomainError("representation: |x| must be below 1 for this row");
    }

    const Cplx x2 = x * x;
    RepresentationParts parts;
    switch (f) {
        case SpecialFunctionId::arcsin_fn:
            parts.prefactor = x;
            parts.spec = PFQSpec(reals({0.5, 0.5}), reals({1.5}));
            parts.argument = x2;
            break;
        case SpecialFunctionId::arctan_fn:
            parts.prefactor = x;
            parts.spec = PFQSpec(reals({1.0, 0.5}), reals({1.5}));
            parts.argument = -x2;
            break;
        case SpecialFunctionId::sin_fn:
            parts.prefactor = x;
            parts.spec = PFQSpec({}, reals({1.5}));
            parts.argument = -x2 / 4.0;
            break;
        case SpecialFunctionId::cos_fn:
            parts.spec = PFQSpec({}, reals({0.5}));
            parts.argument = -x2 / 4.0;
            break;
        case SpecialFunctionId::arcsin_squared_fn:
            parts.prefactor = x2;
            parts.spec = PFQSpec(reals({1.0, 1.0, 1.0}), reals({2.0, 1.5}));
            parts.argument = x2;
            break;
        case SpecialFunctionId::conformal_power_fn:
            if (!(param > 0.0)) throw DomainError("conformal-power: gamma must be positive");
            parts.spec = PFQSpec(reals({param, param - 0.5}), reals({2.0 * param}));
            parts.argument = x2;
            break;
        case SpecialFunctionId::elliptic_k_fn:
            parts.prefactor = std::numbers::pi / 2.0;
            parts.spec = PFQSpec(reals({0.5, 0.5}), reals({1.0}));
            parts.argument = x2;
            break;
        case SpecialFunctionId::elliptic_e_fn:
            parts.prefactor = std::numbers::pi / 2.0;
            parts.spec = PFQSpec(reals({-0.5, 0.5}), reals({1.0}));
            parts.argument = x2;
            break;
        case SpecialFunctionId::erf_fn:
            parts.prefactor = 2.0 * x / kSqrtPi;
            parts.spec = PFQSpec(reals({0.5}), reals({1.5}));
            parts.argument = -x2;
            break;
        case SpecialFunctionId::lower_incomplete_gamma_fn:
            if (!(param > 0.0)) throw DomainError("lower-incomplete-gamma: a must be positive");
            // (x^2)^a keeps the same branch as the oracle's z^a at complex x.
            parts.prefactor = principal_pow(x2, Cplx{param, 0.0}) / param;
            parts.spec = PFQSpec(reals({param}), reals({1.0 + param}));
            parts.argument = -x2;
            break;
        case SpecialFunctionId::dilog_fn:
            parts.prefactor = x2;
            parts.spec = PFQSpec(reals({1.0, 1.0, 1.0}), reals({2.0, 2.0}));
            parts.argument = x2;
            break;
    }
    return parts;
}

Cplx eval_by_representation(SpecialFunctionId f, const Cplx& x,
                            const ToleranceConfig& tol, double param) {
    const RepresentationParts parts = representation_parts(f, x, param);
    const SeriesEvaluation eval = eval_pfq(parts.spec, parts.argument, tol);
    if (eval.status != SeriesStatus::converged) {
        throw DomainError("eval_by_representation: series did not converge");
    }
    return parts.prefactor * eval.value;
}

Cplx eval_oracle(SpecialFunctionId f, const Cplx& x, double param) {
    switch (f) {
        case SpecialFunctionId::arcsin_fn: return std::asin(x);
        case SpecialFunctionId::arctan_fn: return std::atan(x);
        case SpecialFunctionId::sin_fn: return std::sin(x);
        case SpecialFunctionId::cos_fn: return std::cos(x);
        case SpecialFunctionId::arcsin_squared_fn: {
            const Cplx s = std::asin(x);
            return s * s;
        }
        case SpecialFunctionId::conformal_power_fn: return conformal_power(x, param);
        case SpecialFunctionId::elliptic_k_fn: return agm_elliptic_k(x);
        case SpecialFunctionId::elliptic_e_fn: return agm_elliptic_e(x);
        case SpecialFunctionId::erf_fn: return error_function(x);
        case SpecialFunctionId::lower_incomplete_gamma_fn:
            return lower_incomplete_gamma(Cplx{param, 0.0}, x * x);
        case SpecialFunctionId::dilog_fn: return dilogarithm(x * x);
    }
    throw DomainError("eval_oracle: unknown function id");
}

std::vector<ApplicationCase> builtin_catalog() {
    std::vector<ApplicationCase> catalog;
    catalog.reserve(case_ids().size());
    for (const std::string& id : case_ids()) {
        catalog.push_back(build_case(id, 1.0));
    }
    return catalog;
}

ApplicationCase make_application_case(const std::string& case_id,
                                      std::optional<double> param) {
    return build_case(case_id, param.value_or(1.0));
}

const ApplicationCase* find_case(const std::vector<ApplicationCase>& catalog,
                                 const std::string& case_id) {
    for (const ApplicationCase& c : catalog) {
        if (c.case_id == case_id) return &c;
    }
    return nullptr;
}

IdentityResidual verify_case(const ApplicationCase& app, const Cplx& x,
                             const ToleranceConfig& tol, double identity_tol) {
    IdentityResidual out;
    if (std::abs(x) >= app.hard_limit - kEdgeTol) {
        out.lhs_status = SeriesStatus::diverging;
        out.rhs_status = SeriesStatus::diverging;
        out.verdict = Verdict::not_evaluable;
        return out;
    }

    Cplx lhs{0.0, 0.0};
    try {
        for (int k = 0; k < 5; ++k) {
            lhs += app.lhs_weights[static_cast<std::size_t>(k)] *
                   eval_oracle(app.fn, x * fifth_root(k), app.param);
        }
    } catch (const DomainError&) {
        out.lhs_status = SeriesStatus::diverging;
        out.rhs_status = SeriesStatus::diverging;
        out.verdict = Verdict::not_evaluable;
        return out;
    }

    const SeriesEvaluation rhs_series = eval_pfq(app.rhs_spec, app.rhs_argument(x), tol);
    const Cplx rhs = app.rhs_prefactor(x) * rhs_series.value;

    out.lhs = lhs;
    out.rhs = rhs;
    out.lhs_status = SeriesStatus::converged;
    out.rhs_status = rhs_series.status;
    out.residual = residual_metric(lhs, rhs);
    if (rhs_series.status != SeriesStatus::converged) {
        out.verdict = Verdict::not_evaluable;
    } else if (out.residual <= identity_tol) {
        out.verdict = Verdict::pass;
    } else {
        out.verdict = Verdict::fail;
    }
    return out;
}

CatalogReport verify_all(std::vector<ApplicationCase>& catalog,
                         double identity_tol, const ToleranceConfig& tol) {
    CatalogReport report;
    report.identity_tol = identity_tol;
    report.rows.reserve(catalog.size());

    for (ApplicationCase& app : catalog) {
        CaseReport row;
        row.case_id = app.case_id;
        row.printed_label = app.printed_label;
        row.parameterized = app.parameterized;
        row.param = app.param;
        row.domain_radius = app.domain_radius;

        bool any_unverified = false;
        bool all_pass = true;
        for (double x : app.sample_points) {
            const IdentityResidual r = verify_case(app, Cplx{x, 0.0}, tol, identity_tol);
            CasePointResult point;
            point.x = x;
            point.lhs = r.lhs;
            point.rhs = r.rhs;
            point.residual = r.residual;
            point.verdict = r.verdict;
            row.points.push_back(point);

            if (r.verdict == Verdict::not_evaluable) {
                any_unverified = true;
            } else if (r.verdict == Verdict::fail) {
                all_pass = false;
            }
            if (r.verdict != Verdict::not_evaluable && r.residual >= row.max_residual) {
                row.max_residual = r.residual;
                row.worst_ratio = (std::abs(r.rhs) > 1e-300) ? r.lhs / r.rhs
                                                             : Cplx{0.0, 0.0};
            }
        }

        if (any_unverified) {
            row.status = CaseStatus::unverified;
        } else if (all_pass) {
            row.status = CaseStatus::verified;
        } else {
            row.status = CaseStatus::discrepant;
        }
        app.status = row.status;
        report.rows.push_back(std::move(row));
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const CaseReport& a, const CaseReport& b) {
                  return a.case_id < b.case_id;
              });
    return report;
}

void dump_catalog(const std::vector<ApplicationCase>& catalog, std::ostream& os) {
    std::vector<const ApplicationCase*> ordered;
    ordered.reserve(catalog.size());
    for (const ApplicationCase& c : catalog) ordered.push_back(&c);
    std::sort(ordered.begin(), ordered.end(),
              [](const ApplicationCase* a, const ApplicationCase* b) {
                  return a->case_id < b->case_id;
              });

    os << "# quintsect catalog v1\n";
    char buf[64];
    for (const ApplicationCase* c : ordered) {
        os << "case_id=" << c->case_id << "\n";
        os << "printed_label=" << c->printed_label << "\n";
        os << "function=" << to_string(c->fn) << "\n";
        os << "param=";
        if (c->parameterized) {
            std::snprintf(buf, sizeof(buf), "%.17g", c->param);
            os << buf;
        }
        os << "\n";
        std::snprintf(buf, sizeof(buf), "%.17g", c->domain_radius);
        os << "domain_radius=" << buf << "\n";
        os << "sample_points=";
        for (std::size_t i = 0; i < c->sample_points.size(); ++i) {
            if (i) os << ",";
            std::snprintf(buf, sizeof(buf), "%.17g", c->sample_points[i]);
            os << buf;
        }
        os << "\n";
        os << "status=" << to_string(c->status) << "\n\n";
    }
}

std::vector<ApplicationCase> load_catalog(std::istream& is) {
    std::vector<ApplicationCase> catalog;
    std::string line;
    std::string case_id;
    std::string function_tag;
    std::string status;
    std::optional<double> param;
    std::optional<double> radius;
    std::vector<double> samples;

    auto flush_record = [&]() {
        if (case_id.empty()) return;
        ApplicationCase app = make_application_case(case_id, param);
        if (!function_tag.empty() && function_tag != to_string(app.fn)) {
            throw SpecError("catalog record " + case_id + ": function tag mismatch");
        }
        if (radius) app.domain_radius = *radius;
        if (!samples.empty()) app.sample_points = samples;
        if (!status.empty()) app.status = case_status_from_string(status);
        catalog.push_back(std::move(app));
        case_id.clear();
        function_tag.clear();
        status.clear();
        param.reset();
        radius.reset();
        samples.clear();
    };

    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush_record();
            continue;
        }
        if (line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw SpecError("catalog parse: expected key=value, got: " + line);
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "case_id") {
            case_id = value;
        } else if (key == "printed_label") {
            // informational; regenerated from the case id
        } else if (key == "function") {
            function_tag = value;
        } else if (key == "param") {
            if (!value.empty()) param = std::stod(value);
        } else if (key == "domain_radius") {
            radius = std::stod(value);
        } else if (key == "sample_points") {
            samples.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) samples.push_back(std::stod(item));
            }
        } else if (key == "status") {
            status = value;
        } else {
            throw SpecError("catalog parse: unknown key: " + key);
        }
    }
    flush_record();
    return catalog;
}

} // namespace quintsect
