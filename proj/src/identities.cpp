#include "quintsect/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "quintsect/errors.hpp"
#include "quintsect/gamma.hpp"
#include "quintsect/pochhammer.hpp"
#include "quintsect/roots.hpp"

namespace quintsect {
namespace {

constexpr double kDomainTol = 1e-12;

bool is_weighted(TheoremId id) {
    return id == TheoremId::psi_weighted || id == TheoremId::psistar_weighted ||
           id == TheoremId::pfq_weighted;
}

bool is_pfq(TheoremId id) {
    return id == TheoremId::pfq_even || id == TheoremId::pfq_weighted;
}

// Shifted pfq parameter (v + shift) / 5, with the pole test done on the
// undivided value: (v + shift)/5 is a nonpositive integer exactly when
// v + shift = 5m for an integer m <= 0.
Cplx fifth_shift(const Cplx& v, int shift) {
    const Cplx t = v + static_cast<double>(shift);
    if (std::abs(t.imag()) <= kDomainTol) {
        const double m = std::round(t.real() / 5.0);
        if (m <= 0.5 && std::abs(t.real() - 5.0 * m) <= kDomainTol) {
            throw SpecError("transformed pfq spec: denominator parameter at a "
                            "nonpositive integer");
        }
    }
    return t / 5.0;
}

Cplx fifth_shift_numerator(const Cplx& v, int shift) {
    return (v + static_cast<double>(shift)) / 5.0;
}

SeriesEvaluation evaluate_member(const TheoremInstance& inst, const Cplx& z,
                                 const ToleranceConfig& tol) {
    switch (inst.id) {
        case TheoremId::pfq_even:
        case TheoremId::pfq_weighted:
            return eval_pfq(std::get<PFQSpec>(inst.spec), z, tol);
        case TheoremId::psi_even:
        case TheoremId::psi_weighted:
            return eval_fox_wright(std::get<FoxWrightSpec>(inst.spec), z, tol);
        case TheoremId::psistar_even:
        case TheoremId::psistar_weighted:
            return eval_fox_wright_normalized(std::get<FoxWrightSpec>(inst.spec), z, tol);
    }
    throw std::logic_error("evaluate_member: unknown theorem id");
}

SeriesEvaluation scaled(SeriesEvaluation eval, const Cplx& prefactor) {
    eval.value *= prefactor;
    eval.tail_estimate *= std::abs(prefactor);
    return eval;
}

} // namespace

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::psi_even: return "psi-even";
        case TheoremId::psi_weighted: return "psi-weighted";
        case TheoremId::psistar_even: return "psistar-even";
        case TheoremId::psistar_weighted: return "psistar-weighted";
        case TheoremId::pfq_even: return "pfq-even";
        case TheoremId::pfq_weighted: return "pfq-weighted";
    }
    return "unknown";
}

TheoremId theorem_id_from_string(const std::string& name) {
    if (name == "psi-even") return TheoremId::psi_even;
    if (name == "psi-weighted") return TheoremId::psi_weighted;
    if (name == "psistar-even") return TheoremId::psistar_even;
    if (name == "psistar-weighted") return TheoremId::psistar_weighted;
    if (name == "pfq-even") return TheoremId::pfq_even;
    if (name == "pfq-weighted") return TheoremId::pfq_weighted;
    throw SpecError("unknown theorem id: " + name);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_evaluable: return "not-evaluable";
    }
    return "unknown";
}

PFQSpec transformed_pfq_spec(const PFQSpec& spec, bool weighted) {
    const int base = weighted ? 2 : 0;
    std::vector<Cplx> num;
    num.reserve(5 * spec.p());
    for (const Cplx& a : spec.numerator) {
        for (int j = 0; j < 5; ++j) {
            num.push_back(fifth_shift_numerator(a, base + j));
        }
    }
    std::vector<Cplx> den;
    den.reserve(5 * spec.q() + 4);
    if (weighted) {
        den.insert(den.end(), {Cplx{3.0 / 5.0, 0.0}, Cplx{4.0 / 5.0, 0.0},
                               Cplx{6.0 / 5.0, 0.0}, Cplx{7.0 / 5.0, 0.0}});
    } else {
        den.insert(den.end(), {Cplx{1.0 / 5.0, 0.0}, Cplx{2.0 / 5.0, 0.0},
                               Cplx{3.0 / 5.0, 0.0}, Cplx{4.0 / 5.0, 0.0}});
    }
    for (const Cplx& b : spec.denominator) {
        for (int j = 0; j < 5; ++j) {
            den.push_back(fifth_shift(b, base + j));
        }
    }
    return PFQSpec(std::move(num), std::move(den));
}

FoxWrightSpec transformed_fox_wright_spec(const FoxWrightSpec& spec, bool weighted) {
    std::vector<FoxWrightParam> num;
    num.reserve(spec.p());
    for (const FoxWrightParam& p : spec.numerator) {
        const Cplx a = weighted ? p.a + 2.0 * p.weight : p.a;
        num.push_back({a, 5.0 * p.weight});
    }
    std::vector<FoxWrightParam> den;
    den.reserve(spec.q() + 4);
    if (weighted) {
        den.push_back({Cplx{3.0 / 5.0, 0.0}, 1.0});
        den.push_back({Cplx{4.0 / 5.0, 0.0}, 1.0});
        den.push_back({Cplx{6.0 / 5.0, 0.0}, 1.0});
        den.push_back({Cplx{7.0 / 5.0, 0.0}, 1.0});
    } else {
        for (int j = 1; j <= 4; ++j) {
            den.push_back({Cplx{j / 5.0, 0.0}, 1.0});
        }
    }
    for (const FoxWrightParam& p : spec.denominator) {
        const Cplx b = weighted ? p.a + 2.0 * p.weight : p.a;
        den.push_back({b, 5.0 * p.weight});
    }
    return FoxWrightSpec(std::move(num), std::move(den));
}

Cplx transformed_pfq_argument(const PFQSpec& spec, const Cplx& c, const Cplx& x) {
    const int exponent = 1 + static_cast<int>(spec.q()) - static_cast<int>(spec.p());
    const Cplx scale = int_pow(Cplx{5.0, 0.0}, exponent);
    return int_pow(c * x * x / scale, 5);
}

Cplx transformed_fox_wright_argument(const Cplx& c, const Cplx& x) {
    return int_pow(c * x * x / 5.0, 5);
}

SeriesEvaluation theorem_lhs(const TheoremInstance& inst, const ToleranceConfig& tol) {
    const bool weighted = is_weighted(inst.id);
    SeriesEvaluation out;
    Cplx total{0.0, 0.0};
    for (int k = 0; k < kSectionOrder; ++k) {
        const Cplx rotated = inst.x * fifth_root(k);
        const Cplx z = inst.c * rotated * rotated;
        const SeriesEvaluation part = evaluate_member(inst, z, tol);
        const Cplx weight = weighted ? fifth_root(k) : Cplx{1.0, 0.0};
        total += weight * part.value;
        out.terms_used += part.terms_used;
        out.tail_estimate += part.tail_estimate;
        out.low_confidence = out.low_confidence || part.low_confidence;
        if (part.status != SeriesStatus::converged &&
            out.status == SeriesStatus::converged) {
            out.status = part.status;
        }
    }
    out.value = total;
    return out;
}

SeriesEvaluation theorem_rhs(const TheoremInstance& inst, const ToleranceConfig& tol) {
    const bool weighted = is_weighted(inst.id);

    if (is_pfq(inst.id)) {
        const PFQSpec& spec = std::get<PFQSpec>(inst.spec);
        const PFQSpec transformed = transformed_pfq_spec(spec, weighted);
        const Cplx z = transformed_pfq_argument(spec, inst.c, inst.x);

        const ConvergenceDiagnostics diag = classify_pfq(transformed, z);
        if (diag.classification == SeriesDomain::divergent) {
            SeriesEvaluation out;
            out.status = SeriesStatus::diverging;
            return out;
        }

        Cplx prefactor{5.0, 0.0};
        if (weighted) {
            prefactor = 2.5 * inst.c * inst.c * int_pow(inst.x, 4);
            for (const Cplx& a : spec.numerator) prefactor *= pochhammer(a, Cplx{2.0, 0.0});
            for (const Cplx& b : spec.denominator) prefactor /= pochhammer(b, Cplx{2.0, 0.0});
        }
        return scaled(eval_pfq(transformed, z, tol), prefactor);
    }

    const FoxWrightSpec& spec = std::get<FoxWrightSpec>(inst.spec);
    const FoxWrightSpec transformed = transformed_fox_wright_spec(spec, weighted);
    const Cplx z = transformed_fox_wright_argument(inst.c, inst.x);

    const ConvergenceDiagnostics diag = classify_fox_wright(transformed, z);
    if (diag.classification == SeriesDomain::divergent ||
        diag.classification == SeriesDomain::case_ii_iii_unsupported) {
        SeriesEvaluation out;
        out.status = SeriesStatus::diverging;
        return out;
    }

    const bool normalized = inst.id == TheoremId::psistar_even ||
                            inst.id == TheoremId::psistar_weighted;
    Cplx prefactor{5.0, 0.0};
    if (weighted) {
        prefactor = 2.5 * inst.c * inst.c * int_pow(inst.x, 4);
        if (normalized) {
            for (const FoxWrightParam& p : spec.numerator) {
                prefactor *= pochhammer(p.a, Cplx{2.0 * p.weight, 0.0});
            }
            for (const FoxWrightParam& p : spec.denominator) {
                prefactor /= pochhammer(p.a, Cplx{2.0 * p.weight, 0.0});
            }
        } else {
            prefactor *= std::exp(log_gamma(Cplx{3.0 / 5.0, 0.0}) +
                                  log_gamma(Cplx{4.0 / 5.0, 0.0}) +
                                  log_gamma(Cplx{6.0 / 5.0, 0.0}) +
                                  log_gamma(Cplx{7.0 / 5.0, 0.0}));
        }
    } else if (!normalized) {
        Cplx log_prod{0.0, 0.0};
        for (int j = 1; j <= 4; ++j) {
            log_prod += log_gamma(Cplx{j / 5.0, 0.0});
        }
        prefactor *= std::exp(log_prod);
    }

    const SeriesEvaluation series =
        normalized ? eval_fox_wright_normalized(transformed, z, tol)
                   : eval_fox_wright(transformed, z, tol);
    return scaled(series, prefactor);
}

IdentityResidual check_identity(const TheoremInstance& inst,
                                const ToleranceConfig& tol,
                                double identity_tol) {
    IdentityResidual out;

    // The theorem's own domain condition for pfq variants with p = q+1.
    if (is_pfq(inst.id)) {
        const PFQSpec& spec = std::get<PFQSpec>(inst.spec);
        if (spec.p() == spec.q() + 1) {
            const Cplx z = transformed_pfq_argument(spec, inst.c, inst.x);
            if (std::abs(z) >= 1.0 - kDomainTol) {
                out.lhs_status = SeriesStatus::diverging;
                out.rhs_status = SeriesStatus::diverging;
                out.verdict = Verdict::not_evaluable;
                return out;
            }
        }
    }

    const SeriesEvaluation lhs = theorem_lhs(inst, tol);
    const SeriesEvaluation rhs = theorem_rhs(inst, tol);

    out.lhs = lhs.value;
    out.rhs = rhs.value;
    out.lhs_status = lhs.status;
    out.rhs_status = rhs.status;
    out.residual = residual_metric(lhs.value, rhs.value);

    if (lhs.status != SeriesStatus::converged || rhs.status != SeriesStatus::converged) {
        out.verdict = Verdict::not_evaluable;
    } else if (out.residual <= identity_tol) {
        out.verdict = Verdict::pass;
    } else {
        out.verdict = Verdict::fail;
    }
    return out;
}

} // namespace quintsect
