#include "quintsect/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "quintsect/errors.hpp"
#include "quintsect/gamma.hpp"
#include "quintsect/pochhammer.hpp"

namespace quintsect {
namespace {

constexpr double kBoundaryTol = 1e-12;

bool nearly_same(const Cplx& a, const Cplx& b) {
    return std::abs(a - b) <= 1e-14 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Cancel numerator/denominator parameters that are equal (pFq) or equal as
// (value, weight) pairs (Fox-Wright), so shared factors never evaluate a
// 0/0 gamma quotient.
std::pair<std::vector<Cplx>, std::vector<Cplx>> cancelled_lists(const PFQSpec& spec) {
    std::vector<Cplx> num = spec.numerator;
    std::vector<Cplx> den = spec.denominator;
    for (std::size_t i = 0; i < num.size();) {
        bool erased = false;
        for (std::size_t j = 0; j < den.size(); ++j) {
            if (nearly_same(num[i], den[j])) {
                num.erase(num.begin() + static_cast<std::ptrdiff_t>(i));
                den.erase(den.begin() + static_cast<std::ptrdiff_t>(j));
                erased = true;
                break;
            }
        }
        if (!erased) ++i;
    }
    return {std::move(num), std::move(den)};
}

std::pair<std::vector<FoxWrightParam>, std::vector<FoxWrightParam>> cancelled_lists(
    const FoxWrightSpec& spec) {
    std::vector<FoxWrightParam> num = spec.numerator;
    std::vector<FoxWrightParam> den = spec.denominator;
    for (std::size_t i = 0; i < num.size();) {
        bool erased = false;
        for (std::size_t j = 0; j < den.size(); ++j) {
            if (nearly_same(num[i].a, den[j].a) &&
                std::abs(num[i].weight - den[j].weight) <= 1e-14) {
                num.erase(num.begin() + static_cast<std::ptrdiff_t>(i));
                den.erase(den.begin() + static_cast<std::ptrdiff_t>(j));
                erased = true;
                break;
            }
        }
        if (!erased) ++i;
    }
    return {std::move(num), std::move(den)};
}

// Smallest m >= 0 with some numerator parameter equal to -m, if any; such a
// series terminates after m+1 terms.
std::optional<std::int64_t> terminating_index(const std::vector<Cplx>& numerator) {
    std::optional<std::int64_t> result;
    for (const Cplx& a : numerator) {
        if (is_nonpositive_integer(a)) {
            const std::int64_t m = -nearest_integer(a);
            if (!result || m < *result) result = m;
        }
    }
    return result;
}

} // namespace

PFQSpec::PFQSpec(std::vector<Cplx> num, std::vector<Cplx> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    for (const Cplx& b : denominator) {
        if (is_nonpositive_integer(b)) {
            throw SpecError("PFQSpec: denominator parameter is a nonpositive integer");
        }
    }
}

FoxWrightSpec::FoxWrightSpec(std::vector<FoxWrightParam> num,
                             std::vector<FoxWrightParam> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    for (const FoxWrightParam& p : numerator) {
        if (p.weight == 0.0) throw SpecError("FoxWrightSpec: numerator weight A_i = 0");
    }
    for (const FoxWrightParam& p : denominator) {
        if (p.weight == 0.0) throw SpecError("FoxWrightSpec: denominator weight B_j = 0");
    }
}

const char* to_string(SeriesDomain d) {
    switch (d) {
        case SeriesDomain::entire: return "entire";
        case SeriesDomain::unit_disk: return "unit-disk";
        case SeriesDomain::boundary_abs: return "boundary-abs";
        case SeriesDomain::boundary_cond: return "boundary-cond";
        case SeriesDomain::divergent: return "divergent";
        case SeriesDomain::case_ii_iii_unsupported: return "case-II-III-unsupported";
    }
    return "unknown";
}

ConvergenceDiagnostics classify_pfq(const PFQSpec& spec, const Cplx& z) {
    ConvergenceDiagnostics diag;
    Cplx sum_num{0.0, 0.0};
    Cplx sum_den{0.0, 0.0};
    for (const Cplx& a : spec.numerator) sum_num += a;
    for (const Cplx& b : spec.denominator) sum_den += b;

    const double p = static_cast<double>(spec.p());
    const double q = static_cast<double>(spec.q());
    diag.omega = sum_den - sum_num;
    diag.delta_star = q - p;
    diag.small_delta_star = 1.0;
    diag.mu_star = diag.omega + (p - q) / 2.0;
    diag.sigma_star = 1.0 - diag.delta_star;

    if (terminating_index(spec.numerator)) {
        diag.classification = SeriesDomain::entire;
        return diag;
    }
    if (spec.p() <= spec.q()) {
        diag.classification = SeriesDomain::entire;
        return diag;
    }
    if (spec.p() == spec.q() + 1) {
        const double mod = std::abs(z);
        if (mod < 1.0 - kBoundaryTol) {
            diag.classification = SeriesDomain::unit_disk;
        } else if (mod <= 1.0 + kBoundaryTol) {
            const double re_omega = diag.omega.real();
            if (re_omega > 0.0) {
                diag.classification = SeriesDomain::boundary_abs;
            } else if (re_omega > -1.0 && std::abs(z - Cplx{1.0, 0.0}) > kBoundaryTol) {
                diag.classification = SeriesDomain::boundary_cond;
            } else {
                diag.classification = SeriesDomain::divergent;
            }
        } else {
            diag.classification = SeriesDomain::divergent;
        }
        return diag;
    }
    diag.classification = SeriesDomain::divergent;
    return diag;
}

ConvergenceDiagnostics classify_fox_wright(const FoxWrightSpec& spec, const Cplx& z) {
    ConvergenceDiagnostics diag;
    double sum_a_weights = 0.0;
    double sum_b_weights = 0.0;
    double log_delta = 0.0;
    Cplx sum_a{0.0, 0.0};
    Cplx sum_b{0.0, 0.0};
    for (const FoxWrightParam& p : spec.numerator) {
        sum_a_weights += p.weight;
        log_delta -= p.weight * std::log(std::abs(p.weight));
        sum_a += p.a;
    }
    for (const FoxWrightParam& p : spec.denominator) {
        sum_b_weights += p.weight;
        log_delta += p.weight * std::log(std::abs(p.weight));
        sum_b += p.a;
    }
    const double p = static_cast<double>(spec.p());
    const double q = static_cast<double>(spec.q());
    diag.delta_star = sum_b_weights - sum_a_weights;
    diag.small_delta_star = std::exp(log_delta);
    diag.mu_star = sum_b - sum_a + (p - q) / 2.0;
    diag.sigma_star = 1.0 - diag.delta_star;

    if (diag.delta_star > -1.0 + kBoundaryTol) {
        diag.classification = SeriesDomain::entire;
    } else if (std::abs(diag.delta_star + 1.0) <= kBoundaryTol) {
        const double mod = std::abs(z);
        const double edge = diag.small_delta_star;
        if (mod < edge * (1.0 - kBoundaryTol)) {
            diag.classification = SeriesDomain::unit_disk;
        } else if (mod <= edge * (1.0 + kBoundaryTol) && diag.mu_star.real() > 0.5) {
            diag.classification = SeriesDomain::boundary_abs;
        } else {
            diag.classification = SeriesDomain::case_ii_iii_unsupported;
        }
    } else {
        diag.classification = SeriesDomain::case_ii_iii_unsupported;
    }
    return diag;
}

SeriesEvaluation eval_pfq(const PFQSpec& spec, const Cplx& z,
                          const ToleranceConfig& tol) {
    auto [num, den] = cancelled_lists(spec);

    if (z == Cplx{0.0, 0.0}) {
        return SeriesEvaluation{{1.0, 0.0}, 1, 0.0, SeriesStatus::converged, false};
    }

    ToleranceConfig effective = tol;
    bool low_confidence = false;
    if (num.size() == den.size() + 1 &&
        std::abs(std::abs(z) - 1.0) <= kBoundaryTol &&
        !terminating_index(num)) {
        // Best-effort boundary summation: raise the cap, flag the result.
        effective.max_terms = tol.max_terms * 10;
        low_confidence = true;
    }

    const std::optional<std::int64_t> stop = terminating_index(num);
    SeriesEvaluation out = detail::sum_series(
        [&, term = Cplx{1.0, 0.0}](std::int64_t n) mutable {
            const Cplx current = term;
            Cplx ratio{1.0, 0.0};
            const double dn = static_cast<double>(n);
            for (const Cplx& a : num) ratio *= a + dn;
            for (const Cplx& b : den) ratio /= b + dn;
            term = current * ratio * z / (dn + 1.0);
            return current;
        },
        effective, stop.value_or(-1));
    out.low_confidence = low_confidence;
    return out;
}

SeriesEvaluation eval_fox_wright(const FoxWrightSpec& spec, const Cplx& z,
                                 const ToleranceConfig& tol) {
    auto [num, den] = cancelled_lists(spec);

    const bool zero_z = (z == Cplx{0.0, 0.0});
    const Cplx log_z = zero_z ? Cplx{0.0, 0.0} : std::log(z);

    auto term_at = [&](std::int64_t n) {
        const double dn = static_cast<double>(n);
        Cplx log_term{0.0, 0.0};
        for (const FoxWrightParam& p : num) {
            const Cplx arg = p.a + p.weight * dn;
            if (is_nonpositive_integer(arg)) throw TermPoleSignal{n};
            log_term += log_gamma(arg);
        }
        for (const FoxWrightParam& p : den) {
            const Cplx arg = p.a + p.weight * dn;
            if (is_nonpositive_integer(arg)) {
                throw SpecError(
                    "eval_fox_wright: denominator parameter b_j + B_j*n at a "
                    "nonpositive integer");
            }
            log_term -= log_gamma(arg);
        }
        log_term += dn * log_z - log_gamma(Cplx{dn + 1.0, 0.0});
        return std::exp(log_term);
    };

    if (zero_z) {
        SeriesEvaluation out;
        try {
            out.value = term_at(0);
        } catch (const TermPoleSignal& sig) {
            out.status = SeriesStatus::term_pole;
            out.terms_used = sig.index;
            return out;
        }
        out.terms_used = 1;
        return out;
    }
    return detail::sum_series(term_at, tol);
}

SeriesEvaluation eval_fox_wright_normalized(const FoxWrightSpec& spec, const Cplx& z,
                                            const ToleranceConfig& tol) {
    auto [num, den] = cancelled_lists(spec);

    for (const FoxWrightParam& p : num) {
        if (is_nonpositive_integer(p.a)) {
            throw SpecError("eval_fox_wright_normalized: a_i at a gamma pole");
        }
    }
    for (const FoxWrightParam& p : den) {
        if (is_nonpositive_integer(p.a)) {
            throw SpecError("eval_fox_wright_normalized: b_j at a gamma pole");
        }
    }

    if (z == Cplx{0.0, 0.0}) {
        return SeriesEvaluation{{1.0, 0.0}, 1, 0.0, SeriesStatus::converged, false};
    }
    const Cplx log_z = std::log(z);

    return detail::sum_series(
        [&](std::int64_t n) {
            const double dn = static_cast<double>(n);
            Cplx log_term{0.0, 0.0};
            for (const FoxWrightParam& p : num) {
                const Cplx shift{p.weight * dn, 0.0};
                if (is_nonpositive_integer(p.a + shift)) throw TermPoleSignal{n};
                const Cplx lp = log_pochhammer(p.a, shift);
                if (lp.real() == -std::numeric_limits<double>::infinity()) {
                    return Cplx{0.0, 0.0};
                }
                log_term += lp;
            }
            for (const FoxWrightParam& p : den) {
                const Cplx shift{p.weight * dn, 0.0};
                if (is_nonpositive_integer(p.a + shift)) {
                    throw SpecError(
                        "eval_fox_wright_normalized: denominator parameter "
                        "b_j + B_j*n at a nonpositive integer");
                }
                log_term -= log_pochhammer(p.a, shift);
            }
            log_term += dn * log_z - log_gamma(Cplx{dn + 1.0, 0.0});
            return std::exp(log_term);
        },
        tol);
}

} // namespace quintsect
