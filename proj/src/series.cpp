#include "quintsect/series.hpp"

#include <cmath>
#include <stdexcept>

#include "quintsect/errors.hpp"
#include "quintsect/roots.hpp"

namespace quintsect {

void ToleranceConfig::validate() const {
    if (!(rel_tol > 0.0)) throw SpecError("ToleranceConfig: rel_tol must be positive");
    if (consecutive_small < 1) throw SpecError("ToleranceConfig: consecutive_small must be >= 1");
    if (max_terms < 10) throw SpecError("ToleranceConfig: max_terms must be >= 10");
}

const char* to_string(SeriesStatus s) {
    switch (s) {
        case SeriesStatus::converged: return "converged";
        case SeriesStatus::max_terms_exceeded: return "max-terms-exceeded";
        case SeriesStatus::term_pole: return "term-pole";
        case SeriesStatus::diverging: return "diverging";
    }
    return "unknown";
}

namespace detail {

SeriesEvaluation sum_series(const std::function<Cplx(std::int64_t)>& term,
                            const ToleranceConfig& tol,
                            std::int64_t hard_stop) {
    tol.validate();

    SeriesEvaluation out;
    Cplx partial{0.0, 0.0};
    int small_run = 0;
    int growth_run = 0;
    double prev_mag = 0.0;
    double last_mag = 0.0;

    for (std::int64_t n = 0; n < tol.max_terms; ++n) {
        Cplx t;
        try {
            t = term(n);
        } catch (const TermPoleSignal& sig) {
            out.value = partial;
            out.terms_used = sig.index;
            out.tail_estimate = last_mag * tol.consecutive_small;
            out.status = SeriesStatus::term_pole;
            return out;
        }

        partial += t;
        const double mag = std::abs(t);
        out.terms_used = n + 1;

        if (!std::isfinite(mag) || !std::isfinite(std::abs(partial))) {
            out.value = partial;
            out.tail_estimate = mag;
            out.status = SeriesStatus::diverging;
            return out;
        }

        if (hard_stop >= 0 && n == hard_stop) {
            out.value = partial;
            out.tail_estimate = 0.0;
            out.status = SeriesStatus::converged;
            return out;
        }

        // Convergence: consecutive_small successive terms below threshold.
        // The threshold carries a 1/consecutive_small factor so that
        // tail_estimate = |last| * consecutive_small respects the converged
        // invariant.
        const double threshold =
            tol.rel_tol * (1.0 + std::abs(partial)) / tol.consecutive_small;
        if (mag <= threshold) {
            if (++small_run >= tol.consecutive_small && hard_stop < 0) {
                out.value = partial;
                out.tail_estimate = mag * tol.consecutive_small;
                out.status = SeriesStatus::converged;
                return out;
            }
        } else {
            small_run = 0;
        }

        // Divergence heuristic: strictly growing magnitudes for 20
        // consecutive terms past n = 50.
        if (n > 50 && mag > prev_mag && mag > 0.0) {
            if (++growth_run >= 20) {
                out.value = partial;
                out.tail_estimate = mag;
                out.status = SeriesStatus::diverging;
                return out;
            }
        } else {
            growth_run = 0;
        }
        prev_mag = mag;
        last_mag = mag;
    }

    out.value = partial;
    out.tail_estimate = last_mag * tol.consecutive_small;
    out.status = SeriesStatus::max_terms_exceeded;
    return out;
}

} // namespace detail

SeriesEvaluation sum_power_series(const BoundedSequence& phi,
                                  const MultisectionArgs& args,
                                  const ToleranceConfig& tol) {
    if (!phi.phi) throw SpecError("sum_power_series: empty sequence");
    const Cplx ratio_base = args.c * args.x * args.x; // c * x^2
    return detail::sum_series(
        [&, base = Cplx{1.0, 0.0}](std::int64_t r) mutable {
            // base = c^r x^{2r} / r!, advanced multiplicatively.
            const Cplx t = phi.phi(r) * base;
            base *= ratio_base / static_cast<double>(r + 1);
            return t;
        },
        tol);
}

namespace {

SeriesEvaluation combine_weighted_constituents(
    const BoundedSequence& phi, const MultisectionArgs& args,
    const ToleranceConfig& tol, bool weighted) {
    SeriesEvaluation out;
    Cplx total{0.0, 0.0};
    for (int k = 0; k < kSectionOrder; ++k) {
        MultisectionArgs rotated{args.c, args.x * fifth_root(k)};
        const SeriesEvaluation part = sum_power_series(phi, rotated, tol);
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

SeriesEvaluation decimated_sum(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol,
                               int offset) {
    if (!phi.phi) throw SpecError("decimated series: empty sequence");
    // N * sum_r phi(Nr+offset) c^{Nr+offset} x^{2(Nr+offset)} / (Nr+offset)!
    // for section order N, with the factorial advanced by ratio recurrence;
    // the factor N rides on the leading term so the convergence test sees the
    // final scale.
    constexpr std::int64_t order = kSectionOrder;
    const Cplx z2 = args.x * args.x;
    Cplx lead = static_cast<double>(order) * int_pow(args.c, offset) * int_pow(z2, offset);
    for (int j = 2; j <= offset; ++j) lead /= static_cast<double>(j);
    const Cplx step = int_pow(args.c, order) * int_pow(z2, order);

    return detail::sum_series(
        [&, base = lead](std::int64_t r) mutable {
            const Cplx t = phi.phi(order * r + offset) * base;
            Cplx denom{1.0, 0.0};
            const std::int64_t m = order * r + offset;
            for (std::int64_t j = m + 1; j <= m + order; ++j) {
                denom *= static_cast<double>(j);
            }
            base *= step / denom;
            return t;
        },
        tol);
}

} // namespace

SeriesEvaluation theorem21_lhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol) {
    return combine_weighted_constituents(phi, args, tol, /*weighted=*/false);
}

SeriesEvaluation theorem21_rhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol) {
    return decimated_sum(phi, args, tol, 0);
}

SeriesEvaluation theorem22_lhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol) {
    return combine_weighted_constituents(phi, args, tol, /*weighted=*/true);
}

SeriesEvaluation theorem22_rhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol) {
    return decimated_sum(phi, args, tol, 2);
}

} // namespace quintsect
