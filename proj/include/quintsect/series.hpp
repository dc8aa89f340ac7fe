#ifndef QUINTSECT_SERIES_HPP
#define QUINTSECT_SERIES_HPP

#include <cstdint>
#include <functional>

#include "quintsect/complex_utils.hpp"

namespace quintsect {

// Truncation control shared by every summed series in the library.
// QUINTSECT_MAX_TERMS (CLI) overrides max_terms.
struct ToleranceConfig {
    double rel_tol = 1e-14;
    int consecutive_small = 3;
    std::int64_t max_terms = 10000;

    void validate() const;
};

enum class SeriesStatus {
    converged,
    max_terms_exceeded,
    term_pole,
    diverging,
};

const char* to_string(SeriesStatus s);

// Result of summing one series. tail_estimate is
// |last included term| * consecutive_small, a crude but monotone bound;
// when status == converged it is at most rel_tol * (1 + |value|).
// For term_pole, terms_used is the offending term index. low_confidence marks
// best-effort boundary evaluations (|z| = 1, conditional convergence).
struct SeriesEvaluation {
    Cplx value{0.0, 0.0};
    std::int64_t terms_used = 0;
    double tail_estimate = 0.0;
    SeriesStatus status = SeriesStatus::converged;
    bool low_confidence = false;
};

// Thrown by term/sequence callbacks to signal a pole at a specific index;
// converted by the summation loop into SeriesStatus::term_pole.
struct TermPoleSignal {
    std::int64_t index = 0;
};

// A bounded coefficient sequence phi: N_0 -> C with a declared bound B such
// that |phi(r)| <= B. The bound is declarative (tests spot-check it); the
// engine rejects unbounded inputs through divergence detection instead.
struct BoundedSequence {
    std::function<Cplx(std::int64_t)> phi;
    double bound = 1.0;
};

// The (c, x) pair of the multisection series sum_r phi(r) c^r x^{2r} / r!.
struct MultisectionArgs {
    Cplx c{1.0, 0.0};
    Cplx x{0.0, 0.0};
};

namespace detail {
// Shared truncation loop: sums term(n) for n = 0, 1, ... until
// consecutive_small successive terms fall below rel_tol*(1+|partial|)
// (scaled so the tail estimate obeys the converged invariant), the term cap
// is hit, or terms grow monotonically for 20 indices past n = 50.
// hard_stop >= 0 sums exactly hard_stop + 1 terms (terminating series).
SeriesEvaluation sum_series(const std::function<Cplx(std::int64_t)>& term,
                            const ToleranceConfig& tol,
                            std::int64_t hard_stop = -1);
} // namespace detail

// sum_r phi(r) c^r x^{2r} / r!, with the r! handled by term-to-term ratio
// recurrence.
SeriesEvaluation sum_power_series(const BoundedSequence& phi,
                                  const MultisectionArgs& args,
                                  const ToleranceConfig& tol = {});

// Five-fold sums of sum_power_series over the rotated points x*alpha^k and
// their decimated right-hand sides. Constituents are evaluated independently
// and combined in k = 0..4 order; any non-converged constituent poisons the
// combined status. Combined results report the sum of constituent tails and
// the total term count.
SeriesEvaluation theorem21_lhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol = {});

// 5 * sum_r phi(5r) c^{5r} x^{10r} / (5r)!.
SeriesEvaluation theorem21_rhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol = {});

// Weighted variant: sum_k alpha^k * (series at x*alpha^k).
SeriesEvaluation theorem22_lhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol = {});

// 5 * sum_r phi(5r+2) c^{5r+2} x^{10r+4} / (5r+2)!.
SeriesEvaluation theorem22_rhs(const BoundedSequence& phi,
                               const MultisectionArgs& args,
                               const ToleranceConfig& tol = {});

} // namespace quintsect

#endif
