#ifndef QUINTSECT_HYPERGEOM_HPP
#define QUINTSECT_HYPERGEOM_HPP

#include <vector>

#include "quintsect/complex_utils.hpp"
#include "quintsect/series.hpp"

namespace quintsect {

// Parameter lists of a pFq series. Denominator parameters at nonpositive
// integers are rejected at construction.
struct PFQSpec {
    std::vector<Cplx> numerator;
    std::vector<Cplx> denominator;

    PFQSpec() = default;
    PFQSpec(std::vector<Cplx> num, std::vector<Cplx> den);

    std::size_t p() const { return numerator.size(); }
    std::size_t q() const { return denominator.size(); }
};

// One (a, A) pair of a Fox-Wright series.
struct FoxWrightParam {
    Cplx a{1.0, 0.0};
    double weight = 1.0;
};

// Parameter lists of a Fox-Wright psi (or normalized psi*) series. Zero
// weights are rejected at construction; denominator parameters hitting a
// gamma pole at some term index are rejected lazily during summation.
struct FoxWrightSpec {
    std::vector<FoxWrightParam> numerator;
    std::vector<FoxWrightParam> denominator;

    FoxWrightSpec() = default;
    FoxWrightSpec(std::vector<FoxWrightParam> num, std::vector<FoxWrightParam> den);

    std::size_t p() const { return numerator.size(); }
    std::size_t q() const { return denominator.size(); }
};

enum class SeriesDomain {
    entire,
    unit_disk,
    boundary_abs,
    boundary_cond,
    divergent,
    case_ii_iii_unsupported,
};

const char* to_string(SeriesDomain d);

// Classification of a series/argument pair. omega is meaningful for pFq;
// delta_star (capital Delta*), small_delta_star (delta*), mu_star and
// sigma_star = 1 - delta_star for Fox-Wright. classify_pfq fills both views
// (a pFq is the all-weights-one Fox-Wright).
struct ConvergenceDiagnostics {
    Cplx omega{0.0, 0.0};
    double delta_star = 0.0;
    double small_delta_star = 1.0;
    Cplx mu_star{0.0, 0.0};
    double sigma_star = 1.0;
    SeriesDomain classification = SeriesDomain::entire;
};

// p <= q -> entire; p = q+1: |z| < 1 unit-disk, |z| = 1 with Re(omega) > 0
// boundary-abs, z != 1 with -1 < Re(omega) <= 0 boundary-cond; otherwise
// divergent. A terminating numerator (nonpositive-integer parameter) makes
// the series a polynomial and classifies as entire.
ConvergenceDiagnostics classify_pfq(const PFQSpec& spec, const Cplx& z);

// Series-domain cases for psi: Delta* > -1 entire; Delta* = -1 with
// |z| < delta* the unit-disk analogue; Delta* = -1, |z| = delta*,
// Re(mu*) > 1/2 boundary-abs; every other regime needs the contour
// representation and reports case-II-III-unsupported.
ConvergenceDiagnostics classify_fox_wright(const FoxWrightSpec& spec, const Cplx& z);

// sum_n (prod (a_i)_n / prod (b_j)_n) z^n / n! by term ratio recurrence.
// Terminates exactly when a numerator parameter is a nonpositive integer.
// Boundary points (p = q+1, |z| = 1) are attempted with max_terms raised
// 10x and flagged low_confidence.
SeriesEvaluation eval_pfq(const PFQSpec& spec, const Cplx& z,
                          const ToleranceConfig& tol = {});

// sum_n (prod Gamma(a_i + A_i n) / prod Gamma(b_j + B_j n)) z^n / n!, each
// term assembled in log-gamma space. A numerator gamma pole at term n yields
// status term_pole with terms_used = n.
SeriesEvaluation eval_fox_wright(const FoxWrightSpec& spec, const Cplx& z,
                                 const ToleranceConfig& tol = {});

// psi* = psi / (prod Gamma(a_i) / prod Gamma(b_j)), summed directly with
// Pochhammer-ratio terms (a_i)_{A_i n} / (b_j)_{B_j n}; psi*(0) = 1.
SeriesEvaluation eval_fox_wright_normalized(const FoxWrightSpec& spec, const Cplx& z,
                                            const ToleranceConfig& tol = {});

} // namespace quintsect

#endif
