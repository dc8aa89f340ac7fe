#ifndef QUINTSECT_IDENTITIES_HPP
#define QUINTSECT_IDENTITIES_HPP

#include <string>
#include <variant>

#include "quintsect/hypergeom.hpp"
#include "quintsect/series.hpp"

namespace quintsect {

// The six additive theorems: even variants sum F(c (x alpha^k)^2) with unit
// weights, weighted variants with weights alpha^k, for F one of psi, psi*,
// pFq.
enum class TheoremId {
    psi_even,
    psi_weighted,
    psistar_even,
    psistar_weighted,
    pfq_even,
    pfq_weighted,
};

const char* to_string(TheoremId id);
TheoremId theorem_id_from_string(const std::string& name);

// One verifiable theorem instance: a parameter list plus the (c, x) pair.
// The pfq variants own their domain condition: for p = q+1 the transformed
// argument must satisfy |(c x^2 / 5^{1+q-p})^5| < 1.
struct TheoremInstance {
    TheoremId id = TheoremId::pfq_even;
    std::variant<PFQSpec, FoxWrightSpec> spec;
    Cplx c{1.0, 0.0};
    Cplx x{0.0, 0.0};
};

enum class Verdict { pass, fail, not_evaluable };

const char* to_string(Verdict v);

// Both sides of one identity with the scale-aware residual.
// verdict == pass iff both statuses converged and residual <= identity_tol.
struct IdentityResidual {
    Cplx lhs{0.0, 0.0};
    Cplx rhs{0.0, 0.0};
    double residual = 0.0;
    SeriesStatus lhs_status = SeriesStatus::converged;
    SeriesStatus rhs_status = SeriesStatus::converged;
    Verdict verdict = Verdict::not_evaluable;
};

// Transformed parameter lists of the right-hand sides, exposed for
// structural checks. The pfq lists are built with exact checks on the
// shifted entries (b + j vs multiples of 5) before any division by 5.
PFQSpec transformed_pfq_spec(const PFQSpec& spec, bool weighted);
FoxWrightSpec transformed_fox_wright_spec(const FoxWrightSpec& spec, bool weighted);

// (c x^2 / 5^{1+q-p})^5 for pfq variants, (c x^2 / 5)^5 for psi variants.
Cplx transformed_pfq_argument(const PFQSpec& spec, const Cplx& c, const Cplx& x);
Cplx transformed_fox_wright_argument(const Cplx& c, const Cplx& x);

// Five-fold weighted sum over the rotated arguments; the direct side.
SeriesEvaluation theorem_lhs(const TheoremInstance& inst, const ToleranceConfig& tol = {});

// Transformed single series with its printed prefactor; the derived side.
SeriesEvaluation theorem_rhs(const TheoremInstance& inst, const ToleranceConfig& tol = {});

// Evaluates both sides independently. The LHS is the ground truth (a sum of
// directly summed series with no parameter transformation); a converged
// mismatch is reported as fail with the measured residual, never adjusted.
IdentityResidual check_identity(const TheoremInstance& inst,
                                const ToleranceConfig& tol = {},
                                double identity_tol = 1e-9);

} // namespace quintsect

#endif
