#ifndef QUINTSECT_POCHHAMMER_HPP
#define QUINTSECT_POCHHAMMER_HPP

#include "quintsect/complex_utils.hpp"

namespace quintsect {

// One Pochhammer evaluation (lambda)_nu. Branch selection treats a component
// as an integer when it is within kIntegerTol of one.
struct PochhammerQuery {
    Cplx lambda;
    Cplx nu;
};

// (lambda)_nu = Gamma(lambda+nu) / Gamma(lambda) with the exact integer
// branches taken first:
//   (i)   nu = 0                                   -> 1   (including (0)_0)
//   (ii)  nu = n in N, lambda not in Z_{<=0}       -> lambda(lambda+1)...(lambda+n-1)
//   (iii) lambda = -k, nu = n, 0 <= n <= k         -> (-1)^n k!/(k-n)!
//   (iv)  lambda = -k, nu = n > k                  -> 0
//   (v)   nu = -n, lambda not an integer           -> (-1)^n / (1-lambda)_n
// and the gamma quotient otherwise.
//
// Throws PoleError when the quotient itself is a pole (numerator gamma at a
// pole, denominator finite) and UndefinedQuotientError when both gammas sit
// at poles with no integer branch applying.
Cplx pochhammer(const PochhammerQuery& q);

inline Cplx pochhammer(const Cplx& lambda, const Cplx& nu) {
    return pochhammer(PochhammerQuery{lambda, nu});
}

// log of (lambda)_nu, on whatever branch keeps exp(log_pochhammer) exact.
// A value of exactly zero is reported with real part -infinity. Same error
// behaviour as pochhammer.
Cplx log_pochhammer(const Cplx& lambda, const Cplx& nu);

// One Gauss multiplication check (b)_{mn} vs m^{mn} prod_j ((b+j-1)/m)_n.
struct MultiplicationQuery {
    Cplx b;
    int m = 1; // positive
    int n = 0; // non-negative
};

// Residual |lhs - rhs| / (1 + max(|lhs|, |rhs|)) between the two sides of the
// multiplication formula, each side computed through its own pochhammer
// calls. Propagates pochhammer errors.
double gauss_multiplication_residual(const MultiplicationQuery& q);

} // namespace quintsect

#endif
