#ifndef QUINTSECT_ORACLES_HPP
#define QUINTSECT_ORACLES_HPP

#include "quintsect/complex_utils.hpp"

namespace quintsect {

// Reference implementations, deliberately independent of the hypergeometric
// evaluators so representation tests are non-circular. Trigonometric and
// inverse-trigonometric values come from the standard complex overloads
// (exponential/logarithmic formulas, principal branches).

// Complete elliptic integral K(k) by arithmetic-geometric-mean iteration,
// modulus convention K(k) = integral_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t).
// Requires Re(1 - k^2) > 0.
Cplx agm_elliptic_k(const Cplx& modulus);

// Complete elliptic integral E(k) from the AGM c_n sums, same convention and
// domain as agm_elliptic_k.
Cplx agm_elliptic_e(const Cplx& modulus);

// Maclaurin series of erf; entire, accurate to ~1e-12 for |z| <= 4.
Cplx error_function(const Cplx& z);

// Lower incomplete gamma gamma(a, z) = z^a e^{-z} sum_n z^n / (a (a+1)...(a+n))
// with the principal power z^a; Re(a) > 0.
Cplx lower_incomplete_gamma(const Cplx& a, const Cplx& z);

// Dilogarithm by direct series sum_{k>=1} z^k / k^2, |z| < 1.
Cplx dilogarithm(const Cplx& z);

// (2 / (1 + sqrt(1 - x^2)))^{2*gamma - 1}, principal square root and power;
// requires x^2 off the real ray [1, inf).
Cplx conformal_power(const Cplx& x, double gamma_param);

} // namespace quintsect

#endif
