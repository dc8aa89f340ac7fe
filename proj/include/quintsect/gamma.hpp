#ifndef QUINTSECT_GAMMA_HPP
#define QUINTSECT_GAMMA_HPP

#include "quintsect/complex_utils.hpp"

namespace quintsect {

// log Gamma on the complex plane, principal branch (real on the positive real
// axis). Lanczos rational approximation on Re(z) >= 0.5, reflection formula
// elsewhere; about 13-14 significant digits in double precision.
//
// Throws PoleError when z is a nonpositive integer within kIntegerTol.
Cplx log_gamma(const Cplx& z);

// exp(log_gamma(z)), with the same pole behaviour.
Cplx gamma(const Cplx& z);

// 1/Gamma(z); returns exactly 0 at the poles instead of throwing.
Cplx reciprocal_gamma(const Cplx& z);

} // namespace quintsect

#endif
