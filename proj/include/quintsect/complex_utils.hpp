#ifndef QUINTSECT_COMPLEX_UTILS_HPP
#define QUINTSECT_COMPLEX_UTILS_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace quintsect {

// The universal scalar of the library. All parameters, arguments and results
// are complex doubles in rectangular form.
using Cplx = std::complex<double>;

// A complex value counts as an integer when it is within this distance of one
// in both components. Used for all branch selection.
inline constexpr double kIntegerTol = 1e-12;

inline bool is_integer(const Cplx& z, double tol = kIntegerTol) {
    return std::abs(z.imag()) <= tol &&
           std::abs(z.real() - std::round(z.real())) <= tol;
}

inline std::int64_t nearest_integer(const Cplx& z) {
    return static_cast<std::int64_t>(std::llround(z.real()));
}

inline bool is_nonpositive_integer(const Cplx& z, double tol = kIntegerTol) {
    return is_integer(z, tol) && std::round(z.real()) <= 0.5;
}

// w^s through the principal logarithm: w^s = exp(s (log|w| + i Arg w)) with
// Arg in (-pi, pi]. 0^0 = 1 and 0^s = 0 for Re(s) > 0.
inline Cplx principal_pow(const Cplx& base, const Cplx& exponent) {
    if (base == Cplx(0.0, 0.0)) {
        if (exponent == Cplx(0.0, 0.0)) return {1.0, 0.0};
        return {0.0, 0.0};
    }
    const Cplx log_base(std::log(std::abs(base)), std::arg(base));
    return std::exp(exponent * log_base);
}

// base^n for integer n by repeated squaring, so integer powers stay exact
// products instead of going through log/exp.
inline Cplx int_pow(Cplx base, std::int64_t n) {
    if (n < 0) return 1.0 / int_pow(base, -n);
    Cplx result{1.0, 0.0};
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

// Scale-aware distance |a-b| / (1 + max(|a|, |b|)), the residual metric used
// for every identity check in the library.
inline double residual_metric(const Cplx& lhs, const Cplx& rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

inline bool approx_equal(const Cplx& a, const Cplx& b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace quintsect

#endif
