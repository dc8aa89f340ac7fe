#include "quintsect/gamma.hpp"

#include <array>
#include <numbers>

#include "quintsect/errors.hpp"

namespace quintsect {
namespace {

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey's set; also used by
// GSL and numerous complex-gamma ports). Relative error below 1e-13 on the
// half plane Re(z) >= 0.5.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeff = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178; // log(2*pi)/2

Cplx lanczos_log_gamma_right(const Cplx& z) {
    // Valid for Re(z) >= 0.5.
    Cplx sum = kLanczosCoeff[0];
    for (std::size_t k = 1; k < kLanczosCoeff.size(); ++k) {
        sum += kLanczosCoeff[k] / (z - 1.0 + static_cast<double>(k));
    }
    const Cplx t = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(t) - t + kHalfLog2Pi + std::log(sum);
}

} // namespace

Cplx log_gamma(const Cplx& z) {
    if (is_nonpositive_integer(z)) {
        throw PoleError("log_gamma: pole at nonpositive integer");
    }
    if (z.real() >= 0.5) {
        return lanczos_log_gamma_right(z);
    }
    // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    // The imaginary part may differ from the analytic continuation by a
    // multiple of 2*pi off the real axis; exp(log_gamma) is exact either way,
    // and every consumer in this library exponentiates.
    const Cplx pi_z = std::numbers::pi * z;
    return std::log(Cplx(std::numbers::pi, 0.0)) - std::log(std::sin(pi_z)) -
           lanczos_log_gamma_right(1.0 - z);
}

Cplx gamma(const Cplx& z) {
    return std::exp(log_gamma(z));
}

Cplx reciprocal_gamma(const Cplx& z) {
    if (is_nonpositive_integer(z)) {
        return {0.0, 0.0};
    }
    return std::exp(-log_gamma(z));
}

} // namespace quintsect
