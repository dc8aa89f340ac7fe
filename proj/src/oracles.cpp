#include "quintsect/oracles.hpp"

#include <cmath>
#include <numbers>

#include "quintsect/errors.hpp"

namespace quintsect {
namespace {

constexpr double kSumEps = 1e-17;
constexpr int kMaxOracleTerms = 20000;

struct AgmState {
    Cplx agm;        // common limit of a_n, b_n
    Cplx c_square_sum; // sum_n 2^{n-1} c_n^2
};

AgmState run_agm(const Cplx& modulus) {
    const Cplx k2 = modulus * modulus;
    if ((Cplx{1.0, 0.0} - k2).real() <= 0.0) {
        throw DomainError("AGM elliptic integral: 1 - k^2 must lie in the right half plane");
    }
    Cplx a{1.0, 0.0};
    Cplx b = std::sqrt(Cplx{1.0, 0.0} - k2);
    Cplx c = modulus;
    Cplx sum = 0.5 * c * c;
    double scale = 1.0;
    for (int n = 0; n < 64; ++n) {
        const Cplx a_next = 0.5 * (a + b);
        const Cplx b_next = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = a_next;
        b = b_next;
        scale *= 2.0;
        sum += scale * 0.5 * c * c;
        if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
    }
    return {a, sum};
}

} // namespace

Cplx agm_elliptic_k(const Cplx& modulus) {
    const AgmState s = run_agm(modulus);
    return std::numbers::pi / (2.0 * s.agm);
}

Cplx agm_elliptic_e(const Cplx& modulus) {
    const AgmState s = run_agm(modulus);
    const Cplx big_k = std::numbers::pi / (2.0 * s.agm);
    return big_k * (Cplx{1.0, 0.0} - s.c_square_sum);
}

Cplx error_function(const Cplx& z) {
    // erf(z) = (2/sqrt(pi)) sum_n (-1)^n z^{2n+1} / (n! (2n+1))
    const Cplx z2 = z * z;
    Cplx power = z; // z^{2n+1} / n!
    Cplx sum{0.0, 0.0};
    for (int n = 0; n < kMaxOracleTerms; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const Cplx term = sign * power / (2.0 * n + 1.0);
        sum += term;
        if (std::abs(term) <= kSumEps * (1.0 + std::abs(sum)) && n > 2) break;
        power *= z2 / (n + 1.0);
    }
    return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

Cplx lower_incomplete_gamma(const Cplx& a, const Cplx& z) {
    if (a.real() <= 0.0) {
        throw DomainError("lower_incomplete_gamma: Re(a) must be positive");
    }
    if (z == Cplx{0.0, 0.0}) return {0.0, 0.0};
    Cplx term = 1.0 / a; // z^n / (a (a+1) ... (a+n)) at n = 0
    Cplx sum = term;
    for (int n = 1; n < kMaxOracleTerms; ++n) {
        term *= z / (a + static_cast<double>(n));
        sum += term;
        if (std::abs(term) <= kSumEps * (1.0 + std::abs(sum))) break;
    }
    return principal_pow(z, a) * std::exp(-z) * sum;
}

Cplx dilogarithm(const Cplx& z) {
    if (std::abs(z) >= 1.0) {
        throw DomainError("dilogarithm: direct series needs |z| < 1");
    }
    Cplx power = z;
    Cplx sum{0.0, 0.0};
    for (int k = 1; k < kMaxOracleTerms; ++k) {
        const Cplx term = power / static_cast<double>(k * k);
        sum += term;
        if (std::abs(term) <= kSumEps * (1.0 + std::abs(sum))) break;
        power *= z;
    }
    return sum;
}

Cplx conformal_power(const Cplx& x, double gamma_param) {
    const Cplx w = Cplx{1.0, 0.0} - x * x;
    if (w.imag() == 0.0 && w.real() <= 0.0) {
        throw DomainError("conformal_power: x^2 on the branch ray [1, inf)");
    }
    const Cplx base = 2.0 / (1.0 + std::sqrt(w));
    return principal_pow(base, Cplx{2.0 * gamma_param - 1.0, 0.0});
}

} // namespace quintsect
