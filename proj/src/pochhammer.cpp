#include "quintsect/pochhammer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quintsect/errors.hpp"
#include "quintsect/gamma.hpp"

namespace quintsect {
namespace {

// Above this rising-product length the gamma-quotient route is used to avoid
// overflow (e.g. (5r)! factors in decimated series).
constexpr std::int64_t kMaxDirectRising = 50;

Cplx rising_product(const Cplx& lambda, std::int64_t n) {
    Cplx result{1.0, 0.0};
    for (std::int64_t j = 0; j < n; ++j) {
        result *= lambda + static_cast<double>(j);
    }
    return result;
}

Cplx gamma_quotient(const Cplx& lambda, const Cplx& nu) {
    const bool top_pole = is_nonpositive_integer(lambda + nu);
    const bool bottom_pole = is_nonpositive_integer(lambda);
    if (top_pole && bottom_pole) {
        throw UndefinedQuotientError(
            "pochhammer: gamma quotient with poles in numerator and denominator");
    }
    if (top_pole) {
        throw PoleError("pochhammer: Gamma(lambda+nu) at a pole");
    }
    if (bottom_pole) {
        return {0.0, 0.0}; // finite / pole
    }
    return std::exp(log_gamma(lambda + nu) - log_gamma(lambda));
}

} // namespace

Cplx pochhammer(const PochhammerQuery& q) {
    const Cplx& lambda = q.lambda;
    const Cplx& nu = q.nu;

    // (i) nu = 0, with the (0)_0 = 1 convention.
    if (is_integer(nu) && nearest_integer(nu) == 0) {
        return {1.0, 0.0};
    }

    if (is_integer(nu)) {
        const std::int64_t n = nearest_integer(nu);
        if (n > 0) {
            if (is_nonpositive_integer(lambda)) {
                // (iii) / (iv): lambda = -k.
                const std::int64_t k = -nearest_integer(lambda);
                if (n > k) return {0.0, 0.0};
                // (-1)^n k!/(k-n)!
                double mag = 0.0;
                for (std::int64_t j = k - n + 1; j <= k; ++j) {
                    mag += std::log(static_cast<double>(j));
                }
                const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                return {sign * std::exp(mag), 0.0};
            }
            // (ii): rising product, switching to the gamma quotient for long
            // products where overflow is a risk.
            if (n <= kMaxDirectRising) {
                return rising_product(lambda, n);
            }
            return gamma_quotient(lambda, nu);
        }
        // nu = -n < 0.
        const std::int64_t n_abs = -n;
        if (!is_integer(lambda)) {
            // (v): (-1)^n / (1-lambda)_n.
            const double sign = (n_abs % 2 == 0) ? 1.0 : -1.0;
            return sign / pochhammer(1.0 - lambda, Cplx(static_cast<double>(n_abs), 0.0));
        }
        return gamma_quotient(lambda, nu);
    }

    return gamma_quotient(lambda, nu);
}

Cplx log_pochhammer(const Cplx& lambda, const Cplx& nu) {
    // Integer branches first, so exact zeros and signs survive.
    if (is_integer(nu)) {
        const Cplx value = pochhammer(PochhammerQuery{lambda, nu});
        const double mag = std::abs(value);
        if (mag == 0.0) {
            return {-std::numeric_limits<double>::infinity(), 0.0};
        }
        // Rebuild the log from magnitude and phase; for long rising products
        // go through log_gamma instead to keep the magnitude in range.
        if (std::isfinite(mag) && mag > 1e-290 && mag < 1e290) {
            return {std::log(mag), std::arg(value)};
        }
    }
    const bool top_pole = is_nonpositive_integer(lambda + nu);
    const bool bottom_pole = is_nonpositive_integer(lambda);
    if (top_pole && bottom_pole) {
        throw UndefinedQuotientError("log_pochhammer: undefined gamma quotient");
    }
    if (top_pole) {
        throw PoleError("log_pochhammer: Gamma(lambda+nu) at a pole");
    }
    if (bottom_pole) {
        return {-std::numeric_limits<double>::infinity(), 0.0};
    }
    return log_gamma(lambda + nu) - log_gamma(lambda);
}

double gauss_multiplication_residual(const MultiplicationQuery& q) {
    if (q.m < 1) throw SpecError("gauss_multiplication_residual: m must be positive");
    if (q.n < 0) throw SpecError("gauss_multiplication_residual: n must be non-negative");

    const double m = static_cast<double>(q.m);
    const double mn = static_cast<double>(q.m) * static_cast<double>(q.n);

    const Cplx lhs = pochhammer(q.b, Cplx(mn, 0.0));

    Cplx rhs = int_pow(Cplx(m, 0.0), static_cast<std::int64_t>(mn));
    for (int j = 1; j <= q.m; ++j) {
        rhs *= pochhammer((q.b + static_cast<double>(j - 1)) / m,
                          Cplx(static_cast<double>(q.n), 0.0));
    }
    return residual_metric(lhs, rhs);
}

} // namespace quintsect
