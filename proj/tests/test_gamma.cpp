#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "quintsect/errors.hpp"
#include "quintsect/gamma.hpp"

using quintsect::Cplx;
using quintsect::gamma;
using quintsect::log_gamma;
using quintsect::reciprocal_gamma;

namespace {

double rel_err(const Cplx& got, const Cplx& want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

} // namespace

TEST_CASE("log_gamma anchor values") {
    CHECK(std::abs(log_gamma(Cplx{1.0, 0.0})) < 1e-14);

    // Gamma(1/2) = sqrt(pi), expected value evaluated from the closed form.
    const double want_half = std::log(std::sqrt(std::numbers::pi));
    CHECK(std::abs(log_gamma(Cplx{0.5, 0.0}).real() - want_half) < 1e-14);
    CHECK(std::abs(log_gamma(Cplx{0.5, 0.0}).imag()) < 1e-14);

    // Gamma(5) = 4!, brute-force factorial.
    double factorial = 1.0;
    for (int k = 1; k <= 4; ++k) factorial *= k;
    CHECK(std::abs(log_gamma(Cplx{5.0, 0.0}).real() - std::log(factorial)) < 1e-13);
}

TEST_CASE("log_gamma matches std::lgamma on the real axis") {
    for (double x = 0.05; x < 30.0; x += 0.173) {
        const double want = std::lgamma(x);
        const double got = log_gamma(Cplx{x, 0.0}).real();
        CHECK(std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
    // Negative non-integer arguments go through the reflection path.
    for (double x = -0.35; x > -8.0; x -= 0.97) {
        const double want = std::lgamma(x); // log |Gamma(x)|
        const double got = log_gamma(Cplx{x, 0.0}).real();
        CHECK(std::abs(got - want) <= 1e-11 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("log_gamma poles throw") {
    CHECK_THROWS_AS(log_gamma(Cplx{0.0, 0.0}), quintsect::PoleError);
    CHECK_THROWS_AS(log_gamma(Cplx{-3.0, 0.0}), quintsect::PoleError);
    CHECK_THROWS_AS(log_gamma(Cplx{-7.0, 1e-14}), quintsect::PoleError);
    CHECK_THROWS_AS(gamma(Cplx{-1.0, 0.0}), quintsect::PoleError);
    CHECK(std::abs(reciprocal_gamma(Cplx{-4.0, 0.0})) == 0.0);
}

TEST_CASE("reflection consistency on random points") {
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> re(-5.0, 5.0);
    std::uniform_real_distribution<double> im(-5.0, 5.0);
    int checked = 0;
    while (checked < 100) {
        const Cplx z{re(rng), im(rng)};
        if (std::abs(z.imag()) < 0.05 &&
            std::abs(z.real() - std::round(z.real())) < 0.05) {
            continue; // stay off the poles and the cancellation-prone axis
        }
        const Cplx lhs = std::exp(log_gamma(z)) * std::exp(log_gamma(1.0 - z));
        const Cplx rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
        ++checked;
    }
}

TEST_CASE("recurrence Gamma(z+1) = z Gamma(z)") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> re(-4.5, 6.0);
    std::uniform_real_distribution<double> im(-4.0, 4.0);
    int checked = 0;
    while (checked < 100) {
        const Cplx z{re(rng), im(rng)};
        if (std::abs(z.imag()) < 0.05 && z.real() < 0.5) continue;
        const Cplx lhs = std::exp(log_gamma(z + 1.0));
        const Cplx rhs = z * std::exp(log_gamma(z));
        CHECK(rel_err(lhs, rhs) <= 1e-12);
        ++checked;
    }
}

TEST_CASE("exp(log_gamma) reproduces Gamma on sample values") {
    // Gamma(3.5) = 2.5 * 1.5 * 0.5 * sqrt(pi)
    const double want = 2.5 * 1.5 * 0.5 * std::sqrt(std::numbers::pi);
    CHECK(rel_err(gamma(Cplx{3.5, 0.0}), Cplx{want, 0.0}) < 1e-13);
    // |Gamma(i)|^2 = pi / sinh(pi)
    const Cplx gi = gamma(Cplx{0.0, 1.0});
    const double want_sq = std::numbers::pi / std::sinh(std::numbers::pi);
    CHECK(std::abs(std::norm(gi) - want_sq) < 1e-13);
}
