#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "quintsect/errors.hpp"
#include "quintsect/gamma.hpp"
#include "quintsect/pochhammer.hpp"

using quintsect::Cplx;
using quintsect::MultiplicationQuery;
using quintsect::gauss_multiplication_residual;
using quintsect::log_pochhammer;
using quintsect::pochhammer;
using quintsect::PochhammerQuery;

TEST_CASE("pochhammer branch examples") {
    // nu = 0
    CHECK(std::abs(pochhammer(Cplx{7.0, 2.0}, Cplx{0.0, 0.0}) - Cplx{1.0, 0.0}) == 0.0);
    CHECK(std::abs(pochhammer(Cplx{0.0, 0.0}, Cplx{0.0, 0.0}) - Cplx{1.0, 0.0}) == 0.0);

    // lambda = -3, nu = 2: (-1)^2 3!/1! = 6, cross-checked against the
    // direct product (-3)(-2).
    const Cplx neg3_2 = pochhammer(Cplx{-3.0, 0.0}, Cplx{2.0, 0.0});
    CHECK(std::abs(neg3_2 - Cplx{6.0, 0.0}) < 1e-12);
    CHECK(std::abs(neg3_2 - Cplx{(-3.0) * (-2.0), 0.0}) < 1e-12);

    // lambda = -3, nu = 5 > 3: exactly zero.
    CHECK(std::abs(pochhammer(Cplx{-3.0, 0.0}, Cplx{5.0, 0.0})) == 0.0);

    // nu = -1: (2)_{-1} = (-1)^1 / (1-2)_1 = 1 = Gamma(1)/Gamma(2).
    CHECK(std::abs(pochhammer(Cplx{2.0, 0.0}, Cplx{-1.0, 0.0}) - Cplx{1.0, 0.0}) < 1e-14);
    const Cplx nonint = pochhammer(Cplx{2.5, 0.0}, Cplx{-2.0, 0.0});
    const Cplx quotient = std::exp(quintsect::log_gamma(Cplx{0.5, 0.0}) -
                                   quintsect::log_gamma(Cplx{2.5, 0.0}));
    CHECK(std::abs(nonint - quotient) < 1e-13 * std::abs(quotient) + 1e-15);
}

TEST_CASE("pochhammer error cases") {
    // Gamma(lambda+nu) pole with finite denominator: (1)_{-2} = Gamma(-1)/Gamma(1).
    CHECK_THROWS_AS(pochhammer(Cplx{1.0, 0.0}, Cplx{-2.0, 0.0}), quintsect::PoleError);
    // Both gammas at poles with non-integer separation impossible; force the
    // undefined quotient with integer lambda and non-integer-looking call:
    CHECK_THROWS_AS(pochhammer(Cplx{-2.0, 0.0}, Cplx{-3.0, 0.0}),
                    quintsect::UndefinedQuotientError);
    // Gamma(lambda) pole only: quotient is exactly 0.
    CHECK(std::abs(pochhammer(Cplx{-3.0, 0.0}, Cplx{0.5, 0.0})) == 0.0);
}

TEST_CASE("branch coherence: rising product vs gamma quotient") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> lam(1, 10);
    std::uniform_int_distribution<int> nu(1, 15);
    for (int trial = 0; trial < 200; ++trial) {
        const Cplx lambda{static_cast<double>(lam(rng)), 0.0};
        const Cplx n{static_cast<double>(nu(rng)), 0.0};
        const Cplx direct = pochhammer(lambda, n);
        const Cplx quotient = std::exp(quintsect::log_gamma(lambda + n) -
                                       quintsect::log_gamma(lambda));
        CHECK(std::abs(direct - quotient) <= 1e-12 * std::abs(direct));
    }
}

TEST_CASE("long rising products stay consistent across the switch") {
    // n > 50 goes through log-gamma; compare against the plain product.
    const Cplx lambda{2.5, 0.3};
    Cplx direct{1.0, 0.0};
    for (int j = 0; j < 60; ++j) direct *= lambda + static_cast<double>(j);
    const Cplx via_gamma = pochhammer(lambda, Cplx{60.0, 0.0});
    CHECK(std::abs(via_gamma - direct) <= 1e-12 * std::abs(direct));
}

TEST_CASE("log_pochhammer mirrors pochhammer") {
    const Cplx lp = log_pochhammer(Cplx{-3.0, 0.0}, Cplx{2.0, 0.0});
    CHECK(std::abs(std::exp(lp) - Cplx{6.0, 0.0}) < 1e-12);
    CHECK(std::exp(log_pochhammer(Cplx{-3.0, 0.0}, Cplx{5.0, 0.0})) == Cplx{0.0, 0.0});
    const Cplx generic = log_pochhammer(Cplx{1.3, 0.4}, Cplx{2.7, 0.0});
    const Cplx want = std::exp(quintsect::log_gamma(Cplx{4.0, 0.4}) -
                               quintsect::log_gamma(Cplx{1.3, 0.4}));
    CHECK(std::abs(std::exp(generic) - want) < 1e-12 * std::abs(want));
}

TEST_CASE("gauss multiplication examples") {
    // (1)_2 = 2 vs 2^2 (1/2)_1 (1)_1 = 2.
    CHECK(gauss_multiplication_residual({Cplx{1.0, 0.0}, 2, 1}) < 1e-14);
    // m = 1 collapses the product; both sides are the same call.
    CHECK(gauss_multiplication_residual({Cplx{0.37, -1.2}, 1, 4}) == 0.0);
    CHECK(gauss_multiplication_residual({Cplx{0.7, 0.0}, 5, 3}) < 1e-12);
    // n = 0: both sides 1.
    CHECK(gauss_multiplication_residual({Cplx{2.3, 0.4}, 3, 0}) == 0.0);
}

TEST_CASE("gauss multiplication across random draws") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> re(0.1, 4.0);
    std::uniform_real_distribution<double> im(-2.0, 2.0);
    std::uniform_int_distribution<int> m_dist(1, 5);
    std::uniform_int_distribution<int> n_dist(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiplicationQuery q{Cplx{re(rng), im(rng)}, m_dist(rng), n_dist(rng)};
        CHECK(gauss_multiplication_residual(q) < 1e-11);
    }
}
