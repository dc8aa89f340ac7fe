#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quintsect/roots.hpp"

using quintsect::Cplx;
using quintsect::fifth_root;
using quintsect::identity_one_sum;
using quintsect::identity_two_sum;
using quintsect::make_fifth_root;

TEST_CASE("fifth_root anchor values") {
    CHECK(fifth_root(0) == Cplx{1.0, 0.0});
    CHECK(fifth_root(5) == Cplx{1.0, 0.0});

    // cos(2*pi/5) + i sin(2*pi/5) from the trigonometric oracle.
    const double theta = 2.0 * std::numbers::pi / 5.0;
    const Cplx want{std::cos(theta), std::sin(theta)};
    CHECK(std::abs(fifth_root(1) - want) < 1e-15);
    CHECK(std::abs(fifth_root(1).real() - 0.3090169943749474) < 1e-15);
    CHECK(std::abs(fifth_root(1).imag() - 0.9510565162951535) < 1e-15);
}

TEST_CASE("fifth_root periodicity and modulus") {
    for (int p = -12; p <= 12; ++p) {
        CHECK(fifth_root(p) == fifth_root(p + 5));
        CHECK(std::abs(std::abs(fifth_root(p)) - 1.0) <= 1e-15);
    }
    const auto root = make_fifth_root(7);
    CHECK(root.order == 5);
    CHECK(root.power == 2);
    CHECK(root.value == fifth_root(2));
}

TEST_CASE("identity one") {
    CHECK(identity_one_sum(0) == 5.0);
    CHECK(identity_one_sum(5) == 5.0);
    CHECK(identity_one_sum(3) == 0.0);
}

TEST_CASE("identity two") {
    CHECK(identity_two_sum(2) == 5.0);
    CHECK(identity_two_sum(0) == 0.0);
    CHECK(identity_two_sum(7) == 5.0);
}

TEST_CASE("identities agree with direct complex sums for r in 0..100") {
    for (std::int64_t r = 0; r <= 100; ++r) {
        Cplx direct1{0.0, 0.0};
        Cplx direct2{0.0, 0.0};
        for (std::int64_t k = 0; k < 5; ++k) {
            direct1 += fifth_root(2 * r * k);
            direct2 += fifth_root((2 * r + 1) * k);
        }
        CHECK(std::abs(direct1 - Cplx{identity_one_sum(r), 0.0}) < 1e-12);
        CHECK(std::abs(direct2 - Cplx{identity_two_sum(r), 0.0}) < 1e-12);
    }
}
