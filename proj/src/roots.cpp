#include "quintsect/roots.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quintsect {
namespace {

const std::array<Cplx, 5>& root_table() {
    static const std::array<Cplx, 5> table = [] {
        std::array<Cplx, 5> t{};
        for (int k = 0; k < 5; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / 5.0;
            t[k] = {std::cos(theta), std::sin(theta)};
        }
        t[0] = {1.0, 0.0};
        return t;
    }();
    return table;
}

double checked_root_sum(double direct, double residue_value) {
    if (std::abs(direct - residue_value) > 1e-12) {
        throw std::logic_error("root-of-unity sum: residue test and direct sum disagree");
    }
    return residue_value;
}

} // namespace

Cplx fifth_root(std::int64_t power) {
    std::int64_t k = power % 5;
    if (k < 0) k += 5;
    return root_table()[static_cast<std::size_t>(k)];
}

RootOfUnity make_fifth_root(std::int64_t power) {
    std::int64_t k = power % 5;
    if (k < 0) k += 5;
    return RootOfUnity{kSectionOrder, k, root_table()[static_cast<std::size_t>(k)]};
}

double identity_one_sum(std::int64_t r) {
    if (r < 0) throw std::invalid_argument("identity_one_sum: r must be non-negative");
    Cplx direct{0.0, 0.0};
    for (std::int64_t k = 0; k < 5; ++k) {
        direct += fifth_root(2 * r * k);
    }
    const double residue_value = (r % 5 == 0) ? 5.0 : 0.0;
    return checked_root_sum(std::abs(direct), residue_value);
}

double identity_two_sum(std::int64_t r) {
    if (r < 0) throw std::invalid_argument("identity_two_sum: r must be non-negative");
    Cplx direct{0.0, 0.0};
    for (std::int64_t k = 0; k < 5; ++k) {
        direct += fifth_root((2 * r + 1) * k);
    }
    const double residue_value = (r % 5 == 2) ? 5.0 : 0.0;
    return checked_root_sum(std::abs(direct), residue_value);
}

} // namespace quintsect
