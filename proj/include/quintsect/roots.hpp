#ifndef QUINTSECT_ROOTS_HPP
#define QUINTSECT_ROOTS_HPP

#include <cstdint>

#include "quintsect/complex_utils.hpp"

namespace quintsect {

// Fifth roots of unity. The multisection order is fixed at 5 throughout the
// library; the constant is isolated here.
inline constexpr int kSectionOrder = 5;

// A power of alpha = exp(2*pi*i/5), reduced mod 5.
struct RootOfUnity {
    int order = kSectionOrder;
    std::int64_t power = 0;
    Cplx value{1.0, 0.0};
};

// exp(2*pi*i*power/5), power reduced mod 5 first (negative powers allowed).
Cplx fifth_root(std::int64_t power);

RootOfUnity make_fifth_root(std::int64_t power);

// 1 + a^{2r} + a^{4r} + a^{6r} + a^{8r}: 5 when r = 0 (mod 5), else 0.
// Computed both by residue test and by direct complex summation; the two
// routes must agree to 1e-12 (internal check).
double identity_one_sum(std::int64_t r);

// 1 + a^{2r+1} + a^{4r+2} + a^{6r+3} + a^{8r+4}: 5 when r = 2 (mod 5), else 0.
double identity_two_sum(std::int64_t r);

} // namespace quintsect

#endif
