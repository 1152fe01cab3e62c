#pragma once

#include <cmath>
#include <cstdint>

#include "ogl/errors.hpp"

namespace ogl {

// Falling factorial (x)_r = x(x-1)...(x-r+1), (x)_0 = 1.
// For integral x with 0 <= x < r the product hits an exact zero factor.
// Computed as a double product: integer inputs stay exact as long as every
// partial product fits in 53 bits, which covers the combinatorial weights
// used here (e.g. (m)_t for desk-scale m); larger values degrade gracefully
// to ~1 ulp per factor, fine for moment arithmetic.
inline double falling_factorial(double x, int r) {
    if (r < 0) throw guard_error("falling_factorial: r must be >= 0");
    double acc = 1.0;
    for (int i = 0; i < r; ++i) {
        double f = x - static_cast<double>(i);
        if (f == 0.0) return 0.0;
        acc *= f;
    }
    return acc;
}

inline std::uint64_t factorial_u64(int r) {
    if (r < 0 || r > 20) throw guard_error("factorial_u64: r outside [0,20]");
    std::uint64_t acc = 1;
    for (int i = 2; i <= r; ++i) acc *= static_cast<std::uint64_t>(i);
    return acc;
}

// Exact n-choose-k via 128-bit intermediates; throws on u64 overflow.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    __uint128_t acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > ~static_cast<std::uint64_t>(0))
            throw guard_error("binomial_u64: overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace ogl
