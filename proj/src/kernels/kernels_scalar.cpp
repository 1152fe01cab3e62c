#include "ogl/kernels.hpp"
#include "ogl/rng.hpp"

namespace ogl::kernels::detail {

std::size_t intersect_scalar(const std::uint32_t* a, std::size_t na,
                             const std::uint32_t* b, std::size_t nb,
                             std::uint32_t* out) {
    std::size_t i = 0, j = 0, k = 0;
    while (i < na && j < nb) {
        std::uint32_t x = a[i], y = b[j];
        if (x < y) {
            ++i;
        } else if (y < x) {
            ++j;
        } else {
            out[k++] = x;
            ++i;
            ++j;
        }
    }
    return k;
}

std::size_t intersect_count_scalar(const std::uint32_t* a, std::size_t na,
                                   const std::uint32_t* b, std::size_t nb) {
    std::size_t i = 0, j = 0, k = 0;
    while (i < na && j < nb) {
        std::uint32_t x = a[i], y = b[j];
        i += (x <= y);
        j += (y <= x);
        k += (x == y);
    }
    return k;
}

void mix64_fill_scalar(std::uint64_t key, std::uint64_t start_counter,
                       std::uint64_t* out, std::size_t len) {
    std::uint64_t state = key + start_counter * RNG_GOLDEN;
    for (std::size_t j = 0; j < len; ++j) {
        state += RNG_GOLDEN;
        out[j] = mix64(state);
    }
}

}  // namespace ogl::kernels::detail
