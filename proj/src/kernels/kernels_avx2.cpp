#include "ogl/kernels.hpp"
#include "ogl/rng.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace ogl::kernels::detail {

namespace {

// Packs the lanes selected by an 8-bit mask to the front (permutevar indices).
struct CompressTable {
    alignas(32) std::uint32_t idx[256][8];
    CompressTable() {
        for (int m = 0; m < 256; ++m) {
            int k = 0;
            for (int b = 0; b < 8; ++b)
                if (m & (1 << b)) idx[m][k++] = static_cast<std::uint32_t>(b);
            for (; k < 8; ++k) idx[m][k] = 0;
        }
    }
};
const CompressTable g_compress;

inline __m256i rotate_lanes1(__m256i v) {
    const __m256i r = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
    return _mm256_permutevar8x32_epi32(v, r);
}

// Bit i set iff va lane i equals some element of vb.
inline unsigned match_mask(__m256i va, __m256i vb) {
    __m256i cmp = _mm256_cmpeq_epi32(va, vb);
    for (int r = 1; r < 8; ++r) {
        vb = rotate_lanes1(vb);
        cmp = _mm256_or_si256(cmp, _mm256_cmpeq_epi32(va, vb));
    }
    return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(cmp)));
}

// Low 64 bits of a 64x64 multiply, 4 lanes (AVX2 has no mullo_epi64).
inline __m256i mullo64(__m256i a, __m256i b) {
    __m256i bswap = _mm256_shuffle_epi32(b, 0xB1);
    __m256i prodlh = _mm256_mullo_epi32(a, bswap);
    __m256i zero = _mm256_setzero_si256();
    __m256i prodlh2 = _mm256_hadd_epi32(prodlh, zero);
    __m256i prodlh3 = _mm256_shuffle_epi32(prodlh2, 0x73);
    __m256i prodll = _mm256_mul_epu32(a, b);
    return _mm256_add_epi64(prodll, prodlh3);
}

}  // namespace

// Block-wise sorted-set intersection: compare an 8-lane block of a against
// all rotations of an 8-lane block of b, then advance whichever block has
// the smaller maximum. Inputs strictly increasing, so each equal pair is
// seen in exactly one block pairing.
std::size_t intersect_avx2(const std::uint32_t* a, std::size_t na,
                           const std::uint32_t* b, std::size_t nb,
                           std::uint32_t* out) {
    std::size_t i = 0, j = 0, k = 0;
    while (i + 8 <= na && j + 8 <= nb) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
        unsigned mask = match_mask(va, vb);
        __m256i perm =
            _mm256_load_si256(reinterpret_cast<const __m256i*>(g_compress.idx[mask]));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k),
                            _mm256_permutevar8x32_epi32(va, perm));
        k += static_cast<std::size_t>(__builtin_popcount(mask));
        std::uint32_t amax = a[i + 7], bmax = b[j + 7];
        if (amax <= bmax) i += 8;
        if (bmax <= amax) j += 8;
    }
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

std::size_t intersect_count_avx2(const std::uint32_t* a, std::size_t na,
                                 const std::uint32_t* b, std::size_t nb) {
    std::size_t i = 0, j = 0, k = 0;
    while (i + 8 <= na && j + 8 <= nb) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
        k += static_cast<std::size_t>(__builtin_popcount(match_mask(va, vb)));
        std::uint32_t amax = a[i + 7], bmax = b[j + 7];
        if (amax <= bmax) i += 8;
        if (bmax <= amax) j += 8;
    }
    while (i < na && j < nb) {
        std::uint32_t x = a[i], y = b[j];
        i += (x <= y);
        j += (y <= x);
        k += (x == y);
    }
    return k;
}

void mix64_fill_avx2(std::uint64_t key, std::uint64_t start_counter,
                     std::uint64_t* out, std::size_t len) {
    const __m256i mul1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ULL));
    const __m256i mul2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBULL));
    const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * RNG_GOLDEN));
    std::uint64_t base = key + (start_counter + 1) * RNG_GOLDEN;
    __m256i state = _mm256_setr_epi64x(
        static_cast<long long>(base), static_cast<long long>(base + RNG_GOLDEN),
        static_cast<long long>(base + 2 * RNG_GOLDEN),
        static_cast<long long>(base + 3 * RNG_GOLDEN));
    std::size_t j = 0;
    for (; j + 4 <= len; j += 4) {
        __m256i z = state;
        z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
        z = mullo64(z, mul1);
        z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
        z = mullo64(z, mul2);
        z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), z);
        state = _mm256_add_epi64(state, step);
    }
    if (j < len) mix64_fill_scalar(key, start_counter + j, out + j, len - j);
}

}  // namespace ogl::kernels::detail

#endif  // x86_64
