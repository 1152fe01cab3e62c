#pragma once

#include <cstddef>
#include <cstdint>

// Runtime-dispatched inner-loop kernels. Each has a scalar reference
// implementation and an AVX2 variant; the active backend is chosen once at
// startup (AVX2 when the CPU supports it) and can be forced with
// set_backend() or the OGL_KERNEL environment variable ("scalar"/"avx2").
// Variants are interchangeable: both produce identical output for identical
// input, which tests/test_kernels.cpp checks exhaustively.

namespace ogl::kernels {

enum class Backend { auto_detect, scalar, avx2 };

bool avx2_supported();

// Throws ogl::config_error if the requested backend is unsupported.
void set_backend(Backend b);

// The backend currently in effect (never auto_detect).
Backend active_backend();
const char* backend_name();

// Intersection of two strictly increasing uint32 sequences.
// intersect() writes the common elements to out and returns how many were
// written; intersect_count() just counts. out must have capacity
// min(na, nb) + 8: the AVX2 variant stores whole 8-lane blocks.
std::size_t intersect(const std::uint32_t* a, std::size_t na,
                      const std::uint32_t* b, std::size_t nb,
                      std::uint32_t* out);
std::size_t intersect_count(const std::uint32_t* a, std::size_t na,
                            const std::uint32_t* b, std::size_t nb);

// Counter-stream batch fill: out[j] = mix64(key + (start_counter+1+j)*GOLDEN),
// i.e. exactly the next len outputs of RandomStream{key} whose counter()
// equals start_counter. Bit-identical across backends.
void mix64_fill(std::uint64_t key, std::uint64_t start_counter,
                std::uint64_t* out, std::size_t len);

namespace detail {
std::size_t intersect_scalar(const std::uint32_t* a, std::size_t na,
                             const std::uint32_t* b, std::size_t nb,
                             std::uint32_t* out);
std::size_t intersect_count_scalar(const std::uint32_t* a, std::size_t na,
                                   const std::uint32_t* b, std::size_t nb);
void mix64_fill_scalar(std::uint64_t key, std::uint64_t start_counter,
                       std::uint64_t* out, std::size_t len);

#if defined(__x86_64__) || defined(_M_X64)
std::size_t intersect_avx2(const std::uint32_t* a, std::size_t na,
                           const std::uint32_t* b, std::size_t nb,
                           std::uint32_t* out);
std::size_t intersect_count_avx2(const std::uint32_t* a, std::size_t na,
                                 const std::uint32_t* b, std::size_t nb);
void mix64_fill_avx2(std::uint64_t key, std::uint64_t start_counter,
                     std::uint64_t* out, std::size_t len);
#endif
}  // namespace detail

}  // namespace ogl::kernels
